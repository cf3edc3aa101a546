//! Lifting a coloring of a few coordinates to the whole product.

use std::sync::Arc;

use powcolor::analysis::{is_c_tight, is_proper};
use powcolor::construct::{
    cylinder_extend_table, parity_coloring, parity_table, Cylinder, LazyColoring,
};
use powcolor::point::TailPoint;

fn main() {
    let base = parity_table(0, 2).unwrap();
    let lifted = cylinder_extend_table(&base, &[2], 3).unwrap();
    println!("{:?} -> {:?}", base.colors(), lifted.colors());
    println!(
        "proper {}, c-tight {}",
        is_proper(&lifted),
        is_c_tight(&lifted, &lifted.range())
    );

    let lazy = Cylinder::new(vec![1, 4, 5], Arc::new(parity_coloring(1))).unwrap();
    let x = TailPoint::new(vec![9, 3, 9, 9, 2], 8);
    println!(
        "{x}: {} (depends on < {})",
        lazy.color(&x).unwrap(),
        lazy.dependency_bound(&x).unwrap()
    );
}
