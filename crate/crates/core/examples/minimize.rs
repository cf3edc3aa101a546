//! Greedy descent to a minimal proper coloring below a given one.

use powcolor::analysis::{is_minimal, minimality_counterexample};
use powcolor::construct::minimize;
use powcolor::table::{ColoringTable, SpaceSig};

fn main() {
    // x(0), with the row x(1) = 0 pushed up by 3
    let sig = SpaceSig::new(2, 3, 6).unwrap();
    let t = ColoringTable::from_fn(sig, |x| {
        let x = x.coords();
        x[0] as usize + if x[1] == 0 { 3 } else { 0 }
    })
    .unwrap();
    println!("input    {:?} minimal {}", t.colors(), is_minimal(&t));
    if let Some(gap) = minimality_counterexample(&t) {
        println!("  e.g. {} can drop to {}", gap.point, gap.color);
    }
    let m = minimize(&t).unwrap();
    println!(
        "minimized {:?} ({} lowered), minimal {}",
        m.table.colors(),
        m.lowered,
        is_minimal(&m.table)
    );
}
