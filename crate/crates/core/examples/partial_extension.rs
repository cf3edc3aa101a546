//! Extending a proper coloring of part of the space while keeping its
//! pattern of equal colors.

use std::collections::BTreeMap;

use powcolor::analysis::is_proper;
use powcolor::construct::extend_partial;
use powcolor::point::FinitePoint;

fn main() {
    let partial: BTreeMap<FinitePoint, usize> = [(vec![0, 0], 7), (vec![0, 1], 7), (vec![0, 2], 3)]
        .into_iter()
        .map(|(x, c)| (FinitePoint::new(x), c))
        .collect();
    let f = extend_partial(2, 3, &partial).unwrap();
    println!(
        "extension on ^2 3 with μ = {}, proper {}",
        f.sig().mu(),
        is_proper(&f)
    );
    for (x, g) in &partial {
        println!("  G({x}) = {g}  F({x}) = {}", f.eval(x).unwrap());
    }
    for x in f.sig().points().filter(|x| x.coords()[0] != 0) {
        println!("  F({x}) = {}", f.eval(&x).unwrap());
    }
}
