//! Lazy evaluation of the composite coloring of `^ωω` on eventually
//! constant points, with integer codes and ranks.

use powcolor::construct::{composite_coloring, rank_in_b, LazyColoring};
use powcolor::point::TailPoint;
use powcolor::sampling::sample_check;

fn main() {
    let f = composite_coloring();
    let points = [
        TailPoint::constant(0),
        TailPoint::new(vec![2, 0, 0], 0),
        TailPoint::new(vec![2, 0, 1], 0),
        TailPoint::new(vec![5, 7, 1, 9, 4], 3),
    ];
    for x in &points {
        let code = f.color(x).unwrap();
        let int = code
            .int_code_within(256)
            .map_or("huge".to_string(), |n| n.to_string());
        let rank = rank_in_b(&code).map_or_else(|e| e.to_string(), |r| r.to_string());
        println!(
            "{x:>14}  code {code}  int {int}  rank {rank}  depends on < {}",
            f.dependency_bound(x).unwrap()
        );
    }

    // the color is not determined by any finite set of coordinates
    for i in 1..=4u64 {
        let x = TailPoint::new(vec![2 * i], 0);
        let y = x.with_coord(2 * i as usize, 1);
        println!(
            "{x} vs {y}: {} vs {}",
            f.color(&x).unwrap(),
            f.color(&y).unwrap()
        );
    }

    let o = sample_check(&f, 1, 10_000, 20).unwrap();
    println!(
        "sampled: {} proper failures in {} pairs, {} bound failures in {} mutations",
        o.proper_failures, o.pairs, o.bound_failures, o.mutations
    );
}
