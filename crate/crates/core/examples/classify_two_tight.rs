//! Single-coordinate classification of 2-tight tables, and what a fresh
//! color on a mix point does to it.

use powcolor::analysis::{
    classify_2tight, is_nu_tight, is_proper, mix_closure_check, TwoTightOutcome,
};
use powcolor::construct::trivial;
use powcolor::perm::Permutation;
use powcolor::point::FinitePoint;
use powcolor::table::{ColoringTable, SpaceSig};

fn report(name: &str, t: &ColoringTable) {
    match classify_2tight(t).unwrap() {
        TwoTightOutcome::Factor(c) => {
            println!(
                "{name}: F(x) = h(x({})) with h = {:?}",
                c.coordinate, c.class_map
            )
        }
        TwoTightOutcome::Failure(w) => {
            println!("{name}: no coordinate works");
            for v in w {
                println!("  coordinate {}: {} vs {}", v.coordinate, v.first, v.second);
            }
        }
    }
}

fn main() {
    let sig = SpaceSig::new(2, 3, 3).unwrap();
    let t = trivial(sig, 1, &Permutation::swap(3, 0, 1).unwrap()).unwrap();
    report("swap on x(1)", &t);

    // z mixes c0 and c1; give it a color of its own
    let (c0, c1, z) = (
        FinitePoint::constant(2, 0),
        FinitePoint::constant(2, 1),
        FinitePoint::new(vec![0, 1]),
    );
    let mut colors = t.colors().to_vec();
    colors[sig.encode(&z).unwrap()] = 3;
    let bad = ColoringTable::new(sig.with_mu(4).unwrap(), colors).unwrap();
    println!(
        "recolored: proper {}, 2-tight {}, mix closed {}",
        is_proper(&bad),
        is_nu_tight(&bad, 2),
        mix_closure_check(&bad, &[c0, c1], &z).unwrap()
    );
    report("recolored", &bad);
}
