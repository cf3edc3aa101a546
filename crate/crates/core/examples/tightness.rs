//! Tight, ν-tight and C-tight verdicts, with their counterexamples.

use std::collections::BTreeSet;

use powcolor::analysis::{
    c_tight_counterexample, classes_maximal_lawful, is_tight, nu_tight_counterexample,
    tight_counterexample,
};
use powcolor::table::{ColoringTable, SpaceSig};

fn main() {
    let sig = SpaceSig::new(2, 3, 3).unwrap();
    let first = ColoringTable::from_fn(sig, |x| x.coords()[0] as usize).unwrap();
    println!(
        "x(0) on ^2 3: tight = {}, classes maximal lawful = {}",
        is_tight(&first),
        classes_maximal_lawful(&first)
    );
    for nu in 1..=3 {
        match nu_tight_counterexample(&first, nu) {
            None => println!("  {nu}-tight"),
            Some(gap) => {
                let pts: Vec<String> = gap.points.iter().map(|x| x.to_string()).collect();
                println!(
                    "  not {nu}-tight: {} all miss color {}",
                    pts.join(" "),
                    gap.color
                )
            }
        }
    }

    // one spare color nobody uses
    let spare = first.with_mu(4).unwrap();
    if let Some(gap) = tight_counterexample(&spare) {
        println!("with μ = 4: {} can be recolored {}", gap.point, gap.color);
    }
    let used: BTreeSet<usize> = (0..3).collect();
    println!(
        "C-tight over {{0,1,2}}: {}",
        c_tight_counterexample(&spare, &used).is_none()
    );
}
