//! Branches of the binary tree as vectors that pairwise agree on an
//! initial segment and disagree on the rest.

use powcolor::construct::{almost_disjoint_family, disagreement_start};

fn main() {
    let fam = almost_disjoint_family(4, 6).unwrap();
    for v in &fam {
        println!("{v:?}");
    }
    for a in 0..fam.len() {
        let starts: Vec<String> = (0..fam.len())
            .map(|b| match disagreement_start(&fam[a], &fam[b]) {
                Some(s) => s.to_string(),
                None => "-".into(),
            })
            .collect();
        println!("row {a}: {}", starts.join(" "));
    }
}
