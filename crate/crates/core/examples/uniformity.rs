//! Strong and weak uniformity: constants keep their color, or some
//! pairwise totally different clique realizes every color.

use powcolor::analysis::{enumerate_proper, is_strongly_uniform, weak_uniformity_witness};
use powcolor::table::SpaceSig;

fn main() {
    let sig = SpaceSig::new(2, 3, 3).unwrap();
    for t in enumerate_proper(sig) {
        let t = t.unwrap();
        let clique = weak_uniformity_witness(&t)
            .unwrap()
            .expect("weakly uniform");
        let clique: Vec<String> = clique.iter().map(|r| r.to_string()).collect();
        println!(
            "{:?} strong {:5} clique {}",
            t.colors(),
            is_strongly_uniform(&t).unwrap(),
            clique.join(" ")
        );
    }
}
