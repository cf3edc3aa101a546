//! The parity coloring of `^{2k+1}m`: classes of size `2^{2k}`, each
//! maximal lawful.

use powcolor::analysis::{is_c_tight, is_maximal_lawful, is_proper};
use powcolor::construct::parity_table;

fn main() {
    for (k, m) in [(1, 2), (1, 4), (2, 2)] {
        let t = parity_table(k, m).unwrap();
        let classes = t.color_classes();
        let sizes: std::collections::BTreeSet<usize> = classes.values().map(Vec::len).collect();
        let lawful = classes
            .values()
            .all(|c| is_maximal_lawful(c, t.sig()).unwrap());
        println!(
            "k={k} m={m}: {} points, {} colors, class sizes {:?}, proper {}, maximal lawful {}, c-tight {}",
            t.sig().size(),
            classes.len(),
            sizes,
            is_proper(&t),
            lawful,
            is_c_tight(&t, &t.range()),
        );
    }
}
