//! Every proper coloring of `^2 3` with 3 colors reads off a single
//! coordinate through a permutation.

use powcolor::analysis::{enumerate_proper, extract_principal_form, PrincipalOutcome};
use powcolor::table::SpaceSig;

fn main() {
    let sig = SpaceSig::new(2, 3, 3).unwrap();
    let mut count = 0;
    for table in enumerate_proper(sig) {
        let table = table.unwrap();
        count += 1;
        match extract_principal_form(&table).unwrap() {
            PrincipalOutcome::Principal(form) => println!(
                "{:?}  F(x) = π(x({})) with π = {:?}",
                table.colors(),
                form.coordinate,
                form.permutation.images()
            ),
            PrincipalOutcome::NotTrivial(w) => println!("{:?}  not trivial: {w:?}", table.colors()),
        }
    }
    println!("{count} proper colorings");
}
