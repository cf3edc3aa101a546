//! Gluing colorings of pieces into one coloring, from a JSON descriptor.

use powcolor::analysis::{is_proper, is_tight};
use powcolor::construct::Descriptor;

fn main() {
    let text = r#"{"kind": "partition", "lambda": 3, "kappa": 4, "pieces": [
        {"first_coordinate": [0, 1], "coloring": {"kind": "parity", "k": 1, "m": 4}},
        {"first_coordinate": [2, 3], "coloring": {"kind": "cylinder", "lambda": 3,
            "coordinates": [0], "base": {"kind": "trivial", "lambda": 1, "kappa": 4, "coordinate": 0}}}
    ]}"#;
    let d = Descriptor::from_json(text).unwrap();
    match d.table(None) {
        Ok(t) => println!(
            "{} colors, proper {}, tight {}",
            t.range().len(),
            is_proper(&t),
            is_tight(&t)
        ),
        Err(e) => println!("rejected: {e}"),
    }

    let t = Descriptor::from_json(r#"{"kind": "theorem10"}"#)
        .unwrap()
        .table(Some(powcolor::table::SpaceSig::new(3, 4, 10).unwrap()))
        .unwrap();
    println!(
        "composite on ^3 4: {} colors, proper {}, tight {}",
        t.range().len(),
        is_proper(&t),
        is_tight(&t)
    );
}
