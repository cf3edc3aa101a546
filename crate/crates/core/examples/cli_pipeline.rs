//! `gen`, `check` and `classify` driven in-process, as the binary runs them.

use powcolor::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("powcolor-cli-pipeline");
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("swap.json");
    let table = table.to_str().unwrap();
    let desc = r#"{"kind":"recolor","permutation":[1,0,2],"base":{"kind":"trivial","lambda":2,"kappa":3,"coordinate":1}}"#;

    let mut out = Vec::new();
    for argv in [
        vec!["powcolor", "gen", "--desc", desc, "--out", table],
        vec![
            "powcolor",
            "check",
            table,
            "--props",
            "proper,tight,nu-tight:2,weak-uniform",
        ],
        vec!["powcolor", "classify", table],
    ] {
        out.clear();
        let code = run(&argv, &mut out);
        println!(
            "$ {}  (exit {code})\n{}",
            argv[1..].join(" "),
            String::from_utf8_lossy(&out)
        );
    }
}
