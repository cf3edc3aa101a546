//! The eight acceptance criteria, each run against its time limit.
//!
//! Prints one `PASS`/`FAIL` line per criterion and exits non-zero if any
//! criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use powcolor::analysis::{
    classes_maximal_lawful, classify_2tight, coordinate_violation, enumerate_proper,
    extract_principal_form, is_c_tight, is_minimal, is_proper, is_tight, is_uniformity_witness,
    mix_closure_check, weak_uniformity_witness, PrincipalForm, PrincipalOutcome, TwoTightOutcome,
};
use powcolor::construct::{
    almost_disjoint_family, composite_coloring, disagreement_start, extend_partial, minimize,
    parity_table, trivial, LazyColoring,
};
use powcolor::perm::Permutation;
use powcolor::point::{FinitePoint, TailPoint};
use powcolor::sampling::sample_check;
use powcolor::table::{Color, ColoringTable, SpaceSig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn sig(l: usize, k: usize, m: usize) -> SpaceSig {
    SpaceSig::new(l, k, m).unwrap()
}

fn oracle(s: SpaceSig) -> Result<Vec<ColoringTable>, String> {
    enumerate_proper(s)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("oracle on {s:?}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Number of distinct tables x ↦ π(x(i)), counted from the
/// coordinates and permutations directly.
fn brute_trivial_count(s: SpaceSig) -> usize {
    let mut seen = BTreeSet::new();
    for i in 0..s.lambda() {
        for pi in Permutation::all(s.kappa()) {
            let colors: Vec<Color> = s
                .points()
                .map(|x| pi.apply(x.coords()[i] as usize))
                .collect();
            seen.insert(colors);
        }
    }
    seen.len()
}

fn switch_theorem() -> Outcome {
    let s = sig(2, 3, 3);
    let tables = oracle(s)?;
    let expected = brute_trivial_count(s);
    ensure(expected == 12, || {
        format!("2·3! cross-check gave {expected}")
    })?;
    ensure(tables.len() == expected, || {
        format!("{} tables, expected {expected}", tables.len())
    })?;
    for t in &tables {
        match extract_principal_form(t).map_err(|e| e.to_string())? {
            PrincipalOutcome::Principal(form) => {
                let rebuilt =
                    trivial(s, form.coordinate, &form.permutation).map_err(|e| e.to_string())?;
                ensure(&rebuilt == t, || {
                    format!("form {form:?} does not rebuild {:?}", t.colors())
                })?;
            }
            PrincipalOutcome::NotTrivial(w) => return Err(format!("not principal: {w:?}")),
        }
    }
    Ok(format!("{} proper tables, all principal", tables.len()))
}

fn tight_iff_maximal_lawful() -> Outcome {
    let mut total = 0;
    let mut disagreements = 0;
    for s in [sig(2, 3, 3), sig(3, 2, 2)] {
        for t in oracle(s)? {
            total += 1;
            if is_tight(&t) != classes_maximal_lawful(&t) {
                disagreements += 1;
            }
        }
    }
    ensure(disagreements == 0, || {
        format!("{disagreements} disagreements in {total} tables")
    })?;
    Ok(format!("{total} tables, 0 disagreements"))
}

fn parity_truncations() -> Outcome {
    let mut parts = Vec::new();
    for (k, m) in [(1, 2), (1, 4), (2, 2)] {
        let t = parity_table(k, m).map_err(|e| e.to_string())?;
        ensure(is_proper(&t), || format!("parity ({k},{m}) not proper"))?;
        let want = 1usize << (2 * k);
        for (c, class) in t.color_classes() {
            ensure(class.len() == want, || {
                format!(
                    "parity ({k},{m}) color {c} has {} points, want {want}",
                    class.len()
                )
            })?;
        }
        ensure(is_c_tight(&t, &t.range()), || {
            format!("parity ({k},{m}) not c-tight")
        })?;
        parts.push(format!("({k},{m}) {} classes", t.range().len()));
    }
    Ok(parts.join(", "))
}

fn composite() -> Outcome {
    let f = composite_coloring();
    let o = sample_check(&f, 2024, 10_000, 20).map_err(|e| e.to_string())?;
    ensure(o.proper_failures == 0, || format!("proper failures: {o:?}"))?;
    ensure(o.bound_failures == 0, || {
        format!("dependency-bound failures: {o:?}")
    })?;
    for i in 1..=8u64 {
        let j = 2 * i as usize;
        let x = TailPoint::new(vec![2 * i], 0);
        let y = x.with_coord(j, 1);
        let differ: Vec<usize> = (0..=j + 1).filter(|&n| x.at(n) != y.at(n)).collect();
        ensure(differ == [j] && x.tail() == y.tail(), || {
            format!("pair {i} differs at {differ:?}")
        })?;
        let (cx, cy) = (
            f.color(&x).map_err(|e| e.to_string())?,
            f.color(&y).map_err(|e| e.to_string())?,
        );
        ensure(cx != cy, || format!("witness pair {i} shares color {cx}"))?;
    }
    Ok(format!(
        "{} pairs, 8 witness pairs, {} mutations, 0 failures",
        o.pairs, o.mutations
    ))
}

/// Two totally different points and a mix of them distinct from both.
fn mix_triple(s: SpaceSig, rng: &mut ChaCha8Rng) -> (FinitePoint, FinitePoint, FinitePoint) {
    let k = s.kappa() as u64;
    let a: Vec<u64> = (0..s.lambda()).map(|_| rng.gen_range(0..k)).collect();
    let b: Vec<u64> = a.iter().map(|&v| (v + rng.gen_range(1..k)) % k).collect();
    let mut pick: Vec<bool> = (0..s.lambda()).map(|_| rng.gen()).collect();
    pick[0] = true;
    pick[1] = false;
    let z = (0..s.lambda())
        .map(|j| if pick[j] { a[j] } else { b[j] })
        .collect();
    (
        FinitePoint::new(a),
        FinitePoint::new(b),
        FinitePoint::new(z),
    )
}

fn classification_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut classified, mut rejected) = (0, 0);
    for _ in 0..100 {
        let lambda = rng.gen_range(1..=3);
        let kappa = rng.gen_range(2..=4);
        let s = sig(lambda, kappa, kappa);
        let i = rng.gen_range(0..lambda);
        let mut images: Vec<usize> = (0..kappa).collect();
        images.shuffle(&mut rng);
        let pi = Permutation::new(images).unwrap();
        let t = trivial(s, i, &pi).map_err(|e| e.to_string())?;
        match classify_2tight(&t).map_err(|e| e.to_string())? {
            TwoTightOutcome::Factor(c) if c.coordinate == i && c.class_map == pi.images() => {}
            other => return Err(format!("({i}, {pi:?}) on {s:?} classified as {other:?}")),
        }
        ensure(
            extract_principal_form(&t).map_err(|e| e.to_string())?
                == PrincipalOutcome::Principal(PrincipalForm {
                    coordinate: i,
                    permutation: pi,
                }),
            || format!("principal form lost on {s:?}"),
        )?;
        classified += 1;

        if lambda < 2 {
            continue;
        }
        // give a mix of two totally different points a fresh color
        let (a, b, z) = mix_triple(s, &mut rng);
        let mut colors = t.colors().to_vec();
        colors[s.encode(&z).unwrap()] = kappa;
        let bad = ColoringTable::new(s.with_mu(kappa + 1).unwrap(), colors).unwrap();
        ensure(is_proper(&bad), || "recolored table lost properness".into())?;
        ensure(
            !mix_closure_check(&bad, &[a, b], &z).map_err(|e| e.to_string())?,
            || "recolored mix still inside the hull".into(),
        )?;
        match classify_2tight(&bad).map_err(|e| e.to_string())? {
            TwoTightOutcome::Failure(w) => {
                ensure(w.len() == lambda, || {
                    format!("{} violations for λ={lambda}", w.len())
                })?;
                for v in &w {
                    let same_color = bad.eval(&v.first).unwrap() == bad.eval(&v.second).unwrap();
                    let same_coord =
                        v.first.coords()[v.coordinate] == v.second.coords()[v.coordinate];
                    ensure(same_color != same_coord, || {
                        format!("not a violation: {v:?}")
                    })?;
                    ensure(
                        coordinate_violation(&bad, v.coordinate).as_ref() == Some(v),
                        || "witness is not the enc-first violation".into(),
                    )?;
                }
            }
            TwoTightOutcome::Factor(c) => {
                return Err(format!("recolored table classified as {c:?}"))
            }
        }
        rejected += 1;
    }
    Ok(format!(
        "{classified}/{classified} classified, {rejected}/{rejected} mixes rejected"
    ))
}

fn minimization() -> Outcome {
    let tables = oracle(sig(2, 3, 3))?;
    for t in &tables {
        let shifted = ColoringTable::new(
            t.sig().with_mu(4).unwrap(),
            t.colors().iter().map(|c| c + 1).collect(),
        )
        .unwrap();
        let m = minimize(&shifted).map_err(|e| e.to_string())?;
        ensure(is_minimal(&m.table), || {
            format!("not minimal: {:?}", m.table.colors())
        })?;
        ensure(m.table.le(&shifted), || {
            "minimized table exceeds its input".into()
        })?;
        let again = minimize(&m.table).map_err(|e| e.to_string())?;
        ensure(again.table == m.table && again.lowered == 0, || {
            "minimize is not idempotent".into()
        })?;
    }
    Ok(format!("{} shifted tables minimized", tables.len()))
}

fn uniformity() -> Outcome {
    let tables = oracle(sig(2, 3, 3))?;
    for t in &tables {
        let w = weak_uniformity_witness(t)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no witness for {:?}", t.colors()))?;
        ensure(w.len() == 3 && is_uniformity_witness(t, &w), || {
            format!("bad witness {w:?}")
        })?;
    }
    Ok(format!("{} tables weakly uniform", tables.len()))
}

fn almost_disjoint_and_extension() -> Outcome {
    let (m, t) = (6, 16);
    let fam = almost_disjoint_family(m, t).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for a in 0..fam.len() {
        for b in a + 1..fam.len() {
            let start = disagreement_start(&fam[a], &fam[b])
                .ok_or_else(|| format!("branches {a},{b} do not disagree on a final segment"))?;
            ensure(start < m, || format!("empty final segment for {a},{b}"))?;
            pairs += 1;
        }
    }
    ensure(pairs == 120, || format!("{pairs} pairs"))?;

    let s = sig(2, 3, 1);
    let a: Vec<FinitePoint> = s.points().filter(|x| x.coords()[0] == 0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for round in 0..20 {
        let g: BTreeMap<FinitePoint, Color> =
            a.iter().map(|x| (x.clone(), rng.gen_range(0..5))).collect();
        let f = extend_partial(2, 3, &g).map_err(|e| e.to_string())?;
        ensure(is_proper(&f), || {
            format!("round {round}: extension not proper")
        })?;
        for (x, gx) in &g {
            for (y, gy) in &g {
                let same = f.eval(x).unwrap() == f.eval(y).unwrap();
                ensure(same == (gx == gy), || {
                    format!("round {round}: pattern broken at {x}, {y}")
                })?;
            }
        }
    }
    Ok(format!("{pairs} pairs, 20 extensions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("finite switch theorem on ^2 3", 5, switch_theorem),
        (
            "tight iff classes maximal lawful",
            10,
            tight_iff_maximal_lawful,
        ),
        ("parity tables at truncation", 30, parity_truncations),
        ("composite coloring of ^ωω", 10, composite),
        (
            "2-tight classification round trip",
            5,
            classification_round_trip,
        ),
        ("minimization", 10, minimization),
        ("weak uniformity on ^2 3", 10, uniformity),
        (
            "almost-disjoint family and partial extension",
            5,
            almost_disjoint_and_extension,
        ),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if took < Duration::from_secs(limit) => Ok(detail),
            Ok(detail) => Err(format!("{detail}, but over the {limit} s limit")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({took:.2?})", n + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {e} ({took:.2?})", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
