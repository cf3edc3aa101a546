//! The `powcolor` command line.
//!
//! Exit codes: 0 when every verdict holds, 1 when some verdict fails, 2 on
//! usage, format or precondition errors.

mod args;
mod report;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::analysis::{
    self, c_tight_counterexample, classify_2tight, extract_principal_form, is_strongly_uniform,
    minimality_counterexample, nu_tight_counterexample, proper_counterexample,
    tight_counterexample, weak_uniformity_witness, AnalysisError, PrincipalOutcome,
    TwoTightOutcome, DEFAULT_BUDGET,
};
use crate::construct::{minimize, rank_in_b, Descriptor, LazyColoring};
use crate::point::{Coord, FinitePoint, Point, PointView};
use crate::sampling::sample_check;
use crate::table::{Color, ColoringTable, SpaceSig};

pub use args::{parse_sig, PointArg, Prop};
pub use report::{RunReport, Verdict};

/// Int codes longer than this are reported as `null`.
const INT_CODE_BITS: u64 = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "powcolor",
    version,
    about = "Build and verify colorings of ^λκ"
)]
pub struct Cli {
    /// Add wall-clock milliseconds to reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a table from a descriptor (inline JSON or a file).
    Gen {
        #[arg(long)]
        desc: String,
        /// L,K,M; required for the composite, which is truncated to ^L K.
        #[arg(long, value_parser = parse_sig)]
        sig: Option<SpaceSig>,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checkers on a table file.
    Check {
        table: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "proper,tight,minimal")]
        props: Vec<Prop>,
        /// Color set for ctight; defaults to the range.
        #[arg(long, value_delimiter = ',')]
        colors: Option<Vec<Color>>,
    },
    /// Look for a single coordinate that determines the coloring.
    Classify { table: PathBuf },
    /// Color of one point.
    Eval {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        desc: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// "a,b,c" or "a,b;tail".
        #[arg(long)]
        point: PointArg,
        /// Also report the position of the code among all composite colors.
        #[arg(long)]
        rank: bool,
    },
    /// Greedily lower a proper table to a minimal one.
    Minimize {
        table: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream every proper table of a signature as JSON lines.
    Oracle {
        #[arg(long, value_parser = parse_sig)]
        sig: SpaceSig,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random checks of a lazy coloring of ^ωω.
    Sample {
        #[arg(long)]
        desc: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        /// Coordinates are drawn below this.
        #[arg(long, default_value_t = 20)]
        max_value: Coord,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let started = Instant::now();
    match dispatch(cli.command, &echo, stdout) {
        Ok(Some(mut report)) => {
            if cli.timing {
                report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
            }
            let _ = writeln!(stdout, "{}", report.to_json());
            if report.all_hold() {
                0
            } else {
                1
            }
        }
        Ok(None) => 0,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut io::stdout().lock());
    std::process::exit(code)
}

fn read_desc(arg: &str) -> Result<Descriptor, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Failure(format!("cannot read descriptor {arg}: {e}")))?
    };
    Ok(Descriptor::from_json(&text)?)
}

fn load(path: &PathBuf) -> Result<ColoringTable, Failure> {
    ColoringTable::load_from_path(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn dispatch(
    command: Command,
    echo: &str,
    stdout: &mut dyn Write,
) -> Result<Option<RunReport>, Failure> {
    let mut report = RunReport::new(echo);
    match command {
        Command::Gen { desc, sig, out } => {
            let d = read_desc(&desc)?;
            let t = d.table(sig)?;
            match out {
                None => {
                    t.save(&mut *stdout)?;
                    return Ok(None);
                }
                Some(path) => {
                    t.save_to_path(&path)?;
                    report.info("out", path.display().to_string());
                    report.info("points", t.sig().size());
                    report.info("mu", t.sig().mu());
                    report.info("used_colors", t.range().len());
                }
            }
        }
        Command::Check {
            table,
            props,
            colors,
        } => {
            let t = load(&table)?;
            for prop in props {
                check_prop(&t, prop, colors.as_deref(), &mut report)?;
            }
        }
        Command::Classify { table } => classify(&load(&table)?, &mut report)?,
        Command::Eval {
            desc,
            table,
            point,
            rank,
        } => {
            let value = match (desc, table) {
                (_, Some(path)) => eval_table(&load(&path)?, &point)?,
                (Some(d), None) => {
                    let d = read_desc(&d)?;
                    if d.is_infinite() {
                        eval_lazy(&*d.lazy()?, &point, rank)?
                    } else {
                        eval_table(&d.table(None)?, &point)?
                    }
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
            return Ok(None);
        }
        Command::Minimize { table, out } => {
            let t = load(&table)?;
            if let Some((x, y)) = proper_counterexample(&t) {
                report.fail("proper", [x, y]);
                return Ok(Some(report));
            }
            report.pass("proper");
            let m = minimize(&t)?;
            report.verdict("minimal", minimality_counterexample(&m.table));
            report.verdict(
                "below_input",
                (!m.table.le(&t)).then_some("pointwise order violated"),
            );
            report.info("lowered", m.lowered);
            match out {
                Some(path) => {
                    m.table.save_to_path(&path)?;
                    report.info("out", path.display().to_string());
                }
                None => report.info(
                    "table",
                    serde_json::from_str::<serde_json::Value>(&m.table.to_json())?,
                ),
            }
        }
        Command::Oracle { sig, budget, out } => {
            let mut sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
                None => Box::new(&mut *stdout),
            };
            let mut count = 0u64;
            for t in analysis::enumerate_proper(sig).with_budget(budget) {
                t?.save(&mut sink)?;
                count += 1;
            }
            sink.flush()?;
            eprintln!("{count} proper colorings");
            return Ok(None);
        }
        Command::Sample {
            desc,
            seed,
            count,
            max_value,
        } => {
            let f = read_desc(&desc)?.lazy()?;
            let o = sample_check(&*f, seed, count, max_value)?;
            report.verdict("proper_on_samples", o.first_proper_failure.clone());
            report.verdict("dependency_bound_on_samples", o.first_bound_failure.clone());
            report.info("seed", seed);
            report.info("pairs", o.pairs);
            report.info("proper_failures", o.proper_failures);
            report.info("mutations", o.mutations);
            report.info("bound_failures", o.bound_failures);
        }
    }
    Ok(Some(report))
}

fn check_prop(
    t: &ColoringTable,
    prop: Prop,
    colors: Option<&[Color]>,
    report: &mut RunReport,
) -> Result<(), Failure> {
    let name = prop.to_string();
    match prop {
        Prop::Proper => report.verdict(&name, proper_counterexample(t).map(|(x, y)| [x, y])),
        Prop::Tight => report.verdict(&name, tight_counterexample(t)),
        Prop::CTight => {
            let c: BTreeSet<Color> = match colors {
                Some(c) => c.iter().copied().collect(),
                None => t.range(),
            };
            report.verdict(&name, c_tight_counterexample(t, &c));
        }
        Prop::NuTight(nu) => report.verdict(&name, nu_tight_counterexample(t, nu)),
        Prop::Minimal => report.verdict(&name, minimality_counterexample(t)),
        Prop::StrongUniform => {
            let sig = t.sig();
            if !is_strongly_uniform(t)? {
                let alpha = (0..sig.kappa())
                    .find(|&a| t.colors()[constant_index(sig, a)] != a)
                    .expect("some constant is off");
                report.fail(
                    &name,
                    json!({
                        "point": FinitePoint::constant(sig.lambda(), alpha as Coord),
                        "color": t.colors()[constant_index(sig, alpha)],
                        "expected": alpha,
                    }),
                );
            } else {
                report.pass(&name);
            }
        }
        Prop::WeakUniform => match weak_uniformity_witness(t)? {
            Some(w) => {
                report.pass(&name);
                report.info("weak_uniformity_witness", w);
            }
            None => report.fail(&name, json!({"search_exhausted": true})),
        },
        Prop::LawfulClasses => report.verdict(&name, lawful_class_failure(t)),
    }
    Ok(())
}

fn constant_index(sig: SpaceSig, alpha: usize) -> usize {
    sig.encode(&FinitePoint::constant(sig.lambda(), alpha as Coord))
        .expect("constants lie in the space")
}

/// Why the first color class `β < μ` that is not maximal lawful fails.
fn lawful_class_failure(t: &ColoringTable) -> Option<serde_json::Value> {
    let points: Vec<FinitePoint> = t.sig().points().collect();
    for beta in 0..t.sig().mu() {
        let class: Vec<&FinitePoint> = points
            .iter()
            .zip(t.colors())
            .filter(|(_, &c)| c == beta)
            .map(|(x, _)| x)
            .collect();
        if class.is_empty() {
            return Some(json!({"color": beta, "empty": true}));
        }
        for (i, x) in class.iter().enumerate() {
            if let Some(y) = class[i + 1..]
                .iter()
                .find(|y| x.totally_different(y).unwrap())
            {
                return Some(json!({"color": beta, "totally_different": [x, y]}));
            }
        }
        let outside = points
            .iter()
            .zip(t.colors())
            .find(|(x, &c)| c != beta && !class.iter().any(|y| x.totally_different(y).unwrap()));
        if let Some((x, _)) = outside {
            return Some(json!({"color": beta, "extendable_by": x}));
        }
    }
    None
}

fn classify(t: &ColoringTable, report: &mut RunReport) -> Result<(), Failure> {
    if let Some((x, y)) = proper_counterexample(t) {
        report.fail("proper", [x, y]);
        return Ok(());
    }
    report.pass("proper");
    let sig = t.sig();
    let mut form = None;
    if sig.mu() == sig.kappa() {
        match extract_principal_form(t)? {
            PrincipalOutcome::Principal(p) => {
                report.pass("principal");
                form = Some(json!({"principal": p}));
            }
            PrincipalOutcome::NotTrivial(v) => report.fail("principal", v),
        }
    }
    match classify_2tight(t) {
        Ok(TwoTightOutcome::Factor(f)) => {
            report.pass("single_coordinate");
            form.get_or_insert(json!({"factor": f}));
        }
        Ok(TwoTightOutcome::Failure(v)) => report.fail("single_coordinate", v),
        Err(AnalysisError::NotProper { .. }) => unreachable!("checked above"),
        Err(e) => return Err(e.into()),
    }
    report.info("form", form.unwrap_or(json!("not_trivial")));
    Ok(())
}

fn eval_table(t: &ColoringTable, point: &PointArg) -> Result<serde_json::Value, Failure> {
    let sig = t.sig();
    let x = match point {
        PointArg::Finite(x) => x.clone(),
        PointArg::Tail(x) => x.truncate(sig.lambda()),
    };
    let color = t.eval(&x)?;
    Ok(json!({"point": point.to_string(), "color": color}))
}

fn eval_lazy(
    f: &dyn LazyColoring,
    point: &PointArg,
    rank: bool,
) -> Result<serde_json::Value, Failure> {
    let x: &dyn PointView = match point {
        PointArg::Finite(x) => x,
        PointArg::Tail(x) => x,
    };
    let code = f.color(x)?;
    let int_code = match code.int_code_within(INT_CODE_BITS) {
        Some(n) => serde_json::Value::Number(
            serde_json::from_str(&n.to_string()).expect("decimal digits form a JSON number"),
        ),
        None => serde_json::Value::Null,
    };
    let mut value = json!({
        "point": point.to_string(),
        "code": code,
        "int_code": int_code,
        "dependency_bound": f.dependency_bound(x)?,
    });
    if rank {
        match rank_in_b(&code) {
            Ok(r) => value["rank"] = json!(r),
            Err(e) => value["rank_error"] = json!(e.to_string()),
        }
    }
    Ok(value)
}
