//! Command-line front end.
//!
//! Subcommands: `roots`, `weights`, `f-table`, `verify`, `index`, `lattice`,
//! `glue`. Output is a single JSON object `{command, result, schema_version}`
//! (default) or a TSV table (`--format tsv`), written to standard output or
//! `--out PATH`. Integers are serialized as exact decimal strings and
//! rationals as `p/q` strings — never floats — and output ordering is fully
//! deterministic, so repeated runs are byte-identical.
//!
//! Exit codes: 0 success, 1 verification failure (`verify` found a root with
//! |f| ≠ 24), 2 usage or parse errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::floer::{
    evaluate_gluing, switching, wall_crossing, CobordismArrow, FloerError, Flavor, GradedElement,
    LSpaceData, PairingRule, Parity,
};
use crate::index::{
    degree1_index, sphere_family_index, FamilyIndexInput, IndexError, SpherePair,
};
use crate::intersect::{IntersectError, TripleForm};
use crate::lattice::{enumerate_sign_flips, LatticeError, LatticeProblem};
use crate::rootsys::{DynkinDiagram, Family, RootSysError};
use crate::weights::propagate_weights;
use crate::Rational;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Floer(#[from] FloerError),
    #[error("pipeline error: {0}")]
    Pipeline(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("invalid pipeline JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Parser)]
#[command(name = "adekit", version, about = "Exact invariants of ADE plumbings and their families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this path instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List every root of a diagram, sorted lexicographically
    Roots { spec: String },
    /// Vertex weight pairs (a_i, b_i) and directed edge weights w_{i,j}
    Weights { spec: String },
    /// The value of f on every root
    FTable { spec: String },
    /// Check f = ±24 on every root and f-invariance along descent paths
    Verify { spec: String },
    /// Degree-1 family index reports
    #[command(subcommand)]
    Index(IndexCommand),
    /// Enumerate characteristic vectors under square and half-space constraints
    Lattice {
        /// Number of negative basis vectors
        #[arg(long)]
        m: usize,
        /// Required value of x0^2 - sum x_i^2
        #[arg(long, allow_negative_numbers = true)]
        square: i64,
        /// Half-space slope as P/Q with 0 <= a < 1
        #[arg(long, default_value = "0")]
        a: String,
    },
    /// Evaluate a staged gluing pipeline from a JSON file
    Glue { pipeline: PathBuf },
}

#[derive(Subcommand)]
enum IndexCommand {
    /// Index of the ADE family twisted by a root class
    Ade {
        spec: String,
        /// Root coordinates t1,...,tn
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        root: Vec<i64>,
    },
    /// Index of the blown-up family
    Blowup,
    /// Index of a single-sphere family: n(n-k)(n+k)/(24k)
    Sphere {
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

/// Parse a diagram spec like `A7`, `d5`, `e8`. Case-insensitive, surrounding
/// whitespace ignored.
pub fn parse_spec(s: &str) -> Result<DynkinDiagram, CliError> {
    let trimmed = s.trim();
    let offset = s.len() - s.trim_start().len();
    let mut chars = trimmed.char_indices();
    let family = match chars.next() {
        Some((_, c)) => match c.to_ascii_uppercase() {
            'A' => Family::A,
            'D' => Family::D,
            'E' => Family::E,
            other => {
                return Err(CliError::Parse {
                    position: offset,
                    message: format!("expected family A, D or E, found {other:?}"),
                })
            }
        },
        None => {
            return Err(CliError::Parse {
                position: offset,
                message: "empty diagram spec".into(),
            })
        }
    };
    let digits = &trimmed[1..];
    if digits.is_empty() {
        return Err(CliError::Parse {
            position: offset + 1,
            message: "missing rank".into(),
        });
    }
    if let Some(bad) = digits.chars().position(|c| !c.is_ascii_digit()) {
        return Err(CliError::Parse {
            position: offset + 1 + bad,
            message: "rank must be a decimal number".into(),
        });
    }
    let rank: usize = digits.parse().map_err(|_| CliError::Parse {
        position: offset + 1,
        message: "rank out of range".into(),
    })?;
    Ok(DynkinDiagram::new(family, rank)?)
}

/// Parse `P/Q` or `P` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let parse_int = |part: &str, position: usize| -> Result<i64, CliError> {
        part.trim().parse().map_err(|_| CliError::Parse {
            position,
            message: format!("expected an integer, found {part:?}"),
        })
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let p = parse_int(num, 0)?;
            let q = parse_int(den, num.len() + 1)?;
            if q == 0 {
                return Err(CliError::Parse {
                    position: num.len() + 1,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(parse_int(s, 0)?)),
    }
}

/// Run the CLI, writing to standard output (or `--out`). Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = io::stdout();
    run_with(argv, &mut stdout)
}

/// Same as [`run`] with an explicit sink for the default output stream.
pub fn run_with<I, T, W>(argv: I, sink: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output with exit code 0.
            if e.exit_code() == 0 {
                let _ = write!(sink, "{e}");
                return 0;
            }
            eprint!("{e}");
            return 2;
        }
    };
    let output = match dispatch(&cli.command) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let rendered = match cli.format {
        Format::Json => {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "command": output.name,
                "result": output.result,
            });
            let mut text = serde_json::to_string_pretty(&envelope).expect("valid JSON");
            text.push('\n');
            text
        }
        Format::Tsv => {
            let mut text = output.tsv_header.join("\t");
            text.push('\n');
            for row in &output.tsv_rows {
                text.push_str(&row.join("\t"));
                text.push('\n');
            }
            text
        }
    };
    let write_result = match &cli.out {
        Some(path) => fs::write(path, rendered),
        None => sink.write_all(rendered.as_bytes()),
    };
    if let Err(e) = write_result {
        eprintln!("error: {e}");
        return 2;
    }
    output.exit
}

struct CommandOutput {
    name: &'static str,
    result: Value,
    tsv_header: Vec<String>,
    tsv_rows: Vec<Vec<String>>,
    exit: i32,
}

fn jint(x: i64) -> Value {
    Value::String(x.to_string())
}

fn jrat(x: Rational) -> Value {
    Value::String(x.to_string())
}

fn jvec(t: &[i64]) -> Value {
    Value::Array(t.iter().map(|&x| jint(x)).collect())
}

fn dispatch(command: &Command) -> Result<CommandOutput, CliError> {
    match command {
        Command::Roots { spec } => roots_command(spec),
        Command::Weights { spec } => weights_command(spec),
        Command::FTable { spec } => f_table_command(spec),
        Command::Verify { spec } => verify_command(spec),
        Command::Index(which) => index_command(which),
        Command::Lattice { m, square, a } => lattice_command(*m, *square, a),
        Command::Glue { pipeline } => glue_command(pipeline),
    }
}

fn roots_command(spec: &str) -> Result<CommandOutput, CliError> {
    let diagram = parse_spec(spec)?;
    let roots = diagram.enumerate_roots();
    let result = json!({
        "family": diagram.family().to_string(),
        "rank": jint(diagram.rank() as i64),
        "count": jint(roots.len() as i64),
        "roots": roots.iter().map(|r| jvec(r.coords())).collect::<Vec<_>>(),
    });
    let tsv_header = (1..=diagram.rank()).map(|i| format!("t{i}")).collect();
    let tsv_rows = roots
        .iter()
        .map(|r| r.coords().iter().map(|t| t.to_string()).collect())
        .collect();
    Ok(CommandOutput {
        name: "roots",
        result,
        tsv_header,
        tsv_rows,
        exit: 0,
    })
}

fn weights_command(spec: &str) -> Result<CommandOutput, CliError> {
    let diagram = parse_spec(spec)?;
    let assignment = propagate_weights(&diagram);
    let vertices: Vec<Value> = assignment
        .vertex_weights()
        .iter()
        .map(|(&v, &(a, b))| {
            json!({ "vertex": jint(v as i64), "a": jint(a), "b": jint(b) })
        })
        .collect();
    let edges: Vec<Value> = assignment
        .edge_weights()
        .iter()
        .map(|(&(i, j), &w)| {
            json!({ "from": jint(i as i64), "to": jint(j as i64), "w": jint(w) })
        })
        .collect();
    let result = json!({
        "family": diagram.family().to_string(),
        "rank": jint(diagram.rank() as i64),
        "vertex_weights": vertices,
        "edge_weights": edges,
    });
    let tsv_header = vec![
        "kind".into(),
        "from".into(),
        "to".into(),
        "a".into(),
        "b".into(),
        "w".into(),
    ];
    let mut tsv_rows: Vec<Vec<String>> = assignment
        .vertex_weights()
        .iter()
        .map(|(&v, &(a, b))| {
            vec![
                "vertex".into(),
                v.to_string(),
                String::new(),
                a.to_string(),
                b.to_string(),
                String::new(),
            ]
        })
        .collect();
    for (&(i, j), &w) in assignment.edge_weights() {
        tsv_rows.push(vec![
            "edge".into(),
            i.to_string(),
            j.to_string(),
            String::new(),
            String::new(),
            w.to_string(),
        ]);
    }
    Ok(CommandOutput {
        name: "weights",
        result,
        tsv_header,
        tsv_rows,
        exit: 0,
    })
}

fn f_table_command(spec: &str) -> Result<CommandOutput, CliError> {
    let diagram = parse_spec(spec)?;
    let form = TripleForm::new(&diagram);
    let roots = diagram.enumerate_roots();
    let mut rows = Vec::new();
    let mut tsv_rows = Vec::new();
    for r in &roots {
        let value = form.f(r.coords())?;
        rows.push(json!({ "root": jvec(r.coords()), "f": jint(value) }));
        let joined = r
            .coords()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",");
        tsv_rows.push(vec![joined, value.to_string()]);
    }
    let result = json!({
        "family": diagram.family().to_string(),
        "rank": jint(diagram.rank() as i64),
        "rows": rows,
    });
    Ok(CommandOutput {
        name: "f-table",
        result,
        tsv_header: vec!["root".into(), "f".into()],
        tsv_rows,
        exit: 0,
    })
}

fn verify_command(spec: &str) -> Result<CommandOutput, CliError> {
    let diagram = parse_spec(spec)?;
    let report = TripleForm::new(&diagram).verify_f_on_roots();
    let violations: Vec<Value> = report
        .f_failures
        .iter()
        .map(|(r, got)| json!({ "root": jvec(r.coords()), "f": jint(*got) }))
        .chain(report.hasse_failures.iter().map(|(a, b)| {
            json!({ "path_step": [jvec(a.coords()), jvec(b.coords())] })
        }))
        .collect();
    let result = json!({
        "family": diagram.family().to_string(),
        "rank": jint(diagram.rank() as i64),
        "roots": jint(report.root_count as i64),
        "positive_roots": jint(report.positive_count as i64),
        "negative_roots": jint(report.negative_count as i64),
        "all_pass": report.all_pass(),
        "summary": report.summary(),
        "violations": violations,
    });
    let tsv_rows = vec![
        vec!["roots".into(), report.root_count.to_string()],
        vec!["positive_roots".into(), report.positive_count.to_string()],
        vec!["negative_roots".into(), report.negative_count.to_string()],
        vec!["all_pass".into(), report.all_pass().to_string()],
        vec!["summary".into(), report.summary()],
    ];
    Ok(CommandOutput {
        name: "verify",
        result,
        tsv_header: vec!["key".into(), "value".into()],
        tsv_rows,
        exit: if report.all_pass() { 0 } else { 1 },
    })
}

fn index_command(which: &IndexCommand) -> Result<CommandOutput, CliError> {
    let (result, pairs) = match which {
        IndexCommand::Ade { spec, root } => {
            let diagram = parse_spec(spec)?;
            let form = TripleForm::new(&diagram);
            let input = FamilyIndexInput::for_ade_class(&form, root)?;
            let value = degree1_index(input);
            let f_value = form.f(root)?;
            // f and the index are defined for every integer class; the
            // guaranteed |index| = 1 only applies to genuine roots.
            let is_root = diagram.intersection_form().evaluate(root) == -2;
            (
                json!({
                    "kind": "ade",
                    "family": diagram.family().to_string(),
                    "rank": jint(diagram.rank() as i64),
                    "root": jvec(root),
                    "is_root": is_root,
                    "c1_cubed": jint(input.c1_cubed),
                    "p1_dot_c1": jint(input.p1_dot_c1),
                    "f": jint(f_value),
                    "index": jrat(value),
                }),
                vec![
                    ("kind".to_string(), "ade".to_string()),
                    ("is_root".to_string(), is_root.to_string()),
                    ("c1_cubed".to_string(), input.c1_cubed.to_string()),
                    ("p1_dot_c1".to_string(), input.p1_dot_c1.to_string()),
                    ("f".to_string(), f_value.to_string()),
                    ("index".to_string(), value.to_string()),
                ],
            )
        }
        IndexCommand::Blowup => {
            let input = FamilyIndexInput::blown_up();
            let value = degree1_index(input);
            (
                json!({
                    "kind": "blowup",
                    "c1_cubed": jint(input.c1_cubed),
                    "p1_dot_c1": jint(input.p1_dot_c1),
                    "index": jrat(value),
                }),
                vec![
                    ("kind".to_string(), "blowup".to_string()),
                    ("c1_cubed".to_string(), input.c1_cubed.to_string()),
                    ("p1_dot_c1".to_string(), input.p1_dot_c1.to_string()),
                    ("index".to_string(), value.to_string()),
                ],
            )
        }
        IndexCommand::Sphere { k, n } => {
            let pair = SpherePair::new(*k, *n)?;
            let value = sphere_family_index(pair);
            (
                json!({
                    "kind": "sphere",
                    "k": jint(*k),
                    "n": jint(*n),
                    "index": jrat(value),
                }),
                vec![
                    ("kind".to_string(), "sphere".to_string()),
                    ("k".to_string(), k.to_string()),
                    ("n".to_string(), n.to_string()),
                    ("index".to_string(), value.to_string()),
                ],
            )
        }
    };
    let tsv_rows = pairs.into_iter().map(|(k, v)| vec![k, v]).collect();
    Ok(CommandOutput {
        name: "index",
        result,
        tsv_header: vec!["key".into(), "value".into()],
        tsv_rows,
        exit: 0,
    })
}

fn lattice_command(m: usize, square: i64, a: &str) -> Result<CommandOutput, CliError> {
    let slope = parse_rational(a)?;
    let problem = LatticeProblem::new(m, square, slope)?;
    let bounds = problem.bounds();
    let solutions = enumerate_sign_flips(&problem);
    let result = json!({
        "m": jint(m as i64),
        "square": jint(square),
        "a": jrat(slope),
        "bounds": {
            "x0_max": jint(bounds.x0_max),
            "x1_max": jint(bounds.x1_max),
            "tail_max": jint(bounds.tail_max),
            "derivation": bounds.derivation,
        },
        "count": jint(solutions.len() as i64),
        "solutions": solutions.iter().map(|x| jvec(x)).collect::<Vec<_>>(),
    });
    let tsv_header = (0..=m).map(|i| format!("x{i}")).collect();
    let tsv_rows = solutions
        .iter()
        .map(|x| x.iter().map(|v| v.to_string()).collect())
        .collect();
    Ok(CommandOutput {
        name: "lattice",
        result,
        tsv_header,
        tsv_rows,
        exit: 0,
    })
}

/// One stage of a gluing pipeline file.
#[derive(Debug, serde::Deserialize)]
struct Stage {
    kind: String,
    #[serde(default)]
    params: Value,
}

enum PipelineState {
    Element(GradedElement),
    Scalar(Rational),
}

fn glue_command(path: &PathBuf) -> Result<CommandOutput, CliError> {
    let text = fs::read_to_string(path)?;
    let stages: Vec<Stage> = serde_json::from_str(&text)?;
    let mut audit: Vec<String> = Vec::new();
    // The pipeline starts from the standard generator of the 3-sphere.
    let mut state = PipelineState::Element(GradedElement::new(
        Flavor::Hat,
        -Rational64::from_integer(1),
        Rational64::from_integer(1),
    ));
    audit.push("start: e_hat(-1) with coefficient 1".to_string());
    for (idx, stage) in stages.iter().enumerate() {
        state = apply_stage(idx, stage, state, &mut audit)?;
    }
    let result_value = match &state {
        PipelineState::Element(e) => json!({
            "flavor": flavor_name(e.flavor),
            "grading": jrat(e.grading),
            "coefficient": jrat(e.coefficient),
        }),
        PipelineState::Scalar(s) => jrat(*s),
    };
    let result = json!({
        "stages": jint(stages.len() as i64),
        "audit": audit,
        "result": result_value,
    });
    let mut tsv_rows: Vec<Vec<String>> = audit
        .iter()
        .enumerate()
        .map(|(i, line)| vec![i.to_string(), line.clone()])
        .collect();
    let final_text = match &state {
        PipelineState::Element(e) => {
            format!("{}({}) coefficient {}", flavor_name(e.flavor), e.grading, e.coefficient)
        }
        PipelineState::Scalar(s) => s.to_string(),
    };
    tsv_rows.push(vec!["result".into(), final_text]);
    Ok(CommandOutput {
        name: "glue",
        result,
        tsv_header: vec!["step".into(), "audit".into()],
        tsv_rows,
        exit: 0,
    })
}

fn flavor_name(f: Flavor) -> &'static str {
    match f {
        Flavor::Bar => "bar",
        Flavor::Hat => "hat",
        Flavor::Check => "check",
    }
}

fn apply_stage(
    idx: usize,
    stage: &Stage,
    state: PipelineState,
    audit: &mut Vec<String>,
) -> Result<PipelineState, CliError> {
    let fail = |msg: String| CliError::Pipeline(format!("stage {idx} ({}): {msg}", stage.kind));
    match stage.kind.as_str() {
        "arrow" => {
            let PipelineState::Element(element) = state else {
                return Err(fail("arrow stages apply to an element, not a scalar".into()));
            };
            let c = param_rational(&stage.params, "c").map_err(&fail)?;
            let d = param_rational(&stage.params, "d").map_err(&fail)?;
            let b_plus = param_u32(&stage.params, "b_plus").map_err(&fail)?;
            let parity = match param_str(&stage.params, "parity").map_err(&fail)?.as_str() {
                "even" => Parity::Even,
                "odd" => Parity::Odd,
                other => return Err(fail(format!("unknown parity {other:?}"))),
            };
            let froyshov = match stage.params.get("froyshov") {
                Some(_) => param_rational(&stage.params, "froyshov").map_err(&fail)?,
                None => Rational64::from_integer(0),
            };
            let target = LSpaceData::new(froyshov)?;
            let arrow = CobordismArrow::new(d, c, b_plus, parity);
            let grading = element.grading + d;
            let mut coefficient = arrow.effective_coefficient() * element.coefficient;
            let mut note = String::new();
            if grading > target.check_bottom() && !coefficient.is_zero() {
                coefficient = Rational64::from_integer(0);
                note = "; target support forces the coefficient to vanish".into();
            }
            audit.push(format!(
                "arrow: c={c}, d={d}, b+={b_plus}, parity={} -> e_hat({grading}) coefficient {coefficient}{note}",
                match parity { Parity::Even => "even", Parity::Odd => "odd" },
            ));
            Ok(PipelineState::Element(GradedElement::new(
                Flavor::Hat,
                grading,
                coefficient,
            )))
        }
        "pairing" => {
            let PipelineState::Element(element) = state else {
                return Err(fail("pairing stages apply to an element".into()));
            };
            let dual_grading = param_rational(&stage.params, "dual_grading").map_err(&fail)?;
            let dual_coefficient =
                param_rational(&stage.params, "dual_coefficient").map_err(&fail)?;
            let rule = match stage.params.get("offset") {
                Some(_) => PairingRule {
                    offset: param_rational(&stage.params, "offset").map_err(&fail)?,
                },
                None => PairingRule::default(),
            };
            let dual = GradedElement::new(Flavor::Check, dual_grading, dual_coefficient);
            let value = evaluate_gluing(&element, &dual, &rule);
            audit.push(format!(
                "pairing: <e_hat({}), dual({dual_grading})> with offset {} -> {value}",
                element.grading, rule.offset,
            ));
            Ok(PipelineState::Scalar(value))
        }
        "switch" => {
            let PipelineState::Scalar(chern) = state else {
                return Err(fail("switch stages apply to a scalar".into()));
            };
            let sw = param_rational(&stage.params, "sw_fiber").map_err(&fail)?;
            let b1 = param_u32(&stage.params, "b_plus_m1").map_err(&fail)?;
            let b2 = param_u32(&stage.params, "b_plus_m2").map_err(&fail)?;
            let value = switching(chern, sw, b1, b2);
            audit.push(format!(
                "switch: chern={chern}, sw={sw}, b+(M1)={b1}, b+(M2)={b2} -> {value}"
            ));
            Ok(PipelineState::Scalar(value))
        }
        "wall" => {
            let PipelineState::Scalar(current) = state else {
                return Err(fail("wall stages apply to a scalar".into()));
            };
            let j = param_i64(&stage.params, "j").map_err(&fail)?;
            let c = param_rational(&stage.params, "c").map_err(&fail)?;
            let b_plus = param_i64(&stage.params, "b_plus").map_err(&fail)?;
            let value = wall_crossing(current, j, c, b_plus)?;
            audit.push(format!("wall: j={j}, C={c}, b+={b_plus} -> {value}"));
            Ok(PipelineState::Scalar(value))
        }
        "pullback" => {
            let PipelineState::Scalar(current) = state else {
                return Err(fail("pullback stages apply to a scalar".into()));
            };
            let degree = param_i64(&stage.params, "degree").map_err(&fail)?;
            let value = crate::floer::pullback(current, degree);
            audit.push(format!("pullback: degree={degree} -> {value}"));
            Ok(PipelineState::Scalar(value))
        }
        other => Err(fail(format!("unknown stage kind {other:?}"))),
    }
}

fn param_str(params: &Value, key: &str) -> Result<String, String> {
    params
        .get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| format!("missing string parameter {key:?}"))
}

fn param_i64(params: &Value, key: &str) -> Result<i64, String> {
    match params.get(key) {
        Some(Value::Number(n)) => n
            .as_i64()
            .ok_or_else(|| format!("parameter {key:?} out of range")),
        Some(Value::String(s)) => s
            .parse()
            .map_err(|_| format!("parameter {key:?} is not an integer")),
        _ => Err(format!("missing integer parameter {key:?}")),
    }
}

fn param_u32(params: &Value, key: &str) -> Result<u32, String> {
    let v = param_i64(params, key)?;
    u32::try_from(v).map_err(|_| format!("parameter {key:?} must be nonnegative"))
}

fn param_rational(params: &Value, key: &str) -> Result<Rational, String> {
    match params.get(key) {
        Some(Value::Number(n)) => n
            .as_i64()
            .map(Rational64::from_integer)
            .ok_or_else(|| format!("parameter {key:?} out of range")),
        Some(Value::String(s)) => {
            parse_rational(s).map_err(|e| format!("parameter {key:?}: {e}"))
        }
        _ => Err(format!("missing rational parameter {key:?}")),
    }
}
