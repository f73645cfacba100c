//! Command line surface. Exit codes: 0 success or valid coloring, 1 invalid
//! coloring, 2 bad input, 3 failed internal check.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use starcolor::bounds::{bound_report, BoundReport};
use starcolor::oracle::{validate_coloring, ViolationKind};
use starcolor::star_tree::color_tree_from;
use starcolor::{star_index, TwoHProfile};

use crate::error::{CliError, Result};
use crate::format::{coloring_to_json, parse_coloring, parse_tree, to_dot, write_tree, LabeledTree};
use crate::{bench, generate, selftest};

#[derive(Debug, Parser)]
#[command(name = "starcolor", version, about = "Exact star edge coloring of trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Caterpillar,
    Regular2h,
    Profile,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Star chromatic index with a per-vertex bound summary.
    Index {
        /// Tree file ("-" for stdin).
        #[arg(long)]
        input: String,
    },
    /// Optimum star edge coloring (json, dot or plain).
    Color {
        #[arg(long)]
        input: String,
        /// Label of the vertex to root the sweep at (default: smallest label).
        #[arg(long)]
        root: Option<u64>,
    },
    /// Bounds and exact index of a 2H profile such as "2,3,3".
    Bounds {
        #[arg(long)]
        profile: String,
    },
    /// Check a coloring file against a tree file.
    Validate {
        #[arg(long)]
        input: String,
        #[arg(long)]
        coloring: String,
    },
    /// Write a generated tree file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every internal consistency check.
    Selftest {
        #[arg(long, default_value_t = selftest::Config::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = selftest::Config::default().seed)]
        seed: u64,
        /// How many random trees the validation sweep colors.
        #[arg(long, default_value_t = selftest::Config::default().random_trees)]
        random_trees: usize,
    },
    /// Time coloring of seeded random trees.
    Bench {
        /// Comma separated tree sizes; empty for none.
        #[arg(long, default_value = "1000,10000")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_tree(path: &str) -> Result<LabeledTree> {
    parse_tree(&read_input(path)?)
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("{what}: {s:?} is not a non-negative integer"))))
        .collect()
}

fn parse_profile(text: &str) -> Result<TwoHProfile> {
    let n = parse_list(text, "profile")?;
    if n.is_empty() {
        return Err(CliError::Usage("profile needs at least one entry".into()));
    }
    Ok(TwoHProfile::new(n))
}

fn to_json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

pub fn run(cli: Cli) -> Result<Output> {
    let format = cli.format;
    match cli.command {
        Command::Index { input } => index(&read_tree(&input)?, format.unwrap_or(Format::Plain)),
        Command::Color { input, root } => color(&read_tree(&input)?, root, format.unwrap_or(Format::Json)),
        Command::Bounds { profile } => bounds(&parse_profile(&profile)?, format.unwrap_or(Format::Plain)),
        Command::Validate { input, coloring } => {
            let lt = read_tree(&input)?;
            let coloring = parse_coloring(&read_input(&coloring)?, &lt)?;
            validate(&lt, &coloring, format.unwrap_or(Format::Plain))
        }
        Command::Gen { kind, n, r, t, profile, seed } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| CliError::Usage(format!("gen {kind:?} needs --{flag}").to_lowercase()))
            };
            let tree = match kind {
                GenKind::Random => generate::random_tree(need(n, "n")?, seed)?,
                GenKind::Caterpillar => generate::caterpillar(need(n, "n")?, seed)?,
                GenKind::Regular2h => generate::regular_2h(need(r, "r")?, need(t, "t")?)?,
                GenKind::Profile => {
                    let profile = profile.ok_or_else(|| CliError::Usage("gen profile needs --profile".into()))?;
                    generate::from_profile(&parse_profile(&profile)?)?
                }
            };
            Ok(Output::ok(write_tree(&LabeledTree::from_dense(tree))))
        }
        Command::Selftest { max_n, seed, random_trees } => {
            let config = selftest::Config { max_n, seed, random_trees };
            Ok(selftest_report(&config, format.unwrap_or(Format::Plain)))
        }
        Command::Bench { sizes, seed } => {
            let rows = bench::run(&parse_list(&sizes, "sizes")?, seed)?;
            Ok(Output::ok(bench_table(&rows, format.unwrap_or(Format::Plain))))
        }
    }
}

fn report_json(report: &BoundReport) -> Value {
    json!({
        "lower": report.lower,
        "lower_source": report.lower_source.tag(),
        "upper": report.upper,
        "upper_source": report.upper_source.tag(),
        "exact": report.exact,
        "separately_rounded": report.separately_rounded,
    })
}

fn index(lt: &LabeledTree, format: Format) -> Result<Output> {
    let tree = &lt.tree;
    let m = star_index(tree)?;
    let mut memo: BTreeMap<Vec<usize>, BoundReport> = BTreeMap::new();
    let mut rows = Vec::new();
    for v in (0..tree.vertex_count()).filter(|&v| tree.degree(v) > 0) {
        let profile = tree.two_ball(v)?;
        if !memo.contains_key(profile.n()) {
            memo.insert(profile.n().to_vec(), bound_report(&profile, true)?);
        }
        rows.push((v, profile.n().to_vec()));
    }
    let text = match format {
        Format::Json => {
            let vertices: Vec<Value> = rows
                .iter()
                .map(|(v, n)| {
                    let mut entry = json!({ "vertex": lt.label(*v), "degree": tree.degree(*v), "profile": n });
                    if let (Value::Object(entry), Value::Object(report)) = (&mut entry, report_json(&memo[n])) {
                        entry.extend(report);
                    }
                    entry
                })
                .collect();
            to_json_text(&json!({ "index": m, "vertices": vertices }))
        }
        Format::Plain | Format::Dot => {
            let mut out = format!("index {m}\nvertex degree lower upper exact profile\n");
            for (v, n) in &rows {
                let r = &memo[n];
                let profile: Vec<String> = n.iter().map(usize::to_string).collect();
                writeln!(
                    out,
                    "{} {} {} {} {} {}",
                    lt.label(*v),
                    tree.degree(*v),
                    r.lower,
                    r.upper,
                    r.exact.unwrap_or(0),
                    profile.join(",")
                )
                .unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn color(lt: &LabeledTree, root: Option<u64>, format: Format) -> Result<Output> {
    let root = match root {
        Some(label) => lt.id_of(label).ok_or_else(|| CliError::Usage(format!("no vertex labeled {label}")))?,
        None => 0,
    };
    let (_, coloring) = color_tree_from(&lt.tree, root)?;
    if !validate_coloring(&lt.tree, &coloring)?.valid {
        return Err(CliError::Core(starcolor::Error::Internal("emitted coloring failed validation")));
    }
    let text = match format {
        Format::Json => to_json_text(&coloring_to_json(lt, &coloring)),
        Format::Dot => to_dot(lt, &lt.tree.root_at(root)?, &coloring),
        Format::Plain => {
            let mut out = format!("palette {}\n", coloring.palette_size());
            for ((u, v), c) in coloring.iter() {
                writeln!(out, "{} {} {c}", lt.label(u), lt.label(v)).unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn bounds(profile: &TwoHProfile, format: Format) -> Result<Output> {
    let report = bound_report(profile, true)?;
    let text = match format {
        Format::Json => {
            let mut value = json!({ "profile": profile.n() });
            if let (Value::Object(out), Value::Object(fields)) = (&mut value, report_json(&report)) {
                out.extend(fields);
            }
            to_json_text(&value)
        }
        Format::Plain | Format::Dot => format!(
            "lower {} ({})\nupper {} ({})\nexact {}\n",
            report.lower,
            report.lower_source.tag(),
            report.upper,
            report.upper_source.tag(),
            report.exact.unwrap_or(0)
        ),
    };
    Ok(Output::ok(text))
}

fn validate(lt: &LabeledTree, coloring: &starcolor::EdgeColoring, format: Format) -> Result<Output> {
    let verdict = validate_coloring(&lt.tree, coloring).map_err(|e| match e {
        starcolor::Error::ColorOutOfPalette { edge: (u, v), color, palette } => CliError::Coloring(format!(
            "edge {}-{} has color {color} outside palette 1..={palette}",
            lt.label(u),
            lt.label(v)
        )),
        other => other.into(),
    })?;
    let code = if verdict.valid { 0 } else { 1 };
    let violation = verdict.violation.as_ref().map(|violation| {
        let kind = match violation.kind {
            ViolationKind::NotProper => "not-proper",
            ViolationKind::BiColoredP4 => "bi-colored-p4",
        };
        let witness: Vec<u64> = violation.witness.iter().map(|&v| lt.label(v)).collect();
        (kind, witness)
    });
    let text = match format {
        Format::Json => to_json_text(&json!({
            "valid": verdict.valid,
            "violation": violation.as_ref().map(|(kind, witness)| json!({ "kind": kind, "witness": witness })),
        })),
        Format::Plain | Format::Dot => match &violation {
            None => "valid\n".to_string(),
            Some((kind, witness)) => {
                let path: Vec<String> = witness.iter().map(u64::to_string).collect();
                format!("invalid {kind} {}\n", path.join("-"))
            }
        },
    };
    Ok(Output { text, code })
}

fn selftest_report(config: &selftest::Config, format: Format) -> Output {
    let reports = selftest::run_all(config);
    let code = if reports.iter().any(|r| r.status == selftest::Status::Fail) {
        3
    } else if reports.iter().any(|r| r.status == selftest::Status::TooLarge) {
        2
    } else {
        0
    };
    let status = |s: selftest::Status| match s {
        selftest::Status::Pass => "PASS",
        selftest::Status::Fail => "FAIL",
        selftest::Status::TooLarge => "TOO-LARGE",
    };
    let text = match format {
        Format::Json => to_json_text(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "check": r.id.name(),
                        "status": status(r.status),
                        "detail": r.detail,
                        "seconds": r.elapsed.as_secs_f64(),
                    })
                })
                .collect(),
        )),
        Format::Plain | Format::Dot => {
            let mut out = String::new();
            for r in &reports {
                writeln!(out, "{:<9} {:<22} {:>9.2?}  {}", status(r.status), r.id.name(), r.elapsed, r.detail).unwrap();
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} checks passed", reports.len()).unwrap();
            out
        }
    };
    Output { text, code }
}

fn bench_table(rows: &[bench::BenchRow], format: Format) -> String {
    match format {
        Format::Json => to_json_text(&Value::Array(
            rows.iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "index": r.index,
                        "color_seconds": r.color_time.as_secs_f64(),
                        "validate_seconds": r.validate_time.as_secs_f64(),
                    })
                })
                .collect(),
        )),
        Format::Plain | Format::Dot => {
            let mut out = String::from("n index color_ms validate_ms\n");
            for r in rows {
                writeln!(
                    out,
                    "{} {} {:.3} {:.3}",
                    r.n,
                    r.index,
                    r.color_time.as_secs_f64() * 1e3,
                    r.validate_time.as_secs_f64() * 1e3
                )
                .unwrap();
            }
            out
        }
    }
}
