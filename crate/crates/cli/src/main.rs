//! `weylchar`: character polynomials, tables, fits, self-checks and the
//! cohomology pipelines from the command line.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use weylchar::applications::{analyze, Source};
use weylchar::charpoly::fit;
use weylchar::fiw_model::recover_from_sequence;
use weylchar::hyperoct_char::irr_char_poly;
use weylchar::partitions::{double_partitions_of, partitions_of};
use weylchar::signed_perm::conjugacy_classes;
use weylchar::sym_char::SymCharTable;
use weylchar::verify::{run_suite, Suite};
use weylchar::{CharacterPolynomial, ClassFunction, DoublePartition, Error, Family, Group, IrreducibleLabel};

#[derive(Parser, Debug)]
#[command(name = "weylchar", version, about = "Exact character polynomials for S_n, B_n and D_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character polynomial of a stable irreducible label `λ|ν`.
    Irr {
        #[arg(long, allow_hyphen_values = true)]
        label: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Full irreducible character table of S_n (A) or B_n (BC).
    Table {
        #[arg(long, value_parser = parse_family)]
        group: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Fits a character polynomial to class-function data
    /// `{"n": {"class": "value"}}`.
    Fit {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_parser = parse_family, default_value = "BC")]
        family: Family,
    },
    /// Runs a self-check suite and reports pass and fail counts.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cohomology pipeline: equivariant characters, fit, decomposition.
    App {
        #[arg(long, value_parser = parse_source)]
        pipeline: Source,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        degree: Option<usize>,
        /// Inclusive range `a..b` (or `a..=b`), or a comma-separated list.
        #[arg(long, value_parser = parse_range)]
        range: Option<NRange>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Recovers an FI#-module from a character sequence `{"n": {...}}`.
    Module {
        #[arg(long)]
        recover: PathBuf,
        #[arg(long, value_parser = parse_family, default_value = "BC")]
        family: Family,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_source(s: &str) -> Result<Source, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Debug)]
struct NRange(Vec<usize>);

fn parse_range(s: &str) -> Result<NRange, String> {
    parse_values(s).map(NRange)
}

fn parse_values(s: &str) -> Result<Vec<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound {t:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        Ok((a..=b).collect())
    } else {
        s.split(',').map(num).collect()
    }
}

/// Exit 2 for malformed input, 1 for a failed mathematical check.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::InconsistentLabel(_)
            | Error::CapExceeded { .. }
            | Error::Unsupported { .. }
            | Error::NonConsecutive { .. }
            | Error::GroupMismatch { .. }
            | Error::SizeMismatch { .. }
            | Error::PaddingFails { .. }
            | Error::HasYVariables => Failure::Usage(e.to_string()),
            Error::DegenerateFit { .. }
            | Error::Inconsistent { .. }
            | Error::NonIntegralMultiplicity { .. }
            | Error::NotACharacter { .. } => Failure::Check(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Irr { label, format } => irr(&label, format),
        Command::Table { group, n, format } => table(Group::new(group, n), format),
        Command::Fit { degree, data, family } => {
            let seq = read_sequence(&data, family)?;
            let p = fit(&seq, degree)?;
            Ok(polynomial_text(&p))
        }
        Command::Verify { suite, max_n, seed } => {
            let report = run_suite(suite, max_n, seed);
            let mut out = format!(
                "suite {suite} (max n {max_n}): {} passed, {} failed\n",
                report.passed.len(),
                report.failed.len()
            );
            for (name, reason) in &report.failed {
                out.push_str(&format!("FAIL {name}: {reason}\n"));
            }
            if report.all_passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check(format!("{} checks failed", report.failed.len())))
            }
        }
        Command::App {
            pipeline,
            family,
            m,
            degree,
            range,
            format,
        } => {
            let range = range.map(|r| r.0);
            if let Some(r) = &range {
                if r.first() != Some(&0) || r.windows(2).any(|w| w[1] != w[0] + 1) {
                    return Err(Failure::Usage("range must be consecutive from 0".into()));
                }
            }
            let report = analyze(pipeline, family, m, degree, range)?;
            Ok(match format {
                ReportFormat::Json => pretty(&report.to_json()?),
                ReportFormat::Latex => report.to_latex()?,
                ReportFormat::Text => {
                    let mut out = polynomial_text(&report.polynomial);
                    out.push_str(&format!("decomposition: {}\n", report.decomposition.to_json()?["components"]));
                    out.push_str(&format!("restriction: {}\n", report.restriction.to_binomial_string()));
                    let dims: Vec<String> = report.dimensions.iter().map(|(n, d)| format!("{n}:{d}")).collect();
                    out.push_str(&format!("dimensions: {}\n", dims.join(" ")));
                    out
                }
            })
        }
        Command::Module { recover, family } => {
            let seq = read_sequence(&recover, family)?;
            let module = recover_from_sequence(&seq, family)?;
            Ok(pretty(&module.to_json()?))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn polynomial_text(p: &CharacterPolynomial) -> String {
    format!("binomial: {}\nexpanded: {}\n", p.to_binomial_string(), p)
}

fn irr(label: &str, format: ReportFormat) -> Result<String, Failure> {
    let dp: DoublePartition = label.parse()?;
    let label = IrreducibleLabel::new(dp.plus, dp.minus);
    let p = irr_char_poly(&label);
    Ok(match format {
        ReportFormat::Text => polynomial_text(&p),
        ReportFormat::Json => pretty(&json!({
            "label": label.to_string(),
            "binomial": p.to_binomial_string(),
            "expanded": p.to_string(),
            "terms": p.to_json(),
        })),
        ReportFormat::Latex => format!("{}\n", p.to_latex()),
    })
}

fn table(group: Group, format: TableFormat) -> Result<String, Failure> {
    let rows: Vec<(String, ClassFunction)> = match group.family {
        Family::A => {
            let mn = SymCharTable::new(group.n);
            partitions_of(group.n)
                .into_iter()
                .map(|lam| {
                    let chi = ClassFunction::from_fn(group, |c| {
                        let v = mn.value(&lam, &c.cycle_type().plus).expect("class of S_n");
                        weylchar::q(v)
                    });
                    (lam.to_text(), chi)
                })
                .collect()
        }
        Family::BC => double_partitions_of(group.n)
            .into_iter()
            .map(|dp| {
                let p = irr_char_poly(&IrreducibleLabel::of_irrep(&dp));
                (dp.to_text(), ClassFunction::from_polynomial(group, &p))
            })
            .collect(),
        Family::D => {
            return Err(Failure::Usage(
                "irreducible tables are available for A and BC only".into(),
            ))
        }
    };
    let classes = conjugacy_classes(group);
    let class_text = |i: usize| match group.family {
        Family::A => classes[i].cycle_type().plus.to_text(),
        _ => classes[i].key.to_text(),
    };
    Ok(match format {
        TableFormat::Json => {
            let mut sizes = Map::new();
            for (i, c) in classes.iter().enumerate() {
                sizes.insert(class_text(i), Value::String(c.size.to_string()));
            }
            let mut chars = Map::new();
            for (label, chi) in &rows {
                let mut values = Map::new();
                for (i, v) in chi.values().iter().enumerate() {
                    values.insert(class_text(i), Value::String(v.to_string()));
                }
                chars.insert(label.clone(), Value::Object(values));
            }
            pretty(&json!({
                "group": group.to_string(),
                "class_sizes": sizes,
                "characters": chars,
            }))
        }
        TableFormat::Csv => {
            let quote = |s: String| format!("\"{s}\"");
            let mut out = String::from("irrep");
            for i in 0..classes.len() {
                out.push(',');
                out.push_str(&quote(class_text(i)));
            }
            out.push('\n');
            for (label, chi) in &rows {
                out.push_str(&quote(label.clone()));
                for v in chi.values() {
                    out.push(',');
                    out.push_str(&v.to_string());
                }
                out.push('\n');
            }
            out
        }
        TableFormat::Latex => {
            let mut out = format!("\\begin{{tabular}}{{l{}}}\n", "r".repeat(classes.len()));
            let header: Vec<String> = (0..classes.len()).map(|i| format!("${}$", class_text(i))).collect();
            out.push_str(&format!("& {} \\\\\n\\hline\n", header.join(" & ")));
            for (label, chi) in &rows {
                let values: Vec<String> = chi.values().iter().map(|v| format!("${v}$")).collect();
                out.push_str(&format!("${label}$ & {} \\\\\n", values.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    })
}

/// `{"n": {"class": "value"}}`, returned in increasing `n`.
fn read_sequence(path: &Path, family: Family) -> Result<Vec<ClassFunction>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not JSON: {e}", path.display())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::Usage("data must be an object keyed by n".into()))?;
    let mut by_n = BTreeMap::new();
    for (k, v) in obj {
        let n: usize = k
            .parse()
            .map_err(|_| Failure::Usage(format!("bad key {k:?}: expected n")))?;
        by_n.insert(n, ClassFunction::from_json(Group::new(family, n), v)?);
    }
    Ok(by_n.into_values().collect())
}
