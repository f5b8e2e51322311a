//! `geneuler` command-line front end.
//!
//! Exit status: 0 when every requested check passes, 1 when some check fails,
//! 2 on usage errors (unknown preset or target, incompatible pairing, bad range).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geneuler::format::{to_csv, to_json};
use geneuler::presets::find_preset;
use geneuler::report::VerificationReport;
use geneuler::runner::{run_analyze, run_oracle, run_verify, AnalysisCheck};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "geneuler", version, about = "Generalized Eulerian triangles: tables, identity checks, analyses, oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=n of a preset triangle.
    Gen {
        preset: Option<String>,
        n_max: Option<usize>,
        format: Option<Format>,
        #[command(flatten)]
        common: Common,
    },
    /// Check identities; targets may be comma separated and run concurrently.
    Verify {
        targets: Option<String>,
        /// Preset id or "random".
        scope: Option<String>,
        n_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Structural checks on row polynomials.
    Analyze {
        preset: Option<String>,
        n_max: Option<usize>,
        checks: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare a brute-force histogram with the recurrence row.
    Oracle {
        preset: Option<String>,
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long = "preset")]
    preset_flag: Option<String>,
    #[arg(long = "n-max")]
    n_max_flag: Option<usize>,
    #[arg(long = "format")]
    format_flag: Option<Format>,
    /// Comma-separated checks for analyze.
    #[arg(long = "checks")]
    checks_flag: Option<String>,
    /// Seed for the "random" scope.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn pick<T>(flag: Option<T>, positional: Option<T>, name: &str) -> Result<T, Usage> {
    flag.or(positional).ok_or_else(|| Usage(format!("missing {name}")))
}

fn emit(common: &Common, text: &str) -> Result<(), Usage> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_json(r: &VerificationReport) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    v["passed"] = json!(r.passed());
    v
}

fn gen(preset: Option<String>, n_max: Option<usize>, format: Option<Format>, common: &Common) -> Result<bool, Usage> {
    let id = pick(common.preset_flag.clone(), preset, "preset")?;
    let n = pick(common.n_max_flag, n_max, "n_max")?;
    let format = common.format_flag.or(format).unwrap_or(Format::Json);
    let p = find_preset(&id)?;
    let t = p.build(n)?;
    let text = match format {
        Format::Csv => to_csv(&t),
        Format::Json => to_json(p.id, &t, &p.shift) + "\n",
        Format::Text => return Err(Usage("gen writes json or csv".into())),
    };
    emit(common, &text)?;
    Ok(true)
}

fn verify(targets: Option<String>, scope: Option<String>, n_max: Option<usize>, common: &Common) -> Result<bool, Usage> {
    let targets = pick(None, targets, "target")?;
    let scope = pick(common.preset_flag.clone(), scope, "scope")?;
    let n = pick(common.n_max_flag, n_max, "n_max")?;
    let names: Vec<&str> = targets.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|t| {
                let scope = scope.as_str();
                s.spawn(move || run_verify(t, scope, n, common.seed))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed());
    let text = match common.format_flag.unwrap_or(Format::Json) {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        _ => serde_json::to_string_pretty(&reports.iter().map(report_json).collect::<Vec<_>>())? + "\n",
    };
    emit(common, &text)?;
    Ok(passed)
}

fn analyze(preset: Option<String>, n_max: Option<usize>, checks: Option<String>, common: &Common) -> Result<bool, Usage> {
    let id = pick(common.preset_flag.clone(), preset, "preset")?;
    let n = pick(common.n_max_flag, n_max, "n_max")?;
    let checks = match common.checks_flag.clone().or(checks) {
        Some(list) => list.split(',').map(|c| c.trim().parse()).collect::<Result<Vec<AnalysisCheck>, _>>()?,
        None => AnalysisCheck::ALL.to_vec(),
    };
    let r = run_analyze(&id, n, &checks)?;
    let text = match common.format_flag.unwrap_or(Format::Json) {
        Format::Text => format!("{r}\n"),
        _ => serde_json::to_string_pretty(&report_json(&r))? + "\n",
    };
    emit(common, &text)?;
    Ok(r.passed())
}

fn oracle(preset: Option<String>, n: Option<usize>, common: &Common) -> Result<bool, Usage> {
    let id = pick(common.preset_flag.clone(), preset, "preset")?;
    let n = pick(common.n_max_flag, n, "n")?;
    let o = run_oracle(&id, n)?;
    let text = match common.format_flag.unwrap_or(Format::Json) {
        Format::Text => format!("[{}] diff {}\n", o.histogram.join(","), if o.passed() { "empty" } else { "nonempty" }),
        _ => {
            let mut v = serde_json::to_value(&o)?;
            v["passed"] = json!(o.passed());
            serde_json::to_string_pretty(&v)? + "\n"
        }
    };
    emit(common, &text)?;
    Ok(o.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen { preset, n_max, format, common } => gen(preset, n_max, format, &common),
        Command::Verify { targets, scope, n_max, common } => verify(targets, scope, n_max, &common),
        Command::Analyze { preset, n_max, checks, common } => analyze(preset, n_max, checks, &common),
        Command::Oracle { preset, n, common } => oracle(preset, n, &common),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
