use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use coring_lab::commands::{run_command, CommandKind, ElementArgs};
use coring_lab::instance::load_instance;
use coring_lab::report::Report;
use coring_lab::CliError;

/// Exact computations on the coring attached to a comodule algebra: grouplike
/// elements, coboundaries, twist coinvariants, and first cohomology, on
/// explicit finite instances loaded from JSON files.
#[derive(Parser)]
#[command(name = "coring-lab", version, about)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    command: CommandKind,

    /// Path to the JSON instance file.
    instance: PathBuf,

    /// Degree window A..B for k[X, X^-1] enumerations (overrides the file).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    window: Option<(i64, i64)>,

    /// Search-space cap for enumerations (overrides the file).
    #[arg(long)]
    cap: Option<u64>,

    /// Emit the JSON report (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,

    /// Emit a human-readable summary instead of JSON.
    #[arg(long)]
    text: bool,

    /// A single coring element (JSON) for e-test / twist.
    #[arg(long)]
    element: Option<String>,

    /// Left element for iso (JSON).
    #[arg(long)]
    x: Option<String>,

    /// Right element for iso (JSON).
    #[arg(long)]
    y: Option<String>,
}

fn parse_window(raw: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got '{raw}'"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound '{lo}'"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let inst = match load_instance(&cli.instance, cli.window, cli.cap) {
        Ok(inst) => inst,
        Err(e) => {
            eprintln!("coring-lab: {e}");
            return ExitCode::from(2);
        }
    };

    let args = ElementArgs {
        element: cli.element,
        x: cli.x,
        y: cli.y,
    };
    let (result, violations) = match run_command(&inst, cli.command, &args) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("coring-lab: {e}");
            let code = match e {
                CliError::Math(_) | CliError::Usage(_) => 2,
                _ => 2,
            };
            return ExitCode::from(code);
        }
    };

    let report = Report {
        command: cli.command.name().to_string(),
        path: inst.path.clone(),
        sha256: inst.sha256.clone(),
        window: (inst.window.lo, inst.window.hi),
        cap: inst.cap,
        result,
        violations: violations.clone(),
        timing_ms: started.elapsed().as_millis(),
    };

    if cli.text {
        print!("{}", report.to_text());
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable")
        );
    }

    if violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
