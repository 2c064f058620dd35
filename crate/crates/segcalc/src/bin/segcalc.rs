use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use segcalc::{parse_session, run_command, CommandKind, OracleTable, RunOptions, Sign};

/// Segment calculus for standard modules of inner forms of GL(n).
#[derive(Parser)]
#[command(name = "segcalc", version, about)]
struct Cli {
    /// order | classify | mackey | verify | jl | cosets | epsilon
    command: String,

    /// Session file declaring lines, context and the multisegment.
    session: PathBuf,

    /// Override the degree d of the division algebra.
    #[arg(long)]
    d: Option<u32>,

    /// Override eta_{E/F}(-1); +1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    eta: Option<String>,

    /// Oracle table for base-case atoms (`label = true|false` per line).
    #[arg(long)]
    oracle: Option<PathBuf>,

    /// Batch mode for `verify`: number of random instances.
    #[arg(long, requires = "seed")]
    random: Option<u64>,

    /// Seed for --random.
    #[arg(long, requires = "random")]
    seed: Option<u64>,

    /// Human-readable output instead of JSON.
    #[arg(long, conflicts_with = "json")]
    pretty: bool,

    /// JSON output (the default).
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn fail(code: i32, message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    code as u8
}

fn run(cli: Cli) -> u8 {
    let command = match cli.command.parse::<CommandKind>() {
        Ok(c) => c,
        Err(e) => return fail(2, e),
    };
    let eta = match cli.eta.as_deref() {
        None => None,
        Some("+1") => Some(Sign::Plus),
        Some("-1") => Some(Sign::Minus),
        Some(other) => return fail(2, format!("--eta expects +1 or -1, got `{other}`")),
    };
    let text = match fs::read_to_string(&cli.session) {
        Ok(t) => t,
        Err(e) => return fail(1, format!("{}: {e}", cli.session.display())),
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => return fail(e.exit_code(), e),
    };
    let oracle = match &cli.oracle {
        None => None,
        Some(path) => {
            let text = match fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return fail(1, format!("{}: {e}", path.display())),
            };
            match OracleTable::parse(&text) {
                Ok(table) => Some(table),
                Err(e) => return fail(e.exit_code(), e),
            }
        }
    };
    let opts = RunOptions {
        d: cli.d,
        eta,
        oracle,
        random: cli.random.map(|n| (n, cli.seed.unwrap_or(0))),
    };
    let report = match run_command(command, &session, &opts) {
        Ok(r) => r,
        Err(e) => return fail(e.exit_code(), e),
    };
    if cli.pretty {
        print!("{}", report.to_pretty());
    } else {
        print!("{}", report.to_json());
    }
    if report.counterexample_found() {
        4
    } else {
        0
    }
}
