use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trisect::par::Exec;
use trisect::pipeline::{self, Outcome, RunOptions, VerifyKind};
use trisect::schema::{parse, PipelineConfig};

#[derive(Parser)]
#[command(name = "tw", version, about = "Trisection workbench")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Primary numerical tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for sampled point sets.
    #[arg(long, global = true, default_value_t = RunOptions::default().seed)]
    seed: u64,
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pleated branch locus in B⁴, certified and pulled back.
    SteinB4 {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Per-sector counts, e.g. `1,0,2`; overrides the config file.
        #[arg(long, value_parser = parse_triple)]
        stabilizations: Option<[u32; 3]>,
    },
    /// Check an input file.
    Verify {
        #[arg(value_parser = parse_kind)]
        kind: VerifyKind,
        input: Option<PathBuf>,
    },
}

fn parse_triple(s: &str) -> Result<[u32; 3], String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|_| "expected three comma-separated counts".to_string())
}

fn parse_kind(s: &str) -> Result<VerifyKind, String> {
    s.parse().map_err(|e: trisect::Error| e.to_string())
}

fn input_error(command: &str, location: &str, message: String) -> Outcome {
    let report = serde_json::json!({
        "schema": trisect::schema::SCHEMA,
        "command": command,
        "status": pipeline::Status::InputError,
        "exit_code": 3,
        "error": { "location": location, "message": message },
    });
    Outcome {
        status: pipeline::Status::InputError,
        report,
    }
}

fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match &cli.command {
        Command::SteinB4 { config, stabilizations } => {
            let mut cfg = match config {
                None => PipelineConfig::default(),
                Some(path) => match fs::read_to_string(path) {
                    Err(e) => return input_error("stein-b4", "config", format!("{}: {e}", path.display())),
                    Ok(text) => match parse::<PipelineConfig>(&text) {
                        Ok(c) => c,
                        Err(e) => return input_error("stein-b4", "config", e.to_string()),
                    },
                },
            };
            if let Some(n) = stabilizations {
                cfg.stabilizations = *n;
            }
            if let Some(t) = cli.tol {
                cfg.tol = t;
            }
            pipeline::stein_b4(&cfg, exec)
        }
        Command::Verify { kind, input } => {
            let command = format!("verify {kind}");
            let text = match input {
                None => None,
                Some(path) => match fs::read_to_string(path) {
                    Ok(t) => Some(t),
                    Err(e) => return input_error(&command, "input", format!("{}: {e}", path.display())),
                },
            };
            let opts = RunOptions {
                tol: cli.tol,
                seed: cli.seed,
                exec,
            };
            pipeline::verify(*kind, text.as_deref(), &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let outcome = run(&cli);
    let text = outcome.render();
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("tw: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.exit_code() as u8)
}
