use std::path::PathBuf;
use std::process::ExitCode;

use c3rigid::cli::{self, Method, Outcome};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "c3rigid", version, about = "Symmetric Laman checks and rigidity certificates for 3-fold rotational symmetry")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Graph document: {"vertices": n, "edges": [[u, v], ...], "c3": [...]}
    file: PathBuf,
    /// Emit the JSON report on stdout (on by default).
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Generic,
    Frame,
}

#[derive(Subcommand)]
enum Command {
    /// Laman counts, fixed vertices and the symmetric verdict.
    Check(Common),
    /// Construction sequence and tree partition, with their checks.
    Certify(Common),
    /// Exact symmetric placement and its rigidity-matrix rank.
    Realize {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "generic")]
        method: MethodArg,
    },
    /// Compare the pebble game with brute-force subgraph enumeration.
    Oracle(Common),
    /// Draw a symmetric placement as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (name, common) = match &args.command {
        Command::Check(c) => ("check", c),
        Command::Certify(c) => ("certify", c),
        Command::Realize { common, .. } => ("realize", common),
        Command::Oracle(c) => ("oracle", c),
        Command::Render { common, .. } => ("render", common),
    };
    let outcome = match std::fs::read_to_string(&common.file) {
        Err(e) => cli::io_failure(name, format!("cannot read {}: {e}", common.file.display())),
        Ok(input) => match &args.command {
            Command::Check(_) => cli::cmd_check(&input),
            Command::Certify(_) => cli::cmd_certify(&input),
            Command::Realize { seed, method, .. } => {
                let method = match method {
                    MethodArg::Generic => Method::Generic,
                    MethodArg::Frame => Method::Frame,
                };
                cli::cmd_realize(&input, *seed, method)
            }
            Command::Oracle(_) => cli::cmd_oracle(&input),
            Command::Render { seed, out, .. } => cli::cmd_render(&input, *seed, out),
        },
    };
    emit(&outcome, common.json);
    ExitCode::from(outcome.exit_code as u8)
}

fn emit(outcome: &Outcome, json: bool) {
    if let Some(err) = outcome.report.body.get("error") {
        eprintln!("error: {}", err["message"].as_str().unwrap_or("unknown"));
    }
    if json {
        println!("{}", outcome.to_json());
    } else {
        let verdict = match outcome.exit_code {
            cli::EXIT_ISOSTATIC => "isostatic",
            cli::EXIT_NOT_ISOSTATIC => "not isostatic",
            _ => "error",
        };
        println!("{}: {verdict}", outcome.report.command);
    }
}
