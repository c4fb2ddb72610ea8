use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minmotion_cli::commands::{self, CliError, Outcome, SampleOptions, EXIT_PARSE};
use minmotion_cli::files::parse_number;
use minmotion_core::exact::Rational;

/// Minimal-degree rational motions with a prescribed trajectory.
///
/// Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error,
/// 3 degenerate input, 4 failed self-check after synthesis.
#[derive(Parser)]
#[command(name = "minmotion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print degree, circularity and normal form of a curve.
    Analyze { curve: PathBuf },
    /// Compute the minimal motion whose origin trajectory is the curve.
    Synthesize {
        curve: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check that a motion file holds the minimal motion of a curve.
    Verify { curve: PathBuf, motion: PathBuf },
    /// Sample a motion as CSV.
    Sample(Box<SampleArgs>),
}

#[derive(clap::Args)]
struct SampleArgs {
    motion: PathBuf,
    /// Point to follow, `x,y,z`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    point: [Rational; 3],
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    from: Rational,
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    to: Rational,
    #[arg(long)]
    count: usize,
    /// Significant digits.
    #[arg(long, default_value_t = 12)]
    digits: u32,
}

fn parse_point(s: &str) -> Result<[Rational; 3], String> {
    let parts = s
        .split(',')
        .map(|p| parse_number(p.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    <[Rational; 3]>::try_from(parts).map_err(|_| format!("expected three coordinates, got {s:?}"))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(o: Outcome) -> u8 {
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    o.code
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Analyze { curve } => {
            print!("{}", commands::analyze(&read(&curve)?)?);
            Ok(0)
        }
        Command::Synthesize { curve, output } => {
            let (file, outcome) = commands::synthesize_cmd(&read(&curve)?)?;
            fs::write(&output, file).map_err(|e| CliError {
                code: EXIT_PARSE,
                message: format!("{}: {e}", output.display()),
            })?;
            Ok(emit(outcome))
        }
        Command::Verify { curve, motion } => {
            Ok(emit(commands::verify(&read(&curve)?, &read(&motion)?)?))
        }
        Command::Sample(args) => {
            let SampleArgs {
                motion,
                point,
                from,
                to,
                count,
                digits,
            } = *args;
            let csv = commands::sample(
                &read(&motion)?,
                &SampleOptions {
                    point,
                    from,
                    to,
                    count,
                    digits,
                },
            )?;
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(csv.as_bytes());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
