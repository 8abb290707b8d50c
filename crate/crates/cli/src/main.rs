use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chow_verify_core::chow::{builtin_ring, eval_outcome, load_ring_config, ChowError, Ring, BUILTIN_RINGS};
use chow_verify_core::m6::{load_families, solve_class};
use chow_verify_core::report::{run_suite, Suite, VerifyOptions};

/// Exact intersection numbers and divisor classes for genus-6 curves on the quintic del Pezzo surface.
#[derive(Parser)]
#[command(name = "chow-verify", version)]
struct Cli {
    /// Colour the text report (`1`) or not (`0`).
    #[arg(long, env = "CHOW_VERIFY_COLOR", default_value = "0", global = true, hide_env_values = true)]
    color: ColorFlag,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorFlag {
    #[value(name = "0")]
    Off,
    #[value(name = "1")]
    On,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Ring config replacing the built-in sections blowup in the t5 suite.
        #[arg(long, value_name = "FILE")]
        t5_ring: Option<PathBuf>,
    },
    /// Evaluate a cycle expression: prints the degree of a top-degree class, else the class.
    Eval {
        /// Built-in ring name or path to a JSON ring config.
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Solve for the class whose pairings with five families equal their `phi` values.
    SolveClass {
        #[arg(long, value_name = "FILE")]
        families: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn resolve_ring(spec: &str) -> Result<Ring, ChowError> {
    if BUILTIN_RINGS.contains(&spec) {
        return builtin_ring(spec);
    }
    let path = Path::new(spec);
    if path.exists() {
        load_ring_config(path)
    } else {
        Err(ChowError::UnknownRing(spec.to_string()))
    }
}

fn eval(ring: &str, expr: &str) -> Result<String, String> {
    let ring = resolve_ring(ring).map_err(|e| e.to_string())?;
    match eval_outcome(&ring, expr) {
        Ok(out) => Ok(out.to_string()),
        Err(ChowError::Parse(p)) => Err(format!("{p}\n  {expr}\n  {}^", " ".repeat(expr[..p.offset].chars().count()))),
        Err(e) => Err(e.to_string()),
    }
}

/// Write to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = matches!(cli.color, ColorFlag::On);
    match cli.command {
        Command::Verify { suite, format, t5_ring } => {
            let mut options = VerifyOptions::default();
            if let Some(path) = t5_ring {
                match load_ring_config(&path) {
                    Ok(r) => options.t5_ring = Some(r),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            let report = run_suite(suite, &options);
            match format {
                Format::Text => emit(&report.to_text(color)),
                Format::Json => emit(&format!("{}\n", report.to_json())),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Eval { ring, expr } => match eval(&ring, &expr) {
            Ok(s) => {
                emit(&format!("{s}\n"));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::SolveClass { families } => {
            let result = load_families(&families).and_then(|f| solve_class(&f));
            match result {
                Ok(d) => {
                    emit(&format!("{d}\n"));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
