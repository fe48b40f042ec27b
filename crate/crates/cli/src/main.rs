//! Command-line front end: reads a JSON job specification, dispatches to
//! the library, and writes the report as JSON or CSV.
//!
//! Exit codes: 0 success, 1 failed property suite, 2 schema error,
//! 3 domain error, 4 numerical failure (no limit / overflow / CFL).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use conformable_cli::report::{ErrorBody, ErrorRecord};
use conformable_cli::spec::{self, JobSpec};
use conformable_cli::{run, CliError};

#[derive(Parser)]
#[command(
    name = "conformable",
    version,
    about = "Conformable fractional calculus and alpha-semigroup toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conformable derivative of a built-in profile (t = 0 takes the limit)
    Deriv(JobArgs),
    /// Fractional integral of a built-in profile
    Integrate(JobArgs),
    /// Semigroup-law residuals of exp((t^a/a) A) over an (s, t) grid
    SemigroupCheck(JobArgs),
    /// Recover the generator of a matrix semigroup from its evaluations
    GenEstimate(JobArgs),
    /// Solve the fractional abstract Cauchy problem
    SolveCauchy(JobArgs),
    /// Solve the fractional transport equation
    SolveTransport(JobArgs),
    /// Run the built-in identity suite
    Properties(PropertiesArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Path to the JSON job specification
    #[arg(long)]
    spec: PathBuf,
    /// Write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct PropertiesArgs {
    /// Optional spec file ({"command": "properties"} is implied)
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Deriv(_) => "deriv",
            Command::Integrate(_) => "integrate",
            Command::SemigroupCheck(_) => "semigroup-check",
            Command::GenEstimate(_) => "gen-estimate",
            Command::SolveCauchy(_) => "solve-cauchy",
            Command::SolveTransport(_) => "solve-transport",
            Command::Properties(_) => "properties",
        }
    }

    fn job_args(&self) -> (Option<&PathBuf>, Option<&PathBuf>, Format) {
        match self {
            Command::Deriv(a)
            | Command::Integrate(a)
            | Command::SemigroupCheck(a)
            | Command::GenEstimate(a)
            | Command::SolveCauchy(a)
            | Command::SolveTransport(a) => (Some(&a.spec), a.out.as_ref(), a.format),
            Command::Properties(a) => (a.spec.as_ref(), a.out.as_ref(), a.format),
        }
    }
}

fn spec_command_name(spec: &JobSpec) -> &'static str {
    match spec {
        JobSpec::Deriv { .. } => "deriv",
        JobSpec::Integrate { .. } => "integrate",
        JobSpec::SemigroupCheck { .. } => "semigroup-check",
        JobSpec::GenEstimate { .. } => "gen-estimate",
        JobSpec::SolveCauchy { .. } => "solve-cauchy",
        JobSpec::SolveTransport { .. } => "solve-transport",
        JobSpec::Properties {} => "properties",
    }
}

fn execute(command: &Command) -> Result<(String, bool), CliError> {
    let (spec_path, _, format) = command.job_args();
    let job = match spec_path {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            spec::parse_spec(&text)?
        }
        None => JobSpec::Properties {},
    };
    let expected = command.name();
    let actual = spec_command_name(&job);
    if actual != expected {
        return Err(CliError::schema(format!(
            "spec command \"{actual}\" does not match subcommand \"{expected}\""
        )));
    }
    let report = run::run(&job)?;
    let all_passed = report.all_passed();
    let payload = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    Ok((payload, all_passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (_, out_path, _) = cli.command.job_args();
    match execute(&cli.command) {
        Ok((payload, all_passed)) => {
            if let Some(path) = out_path {
                if let Err(e) = fs::write(path, &payload) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{payload}");
            }
            // Timing is diagnostic only; the payload stays byte-stable
            // across runs.
            eprintln!(
                "{}: completed in {:.1?}",
                cli.command.name(),
                started.elapsed()
            );
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            let record = ErrorRecord {
                command: cli.command.name().to_string(),
                error: ErrorBody {
                    kind: error.kind().to_string(),
                    message: error.to_string(),
                },
            };
            let mut text =
                serde_json::to_string_pretty(&record).expect("error records always serialize");
            text.push('\n');
            print!("{text}");
            ExitCode::from(error.exit_code())
        }
    }
}
