use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use osx_core::criteria::DEFAULT_MAX_N;
use osx_core::io::read_matroid;
use osx_core::report::{self, Criterion, Format, Outcome, PresentationOptions};
use osx_core::{Matroid, OsxError};

/// Orlik-Solomon ideals, their annihilators, and combinatorial criteria for quadraticity.
#[derive(Debug, Parser)]
#[command(name = "osx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,

    /// Check the circuit axioms of the input before running.
    #[arg(long, global = true)]
    validate_axioms: bool,

    /// Largest ground set accepted by exhaustive searches.
    #[arg(long, default_value_t = DEFAULT_MAX_N, global = true)]
    max_n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series and degreewise dimensions of I and J(2).
    Analyze { file: PathBuf },
    /// Decide line-closure, p-independence or quadraticity.
    Check {
        file: PathBuf,
        /// `lcl`, `pindep:<p>` or `quadratic`.
        #[arg(long, value_parser = parse_criterion)]
        criterion: Criterion,
    },
    /// Basis of the degree-q part of the annihilator of I.
    Annihilator {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Verify that the boundaries of circuits form a Groebner basis.
    GroebnerVerify { file: PathBuf },
    /// The elements z(T) for nbc-sets of size p and their basis checks.
    Zbasis {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Generators and relations of the annihilator in degree n - rank + 1.
    Presentation {
        file: PathBuf,
        #[arg(long)]
        trees: bool,
        #[arg(long)]
        relations: bool,
        #[arg(long)]
        verify_basis: bool,
    },
    /// Full report for a built-in configuration.
    Casestudy {
        #[arg(value_parser = ["cross", "nine32"])]
        name: String,
    },
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    s.parse().map_err(|e: OsxError| e.to_string())
}

fn load(file: &Path, validate: bool) -> Result<Matroid, OsxError> {
    let m = read_matroid(file)?;
    if validate {
        m.validate_axioms().map_err(|e| OsxError::Input(format!("{}: {e}", file.display())))?;
    }
    Ok(m)
}

fn run(cli: &Cli) -> Result<Outcome, OsxError> {
    let load = |f: &PathBuf| load(f, cli.validate_axioms);
    match &cli.command {
        Command::Analyze { file } => report::analyze(&load(file)?),
        Command::Check { file, criterion } => report::check(&load(file)?, *criterion, cli.max_n),
        Command::Annihilator { file, degree } => report::annihilator(&load(file)?, *degree),
        Command::GroebnerVerify { file } => report::groebner(&load(file)?),
        Command::Zbasis { file, degree } => report::zbasis(&load(file)?, *degree),
        Command::Presentation { file, trees, relations, verify_basis } => report::presentation(
            &load(file)?,
            PresentationOptions { trees: *trees, relations: *relations, verify_basis: *verify_basis },
        ),
        Command::Casestudy { name } => report::case_study(name, cli.max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", report::render(&outcome.report, cli.format.into()));
            if outcome.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
