//! `recdet`: evaluate recurrences, print their determinant matrices, verify
//! the determinant identity, list the classical families, and compare the
//! determinant algorithms.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 evaluation error,
//! 3 verification mismatch.

mod commands;
mod output;

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use recdet::{DetMethod, RingKind};

#[derive(Debug, Parser)]
#[command(name = "recdet", version, about = "Determinant representations of recurrent sequences")]
struct Cli {
    /// Output format, where the command supports it.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Represent values in this ring (defaults to the input's own ring).
    #[arg(long, global = true)]
    ring: Option<RingKind>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first n terms of a recurrence file.
    Eval {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Print the k×k determinant matrix of a recurrence file.
    Matrix {
        spec: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check det = term for every size up to max-n.
    Verify {
        spec: PathBuf,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "fast")]
        method: DetMethod,
    },
    /// Print a classical family, cross-checked against its closed form.
    Family {
        name: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated coefficients for parametric families.
        #[arg(long)]
        params: Option<String>,
        /// Skip the oracle cross-check.
        #[arg(long)]
        no_check: bool,
    },
    /// Time the determinant algorithms on seeded random Hessenberg matrices.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "fast,bareiss")]
        methods: Vec<DetMethod>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure classes, one per nonzero exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Eval(String),
    Mismatch(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Eval(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Eval(m) | CliError::Mismatch(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let opts = commands::Options {
        format: cli.format,
        ring: cli.ring,
        color: output::color_enabled(stdout.is_terminal()),
    };
    let out = &mut stdout.lock();
    let result = match cli.command {
        Command::Eval { spec, n } => commands::eval(out, &opts, &spec, n),
        Command::Matrix { spec, k } => commands::matrix(out, &opts, &spec, k),
        Command::Verify { spec, max_n, method } => commands::verify(out, &opts, &spec, max_n, method),
        Command::Family {
            name,
            n,
            params,
            no_check,
        } => commands::family(out, &opts, &name, n, params.as_deref(), !no_check),
        Command::Bench { sizes, methods, seed } => commands::bench(out, &opts, &sizes, &methods, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
