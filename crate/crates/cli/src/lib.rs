//! Library side of the `ohmnet` command. [`run`] parses arguments, executes
//! one command and returns the process exit code, so the whole surface can be
//! driven from tests with in-memory writers.

pub mod args;
pub mod bench;
pub mod check;
pub mod conjecture;
pub mod resist;
mod source;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format};
pub use source::{load, Loaded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_THRESHOLD: i32 = 3;

pub const THREADS_ENV: &str = "OHMNET_THREADS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Two methods returned different exact values.
    Disagreement(String),
    Threshold(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
            CliError::Threshold(_) => EXIT_THRESHOLD,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Disagreement(m) => write!(f, "method disagreement: {m}"),
            CliError::Threshold(m) => write!(f, "threshold not met: {m}"),
        }
    }
}

impl From<ohmnet_core::Error> for CliError {
    fn from(e: ohmnet_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command produced: the main payload plus notes for stderr.
#[derive(Debug, Default)]
pub struct Outcome {
    pub body: String,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn body(body: String) -> Self {
        Self {
            body,
            notes: Vec::new(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "{e}");
        return e.exit_code();
    }
    let (result, output) = dispatch(cli.command);
    match result {
        Ok(outcome) => {
            for note in &outcome.notes {
                let _ = writeln!(err, "{note}");
            }
            match emit(&outcome.body, output.as_deref(), out) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    e.exit_code()
                }
            }
        }
        Err((e, partial)) => {
            if let Some(partial) = partial {
                let _ = emit(&partial.body, output.as_deref(), out);
                for note in &partial.notes {
                    let _ = writeln!(err, "{note}");
                }
            }
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

type Dispatched = (
    Result<Outcome, (CliError, Option<Outcome>)>,
    Option<std::path::PathBuf>,
);

fn dispatch(command: Command) -> Dispatched {
    let plain = |r: CliResult<Outcome>| r.map_err(|e| (e, None));
    match command {
        Command::Resist(a) => {
            let path = a.out.output.clone();
            (plain(resist::run(&a)), path)
        }
        Command::Check(a) => {
            let path = a.out.output.clone();
            (check::run(&a), path)
        }
        Command::Conjecture(a) => {
            let path = a.out.output.clone();
            (conjecture::run(&a), path)
        }
        Command::Bench(a) => {
            let path = a.out.output.clone();
            (bench::run(&a), path)
        }
        Command::Matrix(a) => {
            let path = a.out.output.clone();
            (plain(resist::matrix(&a)), path)
        }
        Command::Reduce(a) => {
            let path = a.out.output.clone();
            (plain(resist::reduce(&a)), path)
        }
    }
}

fn emit(body: &str, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
        }
        None => Ok(out.write_all(body.as_bytes())?),
    }
}

/// Sizes the global rayon pool from `OHMNET_THREADS` when set. Only the
/// first call in a process takes effect.
fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got {raw:?}"
        ))
    })?;
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

pub(crate) fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
