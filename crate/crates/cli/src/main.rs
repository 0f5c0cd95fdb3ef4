mod args;
mod config;
mod problem;
mod scan;
mod validate;

use std::ffi::OsString;
use std::fmt;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, EnergyArgs};
use problem::Problem;

#[derive(Debug)]
pub enum CliError {
    /// Bad or inconsistent flags (exit 2).
    Usage(String),
    /// Atom outside the physical region (exit 3).
    Region(String),
    /// Output could not be written (exit 4).
    Output(String),
    /// Some invariant check failed (exit 1).
    Validation,
    /// Anything else (exit 1).
    Failure(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Region(_) => 3,
            CliError::Output(_) => 4,
            CliError::Validation | CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "invalid arguments: {m}"),
            CliError::Region(m) => write!(f, "region violation: {m}"),
            CliError::Output(m) => write!(f, "cannot write output: {m}"),
            CliError::Validation => f.write_str("validation failed"),
            CliError::Failure(m) => f.write_str(m),
        }
    }
}

#[derive(Serialize)]
struct EnergyReport<'a> {
    energy: f64,
    err_estimate: f64,
    method: &'static str,
    units: &'static str,
    inputs: &'a Problem,
}

fn energy(a: &EnergyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = Problem::from_args(&a.problem)?;
    let z0 = a
        .problem
        .z0
        .ok_or_else(|| CliError::Usage("--z0 is required".into()))?;
    let e = p.evaluate(p.rho0, z0)?;
    let report = EnergyReport {
        energy: e.value,
        err_estimate: e.err_estimate,
        method: e.method.name(),
        units: e.units.name(),
        inputs: &p,
    };
    let json =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::Failure(e.to_string()))?;
    emit(out, &format!("{json}\n"))
}

/// A closed pipe on the reader's side is not an error.
pub fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match out.write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(CliError::Output(e.to_string())),
        _ => Ok(()),
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("VDW_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            // Only fails if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

/// Parse `argv`, run the command and return the process exit code.
pub fn run(argv: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let argv = match config::expand(argv) {
        Ok(a) => a,
        Err(m) => {
            let _ = writeln!(err, "vdw: {}", CliError::Usage(m));
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    configure_threads();
    let result = match &cli.command {
        Command::Energy(a) => energy(a, out),
        Command::Scan(a) => scan::run(a, out),
        Command::Validate(a) => validate::run(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::Validation) {
                let _ = writeln!(err, "vdw: {e}");
            }
            e.code()
        }
    }
}

fn main() -> ExitCode {
    let code = run(
        std::env::args_os().collect(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}

#[cfg(test)]
mod tests;
