//! `lpp` command-line driver: Monte Carlo ensembles, exact and limiting
//! distribution tables, a self-test, and manifest-based replay.

use std::ffi::OsString;

pub mod args;
mod commands;
mod error;
pub mod manifest;
mod output;

pub use args::{parse_args, Cli, Command};
pub use commands::execute;
pub use commands::selftest::{run_suites, SuiteResult, Tolerances};
pub use error::CliError;
pub use manifest::{ManifestError, RunManifest, MANIFEST_FILE};
pub use output::grid;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "LPP_THREADS";

/// Parses a `LPP_THREADS` value: a positive integer, or unset.
pub fn parse_threads(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

fn configure_threads() -> Result<(), CliError> {
    let value = std::env::var(THREADS_ENV).ok();
    if let Some(n) = parse_threads(value.as_deref())? {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::debug!("thread pool already configured: {e}");
        }
    }
    Ok(())
}

/// Runs the tool on an argument vector and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match configure_threads().and_then(|()| execute(&cli.command)) {
        Ok(_) => 0,
        Err(e) => {
            eprintln!("lpp: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_values() {
        assert_eq!(parse_threads(None).unwrap(), None);
        assert_eq!(parse_threads(Some("4")).unwrap(), Some(4));
        for bad in ["0", "-1", "many", ""] {
            assert_eq!(parse_threads(Some(bad)).unwrap_err().exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(main_with(["lpp", "sample", "--shape", "lt", "--n", "5", "--out", "x"]), 2);
        assert_eq!(main_with(["lpp", "bogus"]), 2);
        assert_eq!(main_with(["lpp", "--help"]), 0);
    }
}
