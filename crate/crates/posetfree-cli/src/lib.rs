//! Command-line front end for `posetfree`.
//!
//! [`run`] parses arguments, dispatches to a command and maps failures to
//! exit statuses: 1 for domain and usage errors, 2 for capacity errors, 3 for
//! I/O errors. Every command is a pure function of its inputs and seed; the
//! `runtime` field stays null unless `--timing` is given, so reruns match
//! byte for byte.

pub mod args;
pub mod commands;
pub mod formats;
pub mod json;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

use args::{Cli, Format};

/// Environment variable consulted when `--jobs` is absent.
pub const JOBS_ENV: &str = "POSETFREE_JOBS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Capacity(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 1,
            CliError::Capacity(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Capacity(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<posetfree::Error> for CliError {
    fn from(e: posetfree::Error) -> Self {
        if e.is_capacity() {
            CliError::Capacity(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Settings shared by every command.
pub struct Ctx {
    pub format: Option<Format>,
    pub timing: bool,
    pub i_know: bool,
    pub jobs: usize,
    started: Instant,
}

impl Ctx {
    pub fn new(format: Option<Format>, timing: bool, i_know: bool, jobs: usize) -> Ctx {
        Ctx {
            format,
            timing,
            i_know,
            jobs,
            started: Instant::now(),
        }
    }

    /// Seconds since the command started, or null without `--timing`.
    pub fn runtime(&self) -> Value {
        if self.timing {
            Value::from(self.started.elapsed().as_secs_f64())
        } else {
            Value::Null
        }
    }

    /// The requested format if the command supports it, else `default`.
    pub fn format(&self, allowed: &[Format], default: Format) -> CliResult<Format> {
        match self.format {
            None => Ok(default),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(format!("this command does not support --format {f:?}").to_lowercase())),
        }
    }

    /// A capacity limit, replaced by `flag` only under `--i-know`.
    pub fn cap<T: Copy>(&self, flag: Option<T>, default: T) -> CliResult<T> {
        match flag {
            None => Ok(default),
            Some(_) if !self.i_know => Err(CliError::Usage(String::from(
                "capacity overrides need --i-know: runtime grows exponentially past the default limit",
            ))),
            Some(v) => Ok(v),
        }
    }

    /// Runs `f` on a pool of `jobs` threads.
    pub fn pool<R: Send>(&self, f: impl FnOnce() -> R + Send) -> CliResult<R> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

fn resolve_jobs(flag: Option<usize>, env: Option<String>) -> CliResult<usize> {
    let jobs = match (flag, env) {
        (Some(k), _) => k,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{JOBS_ENV}={v} is not a thread count")))?,
        (None, None) => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    if jobs == 0 {
        return Err(CliError::Usage(String::from("--jobs must be at least 1")));
    }
    Ok(jobs)
}

/// Parses `argv`, runs the command, writes data to `out` (or `--output`)
/// and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let result = resolve_jobs(cli.global.jobs, std::env::var(JOBS_ENV).ok()).and_then(|jobs| {
        let ctx = Ctx::new(cli.global.format, cli.global.timing, cli.global.i_know, jobs);
        commands::dispatch(&ctx, &cli.command)
    });
    let written = result.and_then(|data| match &cli.global.output {
        Some(path) => std::fs::write(path, data).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => out.write_all(data.as_bytes()).map_err(|e| CliError::Io(format!("standard output: {e}"))),
    });
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jobs_resolution() {
        assert_eq!(resolve_jobs(Some(3), Some(String::from("5"))).unwrap(), 3);
        assert_eq!(resolve_jobs(None, Some(String::from(" 5 "))).unwrap(), 5);
        assert!(resolve_jobs(None, None).unwrap() >= 1);
        assert!(resolve_jobs(Some(0), None).is_err());
        assert!(resolve_jobs(None, Some(String::from("many"))).is_err());
    }

    #[test]
    fn capacity_error_maps_to_two() {
        let e: CliError = posetfree::Error::Capacity {
            what: "x",
            got: 9,
            limit: 5,
        }
        .into();
        assert_eq!(e.exit_code(), 2);
        let d: CliError = posetfree::Error::NotPatternFree.into();
        assert_eq!(d.exit_code(), 1);
    }
}
