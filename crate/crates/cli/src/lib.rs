//! Command-line front end for `tzstream`.
//!
//! [`dispatch`] parses an argument list, runs one command and returns the
//! exit status with everything that would be printed. Exit status is 0 on
//! success, 1 on a domain error or a failed check, 2 on a usage error.

mod args;
mod commands;

use std::ffi::OsString;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
pub use args::MAX_SIZE;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Domain(String),
}

impl From<tzstream::Error> for CliError {
    fn from(e: tzstream::Error) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

const USAGE_HINT: &str = "see 'tzstream --help' for the expression grammar and catalog names";

/// Runs the command line `argv`, which excludes the program name.
pub fn dispatch<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let full: Vec<OsString> = std::iter::once(OsString::from("tzstream"))
        .chain(argv.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    status: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let json = cli.json;
    let result = catch_unwind(AssertUnwindSafe(|| commands::execute(cli.command)))
        .unwrap_or_else(|_| Err(CliError::Domain("internal error".into())));
    match result {
        Ok(out) => Outcome {
            status: if out.ok { EXIT_OK } else { EXIT_DOMAIN },
            stdout: if json {
                format!("{}\n", out.json)
            } else {
                out.text
            },
            stderr: String::new(),
        },
        Err(CliError::Usage(msg)) => Outcome {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n{USAGE_HINT}\n"),
        },
        Err(CliError::Domain(msg)) => Outcome {
            status: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
