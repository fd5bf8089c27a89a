//! Job runner and report emitter for `gersten-core`: a job names a variety, a command
//! and its expression arguments; running it yields a report with results, certificates
//! and an exit status.

mod job;
mod report;
mod run;

use thiserror::Error;

pub use job::{Command, Job, ARG_KEYS};
pub use report::{emit, ErrorBlock, Format, Report, Status};
pub use run::run_job;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{}", job_message(*line, message))]
    Job { line: usize, message: String },

    #[error("{command} needs '{key}'")]
    MissingArg { command: String, key: String },

    #[error("{key}: {message}")]
    BadArg { key: String, message: String },

    #[error("{}{source}", arg.as_ref().map(|a| format!("{a}: ")).unwrap_or_default())]
    Core { arg: Option<String>, source: gersten_core::Error },
}

fn job_message(line: usize, message: &str) -> String {
    if line == 0 {
        format!("job: {message}")
    } else {
        format!("job line {line}: {message}")
    }
}

impl From<gersten_core::Error> for CliError {
    fn from(source: gersten_core::Error) -> Self {
        CliError::Core { arg: None, source }
    }
}

/// Parse a job file and run it; job-file errors become an input-error report.
pub fn run_job_file(text: &str) -> Report {
    match Job::parse(text) {
        Ok(job) => run_job(&job),
        Err(e) => {
            let mut r = Report::new(None);
            r.fail_with(&e);
            r
        }
    }
}
