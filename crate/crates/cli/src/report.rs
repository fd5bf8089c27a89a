use std::fmt;

use gersten_core::Certificate;

use crate::job::Job;
use crate::CliError;

/// Outcome of a job, with its process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    InputError,
    CapabilityError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::CapabilityError => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input-error",
            Status::CapabilityError => "capability-error",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// Machine-readable description of a failed job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorBlock {
    pub kind: String,
    /// The job argument whose expression failed, when known.
    pub arg: Option<String>,
    pub position: Option<usize>,
    pub message: String,
}

impl ErrorBlock {
    pub fn from_error(e: &CliError) -> Self {
        match e {
            CliError::Job { .. } => ErrorBlock { kind: "job".into(), arg: None, position: None, message: e.to_string() },
            CliError::MissingArg { key, .. } => {
                ErrorBlock { kind: "missing-argument".into(), arg: Some(key.clone()), position: None, message: e.to_string() }
            }
            CliError::BadArg { key, message } => {
                ErrorBlock { kind: "bad-argument".into(), arg: Some(key.clone()), position: None, message: message.clone() }
            }
            CliError::Core { arg, source } => ErrorBlock {
                kind: source.kind().into(),
                arg: arg.clone(),
                position: source.position(),
                message: source.to_string(),
            },
        }
    }

    fn lines(&self) -> Vec<String> {
        let mut out = vec!["error:".to_string(), format!("  kind: {}", self.kind)];
        if let Some(a) = &self.arg {
            out.push(format!("  arg: {a}"));
        }
        if let Some(p) = self.position {
            out.push(format!("  position: {p}"));
        }
        out.push(format!("  message: {}", self.message));
        out
    }
}

/// Everything a job produced. On error the result, certificates and warnings are
/// empty and `error` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// The job as run; absent when the job file itself did not parse.
    pub job: Option<Job>,
    /// `key: value` result lines in canonical rendering.
    pub result: Vec<(String, String)>,
    pub certificates: Vec<Certificate>,
    pub warnings: Vec<String>,
    pub error: Option<ErrorBlock>,
    pub status: Status,
}

impl Report {
    pub fn new(job: Option<Job>) -> Self {
        Report {
            job,
            result: Vec::new(),
            certificates: Vec::new(),
            warnings: Vec::new(),
            error: None,
            status: Status::Pass,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub(crate) fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.result.push((key.into(), value.to_string()));
    }

    pub(crate) fn fail_with(&mut self, e: &CliError) {
        self.result.clear();
        self.certificates.clear();
        self.warnings.clear();
        let capability = matches!(e, CliError::Core { source, .. } if source.is_capability());
        self.status = if capability { Status::CapabilityError } else { Status::InputError };
        self.error = Some(ErrorBlock::from_error(e));
    }

    fn body_lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self.result.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        for c in &self.certificates {
            out.extend(c.lines());
        }
        if let Some(e) = &self.error {
            out.extend(e.lines());
        }
        out
    }
}

/// Render a report. Both formats are UTF-8 with LF endings and depend only on the report.
pub fn emit(r: &Report, format: Format) -> String {
    let mut lines = Vec::new();
    match format {
        Format::Structured => {
            if let Some(job) = &r.job {
                lines.push("job:".to_string());
                lines.extend(job.lines().into_iter().map(|l| format!("  {l}")));
            }
            lines.extend(r.body_lines());
            if !r.warnings.is_empty() {
                lines.push("warnings:".to_string());
                lines.extend(r.warnings.iter().map(|w| format!("  {w}")));
            }
            lines.push(format!("status: {}", r.status));
            lines.push(format!("exit: {}", r.exit_code()));
        }
        Format::Text => {
            lines.extend(r.body_lines());
            lines.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
            lines.push(format!("status: {}", r.status));
        }
    }
    lines.into_iter().map(|l| l + "\n").collect()
}
