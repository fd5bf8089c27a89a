use std::fmt;
use std::str::FromStr;

use gersten_core::Variety;

use crate::CliError;

/// The operation a job runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Tame,
    Div,
    DivOnCurve,
    CycleCheck,
    TameCertify,
    ComplexCheck,
    WeilCheck,
    Tangent2,
    DEps,
    Tangent3,
    DiagramCheck,
    TangentCocycle,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Tame,
        Command::Div,
        Command::DivOnCurve,
        Command::CycleCheck,
        Command::TameCertify,
        Command::ComplexCheck,
        Command::WeilCheck,
        Command::Tangent2,
        Command::DEps,
        Command::Tangent3,
        Command::DiagramCheck,
        Command::TangentCocycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Tame => "tame",
            Command::Div => "div",
            Command::DivOnCurve => "div-on-curve",
            Command::CycleCheck => "cycle-check",
            Command::TameCertify => "tame-certify",
            Command::ComplexCheck => "complex-check",
            Command::WeilCheck => "weil-check",
            Command::Tangent2 => "tangent2",
            Command::DEps => "d-eps",
            Command::Tangent3 => "tangent3",
            Command::DiagramCheck => "diagram-check",
            Command::TangentCocycle => "tangent-cocycle",
        }
    }

    /// Variety used when a job does not name one.
    pub fn default_variety(self) -> Variety {
        match self {
            Command::WeilCheck => Variety::P1,
            _ => Variety::A2,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Job { line: 0, message: format!("unknown command '{s}'") })
    }
}

/// Argument keys accepted in job files and on the command line.
pub const ARG_KEYS: [&str; 5] = ["f", "g", "curve", "component", "arc"];

/// One unit of work: the variety, the command, its expression arguments, the seed and
/// any trusted factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub variety: Variety,
    pub command: Command,
    pub seed: u64,
    /// `(key, expression)` in input order; `component` and `arc` may repeat.
    pub args: Vec<(String, String)>,
    /// `poly=f1,f2,...`
    pub factor_hints: Vec<String>,
}

impl Job {
    pub fn new(variety: Variety, command: Command) -> Self {
        Job { variety, command, seed: 0, args: Vec::new(), factor_hints: Vec::new() }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn arg(mut self, key: &str, value: &str) -> Self {
        self.args.push((key.to_string(), value.to_string()));
        self
    }

    pub fn factor_hint(mut self, hint: &str) -> Self {
        self.factor_hints.push(hint.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.args.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.args.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Parse a job file: `key: value` lines, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Result<Job, CliError> {
        let mut variety = None;
        let mut command = None;
        let mut seed = 0;
        let mut args = Vec::new();
        let mut factor_hints = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| CliError::Job { line: i + 1, message };
            let (key, value) = line.split_once(':').ok_or_else(|| bad(format!("expected 'key: value', got '{line}'")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "variety" => variety = Some(value.parse::<Variety>().map_err(|e| bad(e.to_string()))?),
                "command" => {
                    command = Some(value.parse::<Command>().map_err(|_| bad(format!("unknown command '{value}'")))?)
                }
                "seed" => seed = value.parse().map_err(|_| bad(format!("seed must be an unsigned integer, got '{value}'")))?,
                "factor-hint" => factor_hints.push(value.to_string()),
                k if ARG_KEYS.contains(&k) => args.push((k.to_string(), value.to_string())),
                other => return Err(bad(format!("unknown key '{other}'"))),
            }
        }
        let command = command.ok_or(CliError::Job { line: 0, message: "missing 'command'".into() })?;
        Ok(Job { variety: variety.unwrap_or(command.default_variety()), command, seed, args, factor_hints })
    }

    /// The job-file form; `Job::parse` reads it back unchanged.
    pub fn render(&self) -> String {
        self.lines().into_iter().map(|l| l + "\n").collect()
    }

    pub(crate) fn lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("variety: {}", self.variety),
            format!("command: {}", self.command),
            format!("seed: {}", self.seed),
        ];
        out.extend(self.factor_hints.iter().map(|h| format!("factor-hint: {h}")));
        out.extend(self.args.iter().map(|(k, v)| format!("{k}: {v}")));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("frobnicate".parse::<Command>().is_err());
    }

    #[test]
    fn job_file_round_trip() {
        let text = "# tame symbol of the coordinates\nvariety: A2\ncommand: tame\n\nf: x\ng: y\n";
        let job = Job::parse(text).unwrap();
        assert_eq!(job, Job::new(Variety::A2, Command::Tame).arg("f", "x").arg("g", "y"));
        assert_eq!(Job::parse(&job.render()).unwrap(), job);
    }

    #[test]
    fn job_file_errors_name_the_line() {
        let err = Job::parse("command: tame\nh: x\n").unwrap_err();
        assert_eq!(err, CliError::Job { line: 2, message: "unknown key 'h'".into() });
        assert!(matches!(Job::parse("f: x\n"), Err(CliError::Job { line: 0, .. })));
        assert!(matches!(Job::parse("command: tame\nseed: -1\n"), Err(CliError::Job { line: 2, .. })));
    }

    #[test]
    fn variety_defaults_by_command() {
        assert_eq!(Job::parse("command: weil-check\n").unwrap().variety, Variety::P1);
        assert_eq!(Job::parse("command: tame\n").unwrap().variety, Variety::A2);
    }
}
