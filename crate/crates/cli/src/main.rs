use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gersten_cli::{emit, run_job, run_job_file, Command, Format, Job};
use gersten_core::Variety;

#[derive(Parser)]
#[command(name = "gersten", version, about = "Tame symbols, divisors, arcs and certificates on P1 and A2 over Q")]
struct Cli {
    /// P1 or A2; defaults to P1 for weil-check and A2 otherwise
    #[arg(long, global = true)]
    variety: Option<Variety>,

    /// Seed for the generic shears
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Trusted factorization `poly=f1,f2,...`; repeatable
    #[arg(long = "factor-hint", global = true)]
    factor_hint: Vec<String>,

    /// Job file with `key: value` lines; flags given here override it
    #[arg(long, global = true)]
    job: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Args, Default)]
struct Exprs {
    /// First function or dual unit
    #[arg(long)]
    f: Option<String>,

    /// Second function or dual unit
    #[arg(long)]
    g: Option<String>,

    /// Curve or point, e.g. `x`, `V(y - x^2)`, `INF`
    #[arg(long)]
    curve: Option<String>,

    /// `curve; function`; repeatable
    #[arg(long)]
    component: Vec<String>,

    /// `curve; f1; unit; sign[; local equation]`; repeatable
    #[arg(long)]
    arc: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tame symbol of {f, g}
    Tame(Exprs),
    /// Divisor of f
    Div(Exprs),
    /// Divisor of g restricted to a plane curve
    DivOnCurve(Exprs),
    /// Check that the components have total divisor zero
    CycleCheck(Exprs),
    /// Check that the components are the tame symbol of {f, g}
    TameCertify(Exprs),
    /// Check div(tame({f, g})) = 0 on A2
    ComplexCheck(Exprs),
    /// Check Weil reciprocity for f and g on P1
    WeilCheck(Exprs),
    /// Differential form of the dual symbol {f, g}
    Tangent2(Exprs),
    /// Arcs of the dual symbol {f, g}
    DEps(Exprs),
    /// Local cohomology classes of the arcs
    Tangent3(Exprs),
    /// Check the tangent diagram for the dual symbol {f, g}
    DiagramCheck(Exprs),
    /// Check that the arcs specialize to a trivial K1 cycle
    TangentCocycle(Exprs),
}

impl Cmd {
    fn split(self) -> (Command, Exprs) {
        match self {
            Cmd::Tame(e) => (Command::Tame, e),
            Cmd::Div(e) => (Command::Div, e),
            Cmd::DivOnCurve(e) => (Command::DivOnCurve, e),
            Cmd::CycleCheck(e) => (Command::CycleCheck, e),
            Cmd::TameCertify(e) => (Command::TameCertify, e),
            Cmd::ComplexCheck(e) => (Command::ComplexCheck, e),
            Cmd::WeilCheck(e) => (Command::WeilCheck, e),
            Cmd::Tangent2(e) => (Command::Tangent2, e),
            Cmd::DEps(e) => (Command::DEps, e),
            Cmd::Tangent3(e) => (Command::Tangent3, e),
            Cmd::DiagramCheck(e) => (Command::DiagramCheck, e),
            Cmd::TangentCocycle(e) => (Command::TangentCocycle, e),
        }
    }
}

fn override_arg(job: &mut Job, key: &str, value: Option<String>) {
    if let Some(v) = value {
        job.args.retain(|(k, _)| k != key);
        job.args.push((key.to_string(), v));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let base = match &cli.job {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match Job::parse(&text) {
                Ok(job) => Some(job),
                Err(_) => {
                    let report = run_job_file(&text);
                    print!("{}", emit(&report, cli.format));
                    return ExitCode::from(report.exit_code() as u8);
                }
            },
            Err(e) => {
                eprintln!("gersten: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let (command, exprs) = match cli.command {
        Some(c) => {
            let (command, exprs) = c.split();
            (Some(command), exprs)
        }
        None => (None, Exprs::default()),
    };
    let mut job = match (base, command) {
        (Some(mut job), Some(c)) => {
            if job.command != c {
                job.command = c;
            }
            job
        }
        (Some(job), None) => job,
        (None, Some(c)) => Job::new(c.default_variety(), c),
        (None, None) => {
            eprintln!("gersten: give a subcommand or --job <file>; see --help");
            return ExitCode::from(2);
        }
    };
    if let Some(v) = cli.variety {
        job.variety = v;
    }
    if let Some(s) = cli.seed {
        job.seed = s;
    }
    job.factor_hints.extend(cli.factor_hint);
    override_arg(&mut job, "f", exprs.f);
    override_arg(&mut job, "g", exprs.g);
    override_arg(&mut job, "curve", exprs.curve);
    job.args.extend(exprs.component.into_iter().map(|c| ("component".to_string(), c)));
    job.args.extend(exprs.arc.into_iter().map(|a| ("arc".to_string(), a)));
    let report = run_job(&job);
    print!("{}", emit(&report, cli.format));
    ExitCode::from(report.exit_code() as u8)
}
