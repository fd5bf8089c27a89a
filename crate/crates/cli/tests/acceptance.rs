//! Acceptance suite. Prints one `pass`/`fail` line per criterion and exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gersten_cli::{emit, run_job, Command, Format, Job, Report, Status};
use gersten_core::ksymbols::{arc_specialize, d_eps, tame};
use gersten_core::{parse_expr, Context, DualMilnorSymbol, K1Cycle, K1Value, Ring, Variety};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

const PLANE_FACTORS: [&str; 8] = ["x", "y", "x - 1", "y + 2", "x + y - 1", "x - y", "y - x^2", "x - y^2 + 1"];

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

fn product(c: i64, parts: &[(String, i64)]) -> String {
    let mut src = format!("{c}");
    for (p, e) in parts {
        if *e > 0 {
            src.push_str(&format!("*({p})^{e}"));
        } else {
            src.push_str(&format!("/({p})^{}", -e));
        }
    }
    src
}

/// `c * prod (t - a)^(+-1)` with at most `max` linear factors.
fn line_func(rng: &mut ChaCha8Rng, max: usize) -> String {
    let c = nonzero(rng, 5);
    let n = rng.gen_range(0..=max);
    let parts: Vec<(String, i64)> = (0..n)
        .map(|_| (format!("t - ({})", rng.gen_range(-4i64..=4)), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    product(c, &parts)
}

/// Two plane functions over the factor pool whose zeros and poles share no curve.
fn coprime_plane_pair(rng: &mut ChaCha8Rng) -> (String, String) {
    let mut pool: Vec<usize> = (0..PLANE_FACTORS.len()).collect();
    pool.shuffle(rng);
    let mut f = Vec::new();
    let mut g = Vec::new();
    for i in pool.into_iter().take(rng.gen_range(1..=5)) {
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        let side = if rng.gen_bool(0.5) { &mut f } else { &mut g };
        side.push((PLANE_FACTORS[i].to_string(), e));
    }
    (product(nonzero(rng, 3), &f), product(nonzero(rng, 3), &g))
}

fn small_poly(rng: &mut ChaCha8Rng) -> String {
    let (a, b, c) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    format!("{a}*x + {b}*y + {c}")
}

fn admissible_dual_pair(rng: &mut ChaCha8Rng) -> (String, String) {
    let (f, g) = coprime_plane_pair(rng);
    let (f1, g1) = (small_poly(rng), small_poly(rng));
    (format!("{f} + eps*({f1})"), format!("{g} + eps*({g1})"))
}

/// Every job of the suite, grouped by criterion, regenerated from `SEED`.
struct Suite {
    steinberg: Vec<Job>,
    complex: Vec<Job>,
    weil: Vec<Job>,
    tangent2_steinberg: Vec<Job>,
    tangent2_undeformed: Vec<Job>,
    diagram: Vec<Job>,
}

fn job(command: Command, f: &str, g: &str) -> Job {
    Job::new(command.default_variety(), command).seed(SEED).arg("f", f).arg("g", g)
}

impl Suite {
    fn generate() -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut steinberg = Vec::new();
        while steinberg.len() < 50 {
            let f = line_func(&mut rng, 4);
            if gersten_core::parse_ratfunc(&f, Ring::T).map(|h| h.is_one()).unwrap_or(true) {
                continue;
            }
            steinberg.push(Job::new(Variety::P1, Command::Tame).seed(SEED).arg("f", &f).arg("g", &format!("1 - ({f})")));
        }
        let complex = (0..100)
            .map(|_| {
                let (f, g) = coprime_plane_pair(&mut rng);
                job(Command::ComplexCheck, &f, &g)
            })
            .collect();
        let weil = (0..100)
            .map(|_| {
                let (f, g) = (line_func(&mut rng, 5), line_func(&mut rng, 5));
                job(Command::WeilCheck, &f, &g)
            })
            .collect();
        let mut tangent2_steinberg = Vec::new();
        while tangent2_steinberg.len() < 50 {
            let (f, _) = coprime_plane_pair(&mut rng);
            if gersten_core::parse_ratfunc(&f, Ring::XY).map(|h| h.is_one()).unwrap_or(true) {
                continue;
            }
            let u = format!("{f} + eps*({})", small_poly(&mut rng));
            tangent2_steinberg.push(job(Command::Tangent2, &u, &format!("1 - ({u})")));
        }
        let tangent2_undeformed = (0..50)
            .map(|_| {
                let (f, g) = coprime_plane_pair(&mut rng);
                job(Command::Tangent2, &f, &g)
            })
            .collect();
        let mut diagram: Vec<Job> = (0..100)
            .map(|_| {
                let (u, v) = admissible_dual_pair(&mut rng);
                job(Command::DiagramCheck, &u, &v)
            })
            .collect();
        diagram.push(job(Command::DiagramCheck, "x + eps", "y"));
        diagram.push(job(Command::DiagramCheck, "x + eps", "y + eps"));
        Suite { steinberg, complex, weil, tangent2_steinberg, tangent2_undeformed, diagram }
    }

    fn fixed() -> Vec<Job> {
        vec![
            Job::new(Variety::P1, Command::Tame).seed(SEED).arg("f", "t").arg("g", "t - 2"),
            job(Command::Tangent2, "x + eps", "y"),
            job(Command::Tame, "y", "x"),
            Job::new(Variety::A2, Command::CycleCheck).seed(SEED).arg("component", "x; y").arg("component", "y; 1/x"),
            job(Command::TameCertify, "y", "x").arg("component", "x; y").arg("component", "y; 1/x"),
        ]
    }

    fn all(&self) -> impl Iterator<Item = &Job> {
        self.steinberg
            .iter()
            .chain(&self.complex)
            .chain(&self.weil)
            .chain(&self.tangent2_steinberg)
            .chain(&self.tangent2_undeformed)
            .chain(&self.diagram)
    }
}

fn value<'a>(r: &'a Report, key: &str) -> Option<&'a str> {
    r.result.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn certified(r: &Report) -> bool {
    r.status == Status::Pass && !r.certificates.is_empty() && r.certificates.iter().all(|c| c.passed())
}

struct Outcome {
    failures: Vec<String>,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.limit.is_none_or(|l| self.elapsed < l)
    }
}

fn timed(limit: Option<u64>, body: impl FnOnce(&mut Vec<String>)) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    Outcome { failures, elapsed: start.elapsed(), limit: limit.map(Duration::from_secs) }
}

fn check_jobs(jobs: &[Job], ok: impl Fn(&Report) -> bool, failures: &mut Vec<String>) {
    for j in jobs {
        let r = run_job(j);
        if !ok(&r) {
            failures.push(format!("{} f={} g={}", j.command, j.get("f").unwrap_or(""), j.get("g").unwrap_or("")));
        }
    }
}

fn fixed_result(j: &Job, expected: &[(&str, &str)], failures: &mut Vec<String>) {
    let r = run_job(j);
    let got: Vec<(&str, &str)> = r.result.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    let mut want = expected.to_vec();
    let mut have = got.clone();
    want.sort();
    have.sort();
    if r.status != Status::Pass || want != have {
        failures.push(format!("{} f={} g={}: got {got:?}", j.command, j.get("f").unwrap_or(""), j.get("g").unwrap_or("")));
    }
}

fn naturality(jobs: &[Job], failures: &mut Vec<String>) {
    let ctx = Context::with_seed(SEED);
    for j in jobs {
        let run = || -> gersten_core::Result<bool> {
            let u = parse_expr(j.get("f").unwrap(), Ring::XY)?;
            let v = parse_expr(j.get("g").unwrap(), Ring::XY)?;
            let s = DualMilnorSymbol::single(u, v)?;
            let mut sum = K1Cycle::trivial(Variety::A2);
            for a in d_eps(&s, &ctx)? {
                let (p, r) = arc_specialize(&a)?;
                sum.insert(p, K1Value::Curve(r))?;
            }
            Ok(sum == tame(&s.specialize(), Variety::A2, &ctx)?)
        };
        if !matches!(run(), Ok(true)) {
            failures.push(format!("f={} g={}", j.get("f").unwrap(), j.get("g").unwrap()));
        }
    }
}

fn transcript() -> String {
    let suite = Suite::generate();
    suite.all().chain(&Suite::fixed()).map(|j| emit(&run_job(j), Format::Structured)).collect()
}

fn main() -> ExitCode {
    let suite = Suite::generate();
    let fixed = Suite::fixed();
    let mut outcomes: Vec<(&str, Outcome)> = Vec::new();

    outcomes.push((
        "steinberg: tame({f, 1 - f}) trivial for 50 functions on P1",
        timed(Some(10), |fails| check_jobs(&suite.steinberg, |r| value(r, "cycle") == Some("0"), fails)),
    ));
    outcomes.push((
        "complex: div(tame({f, g})) = 0 for 100 coprime pairs on A2",
        timed(Some(60), |fails| check_jobs(&suite.complex, certified, fails)),
    ));
    outcomes.push((
        "weil: reciprocity for 100 pairs on P1 and {t, t - 2} components",
        timed(Some(30), |fails| {
            check_jobs(&suite.weil, certified, fails);
            fixed_result(&fixed[0], &[("component 0", "-1/2"), ("component 2", "2"), ("component INF", "-1")], fails);
        }),
    ));
    outcomes.push((
        "tangent2: {x + eps, y} gives -dy/(x*y); Steinberg and undeformed symbols give 0",
        timed(None, |fails| {
            let r = run_job(&fixed[1]);
            if value(&r, "form") != Some("-dy/(x*y)") {
                fails.push(format!("{{x + eps, y}}: {:?}", value(&r, "form")));
            }
            check_jobs(&suite.tangent2_steinberg, |r| value(r, "form") == Some("0"), fails);
            check_jobs(&suite.tangent2_undeformed, |r| value(r, "form") == Some("0"), fails);
        }),
    ));
    outcomes.push((
        "diagram: 100 admissible dual symbols and two fixed cases commute",
        timed(Some(120), |fails| check_jobs(&suite.diagram, certified, fails)),
    ));
    outcomes.push((
        "naturality: arcs specialize to the tame symbol at eps = 0",
        timed(None, |fails| naturality(&suite.diagram, fails)),
    ));
    outcomes.push((
        "cycle: {(V(x), y), (V(y), 1/x)} has witness 0 and is tame({y, x})",
        timed(None, |fails| {
            fixed_result(&fixed[2], &[("component V(x)", "y"), ("component V(y)", "1/x")], fails);
            let r = run_job(&fixed[3]);
            if !certified(&r) || r.certificates[0].witness != "0" {
                fails.push("cycle-check".into());
            }
            if !certified(&run_job(&fixed[4])) {
                fails.push("tame-certify".into());
            }
        }),
    ));
    outcomes.push((
        "determinism: structured output of the full suite is byte-identical across runs",
        timed(None, |fails| {
            let (a, b) = (transcript(), transcript());
            if a != b {
                let line = a.lines().zip(b.lines()).position(|(x, y)| x != y).unwrap_or(0);
                fails.push(format!("first difference at line {}", line + 1));
            }
        }),
    ));

    let mut all = true;
    for (i, (name, o)) in outcomes.iter().enumerate() {
        let verdict = if o.passed() { "pass" } else { "fail" };
        all &= o.passed();
        let limit = o.limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!("criterion {}: {verdict}: {name} [{:.2}s{limit}]", i + 1, o.elapsed.as_secs_f64());
        for f in o.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
