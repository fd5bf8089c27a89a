use std::process::{Command as Process, Output};

use gersten_cli::{emit, run_job, run_job_file, Command, ErrorBlock, Format, Job, Status};
use gersten_core::{parse_expr, parse_ratfunc, Ring, Variety};
use proptest::prelude::*;

fn gersten(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_gersten")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_of(job: &Job) -> ErrorBlock {
    let r = run_job(job);
    assert!(matches!(r.status, Status::InputError | Status::CapabilityError), "{}", emit(&r, Format::Text));
    assert!(r.result.is_empty() && r.certificates.is_empty());
    r.error.unwrap()
}

fn tame(f: &str, g: &str) -> Job {
    Job::new(Variety::A2, Command::Tame).arg("f", f).arg("g", g)
}

fn term(var: &'static str) -> impl Strategy<Value = String> {
    (-4i64..=4, 0u32..=3, prop::option::of(-3i64..=3)).prop_map(move |(c, e, shift)| match shift {
        Some(s) => format!("{c}*({var} + {s})^{e}"),
        None => format!("{c}*{var}^{e}"),
    })
}

fn poly(ring: Ring) -> BoxedStrategy<String> {
    let terms = match ring {
        Ring::T => prop::collection::vec(term("t"), 1..=3).boxed(),
        Ring::XY => prop::collection::vec(prop_oneof![term("x"), term("y")], 1..=4).boxed(),
    };
    terms.prop_map(|ts| ts.join(" + ")).boxed()
}

fn ratfunc_src(ring: Ring) -> impl Strategy<Value = String> {
    (poly(ring), poly(ring)).prop_map(|(n, d)| format!("({n})/(({d}) + 7)"))
}

fn dual_src() -> impl Strategy<Value = String> {
    (ratfunc_src(Ring::XY), ratfunc_src(Ring::XY)).prop_map(|(f, f1)| format!("{f} + eps*({f1})"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn ratfunc_print_parse_round_trip(src in prop_oneof![ratfunc_src(Ring::T), ratfunc_src(Ring::XY)]) {
        let ring = if src.contains('t') { Ring::T } else { Ring::XY };
        if let Ok(f) = parse_ratfunc(&src, ring) {
            prop_assert_eq!(parse_ratfunc(&f.to_string(), ring).unwrap(), f);
        }
    }

    #[test]
    fn dual_print_parse_round_trip(src in dual_src()) {
        if let Ok(u) = parse_expr(&src, Ring::XY) {
            prop_assert_eq!(parse_expr(&u.to_string(), Ring::XY).unwrap(), u);
        }
    }

    #[test]
    fn job_render_parse_round_trip(
        command in prop::sample::select(Command::ALL.to_vec()),
        seed in any::<u64>(),
        args in prop::collection::vec((prop::sample::select(vec!["f", "g", "curve", "component", "arc"]), ratfunc_src(Ring::XY)), 0..5),
    ) {
        let mut job = Job::new(command.default_variety(), command).seed(seed);
        for (k, v) in &args {
            job = job.arg(k, v);
        }
        prop_assert_eq!(Job::parse(&job.render()).unwrap(), job);
    }
}

#[test]
fn tame_of_coordinates() {
    let o = gersten(&["tame", "--f", "x", "--g", "y"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.contains("component V(x): 1/y\n"), "{out}");
    assert!(out.contains("component V(y): x\n"), "{out}");
    assert!(out.ends_with("status: pass\n"));
}

#[test]
fn weil_check_on_the_line() {
    let o = gersten(&["weil-check", "--f", "t", "--g", "t - 2"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.contains("verdict: pass\n"), "{out}");
    assert!(out.contains("component 0: -1/2; norm -1/2\n"), "{out}");
    assert!(out.contains("component INF: -1; norm -1\n"), "{out}");
}

#[test]
fn diagram_check_of_a_deformed_coordinate() {
    let o = gersten(&["diagram-check", "--f", "x + eps", "--g", "y"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.contains("V(x): left [-dy/(x*y)]; right [-dy/(x*y)]\n"), "{out}");
    assert!(out.contains("V(y): left [-dy/(x*y)]; right [-dy/(x*y)]\n"), "{out}");
}

#[test]
fn trivial_results_print_zero() {
    let out = stdout(&gersten(&["tame", "--variety", "P1", "--f", "t", "--g", "1 - t"]));
    assert!(out.starts_with("cycle: 0\n"), "{out}");
    let out = stdout(&gersten(&["d-eps", "--f", "x", "--g", "x"]));
    assert!(out.starts_with("cycle: 0\n"), "{out}");
}

#[test]
fn failed_check_exits_one() {
    let o = gersten(&["cycle-check", "--component", "x; 1/y"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1));
    assert!(out.contains("verdict: fail\n"), "{out}");
    assert!(out.contains("witness: -[(0,0)]\n"), "{out}");
}

#[test]
fn syntax_error_exits_two() {
    let o = gersten(&["tame", "--f", "x +", "--g", "y"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(2));
    assert!(out.contains("  kind: syntax\n  arg: f\n  position: 3\n"), "{out}");
}

#[test]
fn capability_error_exits_three() {
    let o = gersten(&["div", "--f", "x^9 + y^9 + x*y + 1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("  kind: factor-incomplete\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gersten(&[]).status.code(), Some(2));
    assert_eq!(gersten(&["tame", "--bogus"]).status.code(), Some(2));
    assert_eq!(gersten(&["--job", "/nonexistent/job"]).status.code(), Some(2));
}

#[test]
fn structured_output_is_byte_identical() {
    let args = ["--format", "structured", "--seed", "7", "diagram-check", "--f", "x^2 - y + eps*x", "--g", "x + y - 1"];
    let (a, b) = (gersten(&args), gersten(&args));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("job:\n  variety: A2\n  command: diagram-check\n  seed: 7\n"), "{out}");
    assert!(out.ends_with("status: pass\nexit: 0\n"), "{out}");
}

#[test]
fn job_files_and_flags_combine() {
    let dir = std::env::temp_dir().join(format!("gersten-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tame.job");
    std::fs::write(&path, "# coordinates\ncommand: tame\nf: x\ng: y\n").unwrap();
    let path = path.to_str().unwrap();
    let out = stdout(&gersten(&["--job", path]));
    assert!(out.contains("component V(x): 1/y\n"), "{out}");
    let out = stdout(&gersten(&["--job", path, "tame", "--g", "1 - x"]));
    assert!(out.starts_with("cycle: 0\n"), "{out}");
    std::fs::write(dir.join("bad.job"), "command: tame\nh: x\n").unwrap();
    let o = gersten(&["--job", dir.join("bad.job").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("message: job line 2: unknown key 'h'\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_error_path_yields_an_error_block() {
    let cases: Vec<(Job, &str, Option<&str>)> = vec![
        (tame("x", "y +* 1"), "syntax", Some("g")),
        (tame("eps^2", "x"), "eps-degree", Some("f")),
        (tame("1/(x - x)", "y"), "division-by-zero", Some("f")),
        (tame("0", "x"), "not-a-unit", None),
        (tame("x", "t"), "syntax", Some("g")),
        (Job::new(Variety::A2, Command::Tame).arg("f", "x"), "missing-argument", Some("g")),
        (Job::new(Variety::A2, Command::WeilCheck).arg("f", "x").arg("g", "y"), "unsupported", None),
        (Job::new(Variety::P1, Command::DiagramCheck).arg("f", "t").arg("g", "t"), "unsupported", None),
        (Job::new(Variety::A2, Command::DivOnCurve).arg("curve", "x*y").arg("g", "x"), "not-irreducible", Some("curve")),
        (Job::new(Variety::A2, Command::DivOnCurve).arg("curve", "x").arg("g", "1/x"), "not-a-unit-along-curve", Some("g")),
        (Job::new(Variety::A2, Command::CycleCheck).arg("component", "x y"), "bad-argument", Some("component")),
        (Job::new(Variety::A2, Command::TangentCocycle).arg("arc", "x; 1; y; 2"), "bad-argument", Some("arc")),
        (Job::new(Variety::A2, Command::Tangent3), "missing-argument", Some("arc")),
        (Job::new(Variety::A2, Command::CycleCheck).arg("component", "INF; x"), "bad-argument", Some("component")),
        (Job::new(Variety::A2, Command::Tame).arg("f", "x").arg("g", "y").factor_hint("x"), "bad-argument", Some("factor-hint")),
        (Job::new(Variety::A2, Command::Div).arg("f", "x^9 + y^9 + x*y + 1"), "factor-incomplete", None),
    ];
    for (job, kind, arg) in cases {
        let e = error_of(&job);
        assert_eq!(e.kind, kind, "{}", job.render());
        assert_eq!(e.arg.as_deref(), arg, "{}", job.render());
        assert!(!e.message.is_empty());
    }
    let r = run_job_file("f: x\n");
    assert_eq!(r.status, Status::InputError);
    assert_eq!(r.error.unwrap().kind, "job");
}

#[test]
fn capability_errors_are_distinguished() {
    let r = run_job(&Job::new(Variety::A2, Command::Div).arg("f", "x^9 + y^9 + x*y + 1"));
    assert_eq!((r.status, r.exit_code()), (Status::CapabilityError, 3));
    let hinted = Job::new(Variety::A2, Command::Div)
        .arg("f", "(x^9 + y^9 + x*y + 1)*x")
        .factor_hint("x^9 + y^9 + x*y + 1=x^9 + y^9 + x*y + 1");
    let r = run_job(&hinted);
    assert_eq!(r.status, Status::Pass, "{}", emit(&r, Format::Text));
    assert!(r.warnings.iter().any(|w| w.contains("trusted")));
}
