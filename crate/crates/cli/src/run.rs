use std::collections::BTreeSet;

use gersten_core::arith::factor::FactorCert;
use gersten_core::gersten::{complex_check_q2, cycle_check, tame_boundary_certify, weil_check_p1};
use gersten_core::ksymbols::{d_eps, tame};
use gersten_core::tangent::{boundary_forms, diagram_check, tangent2, tangent3, tangent_cocycle};
use gersten_core::{
    geometry, parse_expr, parse_ratfunc, Context, DualMilnorSymbol, DualRatFunc, Error, GGArc, HigherCycleRep,
    MilnorSymbol, PrimeDivisor, RatFunc, Ring, Variety,
};

use crate::job::{Command, Job};
use crate::report::{Report, Status};
use crate::CliError;

/// Run a job. Never panics on bad input: every failure becomes an error block.
pub fn run_job(job: &Job) -> Report {
    let mut report = Report::new(Some(job.clone()));
    match Inputs::new(job).and_then(|inputs| inputs.execute(&mut report)) {
        Ok(()) => {
            if report.certificates.iter().any(|c| !c.passed()) {
                report.status = Status::Fail;
            }
        }
        Err(e) => report.fail_with(&e),
    }
    report
}

struct Inputs<'a> {
    job: &'a Job,
    ring: Ring,
    ctx: Context,
}

fn at(key: &str) -> impl Fn(Error) -> CliError + '_ {
    move |source| CliError::Core { arg: Some(key.to_string()), source }
}

impl<'a> Inputs<'a> {
    fn new(job: &'a Job) -> Result<Self, CliError> {
        let ring = job.variety.ring();
        let mut ctx = Context::with_seed(job.seed);
        for hint in &job.factor_hints {
            let bad = |message: String| CliError::BadArg { key: "factor-hint".into(), message };
            let (poly, factors) =
                hint.split_once('=').ok_or_else(|| bad(format!("expected 'poly=f1,f2,...', got '{hint}'")))?;
            let poly = polynomial(poly, ring).map_err(at("factor-hint"))?;
            let factors = factors
                .split(',')
                .map(|f| polynomial(f, ring))
                .collect::<Result<Vec<_>, _>>()
                .map_err(at("factor-hint"))?;
            ctx.hints.insert(&poly, factors).map_err(at("factor-hint"))?;
        }
        Ok(Inputs { job, ring, ctx })
    }

    fn required(&self, key: &str) -> Result<&'a str, CliError> {
        self.job
            .get(key)
            .ok_or_else(|| CliError::MissingArg { command: self.job.command.to_string(), key: key.to_string() })
    }

    fn ratfunc(&self, key: &str) -> Result<RatFunc, CliError> {
        parse_ratfunc(self.required(key)?, self.ring).map_err(at(key))
    }

    fn dual(&self, key: &str) -> Result<DualRatFunc, CliError> {
        parse_expr(self.required(key)?, self.ring).map_err(at(key))
    }

    fn symbol(&self) -> Result<MilnorSymbol, CliError> {
        MilnorSymbol::single(self.ratfunc("f")?, self.ratfunc("g")?).map_err(CliError::from)
    }

    fn dual_symbol(&self) -> Result<DualMilnorSymbol, CliError> {
        DualMilnorSymbol::single(self.dual("f")?, self.dual("g")?).map_err(CliError::from)
    }

    /// `x`, `V(x^2 + y^2 - 1)`, `INF`, or on the line a bare value `a` for `t - a`.
    fn curve(&self, key: &str, src: &str) -> Result<PrimeDivisor, CliError> {
        let src = src.trim();
        if src == "INF" {
            return match self.job.variety {
                Variety::P1 => Ok(PrimeDivisor::Inf),
                Variety::A2 => Err(CliError::BadArg { key: key.into(), message: "INF is a point of P1".into() }),
            };
        }
        let inner = src.strip_prefix("V(").and_then(|s| s.strip_suffix(')')).unwrap_or(src);
        let mut p = polynomial(inner, self.ring).map_err(at(key))?;
        if self.ring == Ring::T && p.is_constant() {
            p = &gersten_core::MultiPoly::var(gersten_core::Var::T) - &p;
        }
        PrimeDivisor::new(&p, &self.ctx).map_err(at(key))
    }

    /// Repeated `component: curve; function`.
    fn components(&self) -> Result<HigherCycleRep, CliError> {
        let mut c = HigherCycleRep::new();
        for src in self.job.get_all("component") {
            let (curve, f) = src.split_once(';').ok_or_else(|| CliError::BadArg {
                key: "component".into(),
                message: format!("expected 'curve; function', got '{src}'"),
            })?;
            let curve = self.curve("component", curve)?;
            let f = parse_ratfunc(f.trim(), self.ring).map_err(at("component"))?;
            c.push(curve, &f).map_err(at("component"))?;
        }
        Ok(c)
    }

    /// Repeated `arc: curve; f1; unit; sign[; local equation]`.
    fn arcs(&self) -> Result<Vec<GGArc>, CliError> {
        let mut out = Vec::new();
        for src in self.job.get_all("arc") {
            let parts: Vec<&str> = src.split(';').map(str::trim).collect();
            let bad = |message: String| CliError::BadArg { key: "arc".into(), message };
            if !(4..=5).contains(&parts.len()) {
                return Err(bad(format!("expected 'curve; f1; unit; sign[; local equation]', got '{src}'")));
            }
            let curve = self.curve("arc", parts[0])?;
            let f1 = parse_ratfunc(parts[1], self.ring).map_err(at("arc"))?;
            let unit = parse_expr(parts[2], self.ring).map_err(at("arc"))?;
            let sign: i8 = match parts[3] {
                "1" | "+1" | "+" => 1,
                "-1" | "-" => -1,
                other => return Err(bad(format!("sign must be +1 or -1, got '{other}'"))),
            };
            let arc = match parts.get(4) {
                Some(local) => {
                    let local = parse_ratfunc(local, self.ring).map_err(at("arc"))?;
                    GGArc::new(curve, local, f1, unit, sign)
                }
                None => GGArc::on_curve(curve, f1, unit, sign),
            };
            out.push(arc.map_err(at("arc"))?);
        }
        Ok(out)
    }

    fn execute(&self, r: &mut Report) -> Result<(), CliError> {
        let (x, ctx) = (self.job.variety, &self.ctx);
        match self.job.command {
            Command::Tame => {
                let t = tame(&self.symbol()?, x, ctx)?;
                if t.is_trivial() {
                    r.push("cycle", "0");
                }
                for (p, v) in t.iter() {
                    r.push(format!("component {p}"), v);
                }
            }
            Command::Div => {
                let d = geometry::div_codim1(&self.ratfunc("f")?, x, ctx)?;
                r.push("cycle", &d);
                r.push("degree", d.degree());
                if x == Variety::A2 && d.degree() != 0 {
                    r.warnings.push(format!("affine degree {} of a principal divisor on A2 carries no invariant meaning", d.degree()));
                }
            }
            Command::DivOnCurve => {
                self.require_plane()?;
                let curve = self.curve("curve", self.required("curve")?)?;
                let g = geometry::restrict(&self.ratfunc("g")?, &curve).map_err(at("g"))?;
                r.push("curve", &curve);
                r.push("cycle", geometry::div_on_curve(&g, ctx)?);
            }
            Command::CycleCheck => {
                self.require_plane()?;
                r.certificates.push(cycle_check(&self.components()?, ctx)?);
            }
            Command::TameCertify => {
                self.require_plane()?;
                r.certificates.push(tame_boundary_certify(&self.components()?, &self.symbol()?, ctx)?);
            }
            Command::ComplexCheck => {
                self.require_plane()?;
                r.certificates.push(complex_check_q2(&self.ratfunc("f")?, &self.ratfunc("g")?, ctx)?);
            }
            Command::WeilCheck => {
                if x != Variety::P1 {
                    return Err(Error::Unsupported("weil-check runs on P1".into()).into());
                }
                r.certificates.push(weil_check_p1(&self.ratfunc("f")?, &self.ratfunc("g")?, ctx)?);
            }
            Command::Tangent2 => {
                let beta = tangent2(&self.dual_symbol()?, x)?;
                r.push("form", &beta);
                for (p, c) in boundary_forms(&beta, x, ctx)? {
                    r.push(format!("boundary {p}"), c);
                }
            }
            Command::DEps => {
                let arcs = d_eps(&self.dual_symbol()?, ctx)?;
                if arcs.is_empty() {
                    r.push("cycle", "0");
                }
                for a in arcs {
                    r.push("arc", a);
                }
            }
            Command::Tangent3 => {
                self.require_plane()?;
                let arcs = self.arcs()?;
                if arcs.is_empty() {
                    return Err(CliError::MissingArg { command: self.job.command.to_string(), key: "arc".into() });
                }
                for a in &arcs {
                    let (p, c) = tangent3(a);
                    r.push(format!("class {p}"), c);
                }
            }
            Command::DiagramCheck => {
                self.require_plane()?;
                r.certificates.push(diagram_check(&self.dual_symbol()?, ctx)?);
            }
            Command::TangentCocycle => {
                self.require_plane()?;
                r.certificates.push(tangent_cocycle(&self.arcs()?, ctx)?);
            }
        }
        let mut flagged = BTreeSet::new();
        for c in &r.certificates {
            for (p, cert) in &c.provenance.factors {
                if *cert != FactorCert::Proved {
                    flagged.insert(format!("factor {p}: irreducibility {cert}"));
                }
            }
        }
        r.warnings.extend(flagged);
        if !self.job.factor_hints.is_empty() {
            r.warnings.push("factor hints are trusted without proof".into());
        }
        Ok(())
    }

    fn require_plane(&self) -> Result<(), CliError> {
        match self.job.variety {
            Variety::A2 => Ok(()),
            Variety::P1 => Err(Error::Unsupported(format!("{} runs on A2", self.job.command)).into()),
        }
    }
}

fn polynomial(src: &str, ring: Ring) -> Result<gersten_core::MultiPoly, Error> {
    let f = parse_ratfunc(src.trim(), ring)?;
    if !f.is_polynomial() {
        return Err(Error::InvalidArgument(format!("{f} is not a polynomial")));
    }
    Ok(f.num().clone())
}
