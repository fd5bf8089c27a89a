//! Differentials of the function field, local cohomology classes along primes,
//! the tangent maps on dual symbols and arcs, and the diagram checker.

mod form;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use form::{dlog_dform, DiffForm};

use crate::arith::factor::factor;
use crate::arith::poly::{Ring, Var};
use crate::arith::ratfunc::RatFunc;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::geometry::{valuation, PrimeDivisor, Variety};
use crate::gersten::{Certificate, Claim, Verdict};
use crate::ksymbols::{arc_specialize, d_eps, tame, DualMilnorSymbol, GGArc, K1Cycle, K1Value};

/// Uniformizer at a prime: the defining polynomial, or `1/t` at infinity.
fn uniformizer(p: &PrimeDivisor) -> RatFunc {
    match p.poly() {
        Some(q) => RatFunc::from_poly(q.clone()),
        None => RatFunc::var(Var::T).inv().expect("nonzero"),
    }
}

/// Pole order of a form along a prime: the worst coefficient pole, with `dt`
/// itself having a double pole at infinity.
fn pole_order(beta: &DiffForm, p: &PrimeDivisor) -> u32 {
    let shift = if p.is_inf() { 2 } else { 0 };
    beta.coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| shift - valuation(c, p))
        .max()
        .unwrap_or(0)
        .max(0) as u32
}

/// The class of `form / pi^order` in local cohomology along `curve`, modulo forms
/// regular there. Order zero is the zero class.
#[derive(Clone, Debug)]
pub struct LocalCohClass {
    curve: PrimeDivisor,
    order: u32,
    form: DiffForm,
}

impl LocalCohClass {
    /// The class of `beta` along `curve`.
    pub fn along(curve: &PrimeDivisor, beta: &DiffForm) -> Self {
        let order = pole_order(beta, curve);
        let pi = uniformizer(curve).pow(order as i64).expect("nonzero");
        LocalCohClass { curve: curve.clone(), order, form: beta.scale(&pi) }
    }

    pub fn curve(&self) -> &PrimeDivisor {
        &self.curve
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn form(&self) -> &DiffForm {
        &self.form
    }

    /// A form representing the class.
    pub fn representative(&self) -> DiffForm {
        let pi = uniformizer(&self.curve).pow(-(self.order as i64)).expect("nonzero");
        self.form.scale(&pi)
    }

    pub fn is_zero(&self) -> bool {
        self.order == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.curve != other.curve {
            return Err(Error::InvalidArgument("classes along different primes".into()));
        }
        Ok(Self::along(&self.curve, &(&self.representative() + &other.representative())))
    }
}

impl PartialEq for LocalCohClass {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve
            && Self::along(&self.curve, &(&self.representative() - &other.representative())).is_zero()
    }
}

impl fmt::Display for LocalCohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "[{}]", self.representative())
        }
    }
}

pub fn lc_is_zero(c: &LocalCohClass) -> bool {
    c.is_zero()
}

/// `(g1*df - f1*dg)/(f*g)` summed over the symbol.
pub fn tangent2(s: &DualMilnorSymbol, x: Variety) -> Result<DiffForm> {
    let mut out = DiffForm::zero(x.ring());
    for (n, u, v) in s.iter() {
        if u.ring() != x.ring() || v.ring() != x.ring() {
            return Err(Error::RingMismatch);
        }
        let (f, f1, g, g1) = (u.body(), u.eps_part(), v.body(), v.eps_part());
        let num = &DiffForm::d(f).scale(g1) - &DiffForm::d(g).scale(f1);
        let term = num.scale(&(f * g).inv().expect("nonzero bodies"));
        out = &out + &term.scale(&RatFunc::from_int(x.ring(), n));
    }
    Ok(out)
}

/// The polar classes of a form at every prime where it has a pole, in prime order.
pub fn boundary_forms(beta: &DiffForm, x: Variety, ctx: &Context) -> Result<Vec<(PrimeDivisor, LocalCohClass)>> {
    if beta.ring() != x.ring() {
        return Err(Error::RingMismatch);
    }
    let mut primes = BTreeSet::new();
    for c in beta.coeffs() {
        if c.den().is_constant() {
            continue;
        }
        for fac in factor(c.den(), ctx)?.factors {
            primes.insert(PrimeDivisor::from_factor(&fac.poly, fac.cert));
        }
    }
    if x == Variety::P1 {
        primes.insert(PrimeDivisor::Inf);
    }
    Ok(primes
        .into_iter()
        .map(|p| {
            let c = LocalCohClass::along(&p, beta);
            (p, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// The form `sign * ((g1*df - f1*dg)/g)/f` of an arc, with `f` its local equation.
pub fn tangent3_form(a: &GGArc) -> DiffForm {
    let f = a.local_eq();
    let g = a.g();
    let num = &DiffForm::d(f).scale(a.g1()) - &DiffForm::d(g).scale(a.f1());
    let sign = RatFunc::from_int(Ring::XY, a.sign() as i64);
    num.scale(&(&(f * g).inv().expect("nonzero") * &sign))
}

/// The local cohomology class of an arc along its curve.
pub fn tangent3(a: &GGArc) -> (PrimeDivisor, LocalCohClass) {
    (a.curve().clone(), LocalCohClass::along(a.curve(), &tangent3_form(a)))
}

fn specialization_sum(arcs: &[GGArc]) -> Result<K1Cycle> {
    let mut out = K1Cycle::trivial(Variety::A2);
    for a in arcs {
        let (p, v) = arc_specialize(a)?;
        out.insert(p, K1Value::Curve(v))?;
    }
    Ok(out)
}

/// Compare `boundary_forms(tangent2(s))` with the sum of `tangent3` over `d_eps(s)`
/// prime by prime, and check the `eps = 0` face against the tame symbol.
pub fn diagram_check(s: &DualMilnorSymbol, ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::DiagramCommutes, ctx.seed).input("symbol", s);
    let beta = tangent2(s, Variety::A2)?;
    let left: BTreeMap<PrimeDivisor, LocalCohClass> = boundary_forms(&beta, Variety::A2, ctx)?.into_iter().collect();
    let arcs = d_eps(s, ctx)?;
    let mut right_forms: BTreeMap<PrimeDivisor, DiffForm> = BTreeMap::new();
    for a in &arcs {
        let entry = right_forms.entry(a.curve().clone()).or_insert_with(|| DiffForm::zero(Ring::XY));
        *entry = &*entry + &tangent3_form(a);
        cert.provenance.record(a.curve());
    }
    for (n, u, v) in s.iter() {
        if (arcs.is_empty() || d_eps(&DualMilnorSymbol::single(u.clone(), v.clone())?, ctx)?.is_empty())
            && !(u.body().is_constant() && v.body().is_constant())
        {
            cert.notes.push(format!("term {n}*{{{u}, {v}}}: bodies share a component, boundary taken to be 0"));
        }
    }
    let primes: BTreeSet<PrimeDivisor> = left.keys().chain(right_forms.keys()).cloned().collect();
    let mut agree = true;
    let mut residual = Vec::new();
    for p in &primes {
        cert.provenance.record(p);
        let r = right_forms
            .get(p)
            .map(|f| LocalCohClass::along(p, f))
            .unwrap_or_else(|| LocalCohClass::along(p, &DiffForm::zero(Ring::XY)));
        let l = LocalCohClass::along(p, &beta);
        let diff = LocalCohClass::along(p, &(&beta - &r.representative()));
        cert.detail.push(format!("{p}: left {l}; right {r}"));
        if !diff.is_zero() {
            agree = false;
            residual.push(format!("{p}: {diff}"));
        }
    }
    let face = specialization_sum(&arcs)?;
    let expected = tame(&s.specialize(), Variety::A2, ctx)?;
    let face_ok = face == expected;
    cert.detail.push(format!("eps=0 face: arcs {face}; tame {expected}"));
    if !face_ok {
        residual.push(format!("eps=0 face: {}", face.mul(&expected.inv())?));
    }
    cert.verdict = Verdict::from_bool(agree && face_ok);
    cert.witness = if residual.is_empty() { "0".into() } else { residual.join("; ") };
    Ok(cert)
}

/// Pass iff the arcs specialize to the trivial K1 cycle at `eps = 0`. The tangent
/// classes of the arcs are listed as the tangent datum.
pub fn tangent_cocycle(arcs: &[GGArc], ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::TangentCocycle, ctx.seed);
    for a in arcs {
        cert = cert.input("arc", a);
        cert.provenance.record(a.curve());
    }
    let face = specialization_sum(arcs)?;
    let mut datum: BTreeMap<PrimeDivisor, DiffForm> = BTreeMap::new();
    for a in arcs {
        let entry = datum.entry(a.curve().clone()).or_insert_with(|| DiffForm::zero(Ring::XY));
        *entry = &*entry + &tangent3_form(a);
    }
    for (p, f) in &datum {
        cert.detail.push(format!("tangent class {p}: {}", LocalCohClass::along(p, f)));
    }
    if !arcs.is_empty() {
        cert.notes.push("arcs supplied directly; their tangent classes are not compared against a symbol".into());
    }
    cert.verdict = Verdict::from_bool(face.is_trivial());
    cert.witness = face.to_string();
    Ok(cert)
}
