//! Gersten rows in degrees one and two on the line and the plane: cycle
//! membership, boundary certificates and the complex and reciprocity checks.

mod certificate;

use num_traits::One;

pub use certificate::{Certificate, Claim, Provenance, Verdict};

use crate::arith::ratfunc::RatFunc;
use crate::arith::{render_rational, Rational};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::geometry::{div_codim1, div_on_curve, restrict, ClosedPointCycle, PrimeDivisor, ResidueFunc, Variety};
use crate::ksymbols::{div_k1, tame, K1Cycle, K1Value, MilnorSymbol};

/// A candidate element of the first higher Chow group: curves with functions on them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HigherCycleRep {
    components: Vec<(PrimeDivisor, ResidueFunc)>,
}

impl HigherCycleRep {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add the class of `f` on `curve`; `f` must be a unit along it.
    pub fn push(&mut self, curve: PrimeDivisor, f: &RatFunc) -> Result<()> {
        let r = restrict(f, &curve)?;
        self.components.push((curve, r));
        Ok(())
    }

    pub fn components(&self) -> &[(PrimeDivisor, ResidueFunc)] {
        &self.components
    }

    /// Disjoint union of two representatives.
    pub fn union(&self, other: &Self) -> Self {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        HigherCycleRep { components }
    }

    pub fn as_k1_cycle(&self) -> Result<K1Cycle> {
        let mut out = K1Cycle::trivial(Variety::A2);
        for (c, f) in &self.components {
            out.insert(c.clone(), K1Value::Curve(f.clone()))?;
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        if self.components.is_empty() {
            return "none".into();
        }
        let parts: Vec<String> = self.components.iter().map(|(c, f)| format!("({c}, {f})")).collect();
        parts.join(" ")
    }
}

fn record_functions<'a>(
    cert: &mut Certificate,
    fs: impl IntoIterator<Item = &'a RatFunc>,
    x: Variety,
    ctx: &Context,
) -> Result<()> {
    for f in fs {
        let d = div_codim1(f, x, ctx)?;
        cert.provenance.record_all(d.iter().map(|(p, _)| p));
    }
    Ok(())
}

/// Pass iff the divisors of the components sum to zero.
pub fn cycle_check(c: &HigherCycleRep, ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::KerDiv, ctx.seed).input("cycle", c.describe());
    let mut total = ClosedPointCycle::zero();
    for (curve, f) in &c.components {
        let d = div_on_curve(f, ctx)?;
        cert.detail.push(format!("div on {curve} of {f}: {d}"));
        cert.provenance.record(curve);
        total = total.add(&d);
    }
    record_functions(&mut cert, c.components.iter().map(|(_, f)| f.rep()), Variety::A2, ctx)?;
    cert.verdict = Verdict::from_bool(total.is_zero());
    cert.witness = total.to_string();
    Ok(cert)
}

/// Pass iff the tame symbol of `s` equals the K1 cycle of `c` component by
/// component. A pass exhibits `c` as a boundary; a fail decides nothing.
pub fn tame_boundary_certify(c: &HigherCycleRep, s: &MilnorSymbol, ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::TameImage, ctx.seed)
        .input("cycle", c.describe())
        .input("symbol", s);
    let check = cycle_check(c, ctx)?;
    if !check.passed() {
        cert.notes.push(format!("the cycle is not in the kernel of div: {}", check.witness));
    }
    let image = tame(s, Variety::A2, ctx)?;
    let own = c.as_k1_cycle()?;
    let quotient = image.mul(&own.inv())?;
    for (p, v) in image.iter() {
        cert.detail.push(format!("tame component {p}: {v}"));
    }
    for (p, v) in own.iter() {
        cert.detail.push(format!("cycle component {p}: {v}"));
    }
    cert.provenance = check.provenance;
    for (_, f, g) in s.iter() {
        record_functions(&mut cert, [f, g], Variety::A2, ctx)?;
    }
    cert.verdict = Verdict::from_bool(check.verdict.passed() && quotient.is_trivial());
    cert.witness = quotient.to_string();
    Ok(cert)
}

/// Pass iff `div(tame({f, g})) = 0` on the plane.
pub fn complex_check_q2(f: &RatFunc, g: &RatFunc, ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::ComplexSquareZero, ctx.seed).input("f", f).input("g", g);
    let t = tame(&MilnorSymbol::single(f.clone(), g.clone())?, Variety::A2, ctx)?;
    let mut total = ClosedPointCycle::zero();
    for (p, v) in t.iter() {
        let K1Value::Curve(r) = v else {
            return Err(Error::RingMismatch);
        };
        let d = div_on_curve(r, ctx)?;
        cert.detail.push(format!("component {p}: {v}; div {d}"));
        total = total.add(&d);
    }
    debug_assert_eq!(total, div_k1(&t, ctx)?);
    record_functions(&mut cert, [f, g], Variety::A2, ctx)?;
    cert.verdict = Verdict::from_bool(total.is_zero());
    cert.witness = total.to_string();
    Ok(cert)
}

/// Pass iff the product over all points of the norms of the tame components is 1.
pub fn weil_check_p1(f: &RatFunc, g: &RatFunc, ctx: &Context) -> Result<Certificate> {
    let mut cert = Certificate::new(Claim::Reciprocity, ctx.seed).input("f", f).input("g", g);
    let t = tame(&MilnorSymbol::single(f.clone(), g.clone())?, Variety::P1, ctx)?;
    let mut product = Rational::one();
    for (p, v) in t.iter() {
        let K1Value::Point(pv) = v else {
            return Err(Error::RingMismatch);
        };
        let n = pv.norm();
        cert.detail.push(format!("component {p}: {v}; norm {}", render_rational(&n)));
        product *= n;
    }
    record_functions(&mut cert, [f, g], Variety::P1, ctx)?;
    cert.verdict = Verdict::from_bool(product.is_one());
    cert.witness = render_rational(&product);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Ring;
    use crate::parse::parse_ratfunc;

    fn xy(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::XY).unwrap()
    }

    fn t(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::T).unwrap()
    }

    fn curve(src: &str) -> PrimeDivisor {
        PrimeDivisor::new(xy(src).num(), &Context::default()).unwrap()
    }

    fn rep(parts: &[(&str, &str)]) -> HigherCycleRep {
        let mut c = HigherCycleRep::new();
        for (cv, f) in parts {
            c.push(curve(cv), &xy(f)).unwrap();
        }
        c
    }

    #[test]
    fn kernel_membership() {
        let ctx = Context::default();
        let ok = cycle_check(&rep(&[("x", "y"), ("y", "1/x")]), &ctx).unwrap();
        assert!(ok.passed());
        assert_eq!(ok.witness, "0");
        let bad = cycle_check(&rep(&[("x", "y")]), &ctx).unwrap();
        assert!(!bad.passed());
        assert_eq!(bad.witness, "[(0,0)]");
        assert!(cycle_check(&HigherCycleRep::new(), &ctx).unwrap().passed());
    }

    #[test]
    fn boundary_certificates() {
        let ctx = Context::default();
        let c = rep(&[("x", "y"), ("y", "1/x")]);
        let yx = MilnorSymbol::single(xy("y"), xy("x")).unwrap();
        assert!(tame_boundary_certify(&c, &yx, &ctx).unwrap().passed());
        let xy_sym = MilnorSymbol::single(xy("x"), xy("y")).unwrap();
        assert!(!tame_boundary_certify(&c, &xy_sym, &ctx).unwrap().passed());
        assert!(tame_boundary_certify(&HigherCycleRep::new(), &MilnorSymbol::zero(), &ctx).unwrap().passed());
    }

    #[test]
    fn complex_property_examples() {
        let ctx = Context::default();
        assert!(complex_check_q2(&xy("x"), &xy("y"), &ctx).unwrap().passed());
        assert!(complex_check_q2(&xy("x - y"), &xy("x + y"), &ctx).unwrap().passed());
        assert!(complex_check_q2(&xy("2"), &xy("3"), &ctx).unwrap().passed());
    }

    #[test]
    fn reciprocity_examples() {
        let ctx = Context::default();
        let c = weil_check_p1(&t("t"), &t("t - 2"), &ctx).unwrap();
        assert!(c.passed());
        assert_eq!(c.detail, vec!["component 0: -1/2; norm -1/2", "component 2: 2; norm 2", "component INF: -1; norm -1"]);
        assert!(weil_check_p1(&t("t"), &t("1 - t"), &ctx).unwrap().passed());
        let tt = weil_check_p1(&t("t"), &t("t"), &ctx).unwrap();
        assert!(tt.passed());
        assert_eq!(tt.detail.len(), 2);
        assert!(weil_check_p1(&t("t^2 + 1"), &t("t - 3"), &ctx).unwrap().passed());
    }
}
