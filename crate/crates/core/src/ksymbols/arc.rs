use std::fmt;

use crate::arith::dual::DualRatFunc;
use crate::arith::gcd::poly_gcd;
use crate::arith::poly::Ring;
use crate::arith::ratfunc::RatFunc;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::geometry::{div_codim1, restrict, valuation, PrimeDivisor, ResidueFunc, Variety};

use super::symbol::DualMilnorSymbol;

/// A Green-Griffiths arc `{div(f + eps*f1), (g + eps*g1)|}` supported on one
/// component of `div(f)`.
///
/// `local_eq` is the body `f` whose divisor contains `curve`; for an arc given
/// directly by a curve it is the curve's own equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGArc {
    curve: PrimeDivisor,
    local_eq: RatFunc,
    f1: RatFunc,
    unit: DualRatFunc,
    sign: i8,
}

fn no_common_component(a: &RatFunc, b: &RatFunc) -> bool {
    let pa = a.num() * a.den();
    let pb = b.num() * b.den();
    poly_gcd(&pa, &pb).is_constant()
}

impl GGArc {
    pub fn new(curve: PrimeDivisor, local_eq: RatFunc, f1: RatFunc, unit: DualRatFunc, sign: i8) -> Result<Self> {
        if curve.ring() != Ring::XY {
            return Err(Error::Unsupported("arcs live on plane curves".into()));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("arc sign must be 1 or -1, got {sign}")));
        }
        if local_eq.is_zero() || valuation(&local_eq, &curve) == 0 {
            return Err(Error::InvalidArgument(format!("{curve} is not a component of div({local_eq})")));
        }
        let g = unit.body();
        if g.is_zero() || valuation(g, &curve) != 0 {
            return Err(Error::NotAUnitAlongY { value: g.to_string(), curve: curve.to_string() });
        }
        if !no_common_component(&local_eq, g) {
            return Err(Error::InvalidArgument(format!(
                "div({local_eq}) and div({g}) share a curve component"
            )));
        }
        Ok(GGArc { curve, local_eq, f1, unit, sign })
    }

    /// The arc on `curve` whose local equation is the curve itself.
    pub fn on_curve(curve: PrimeDivisor, f1: RatFunc, unit: DualRatFunc, sign: i8) -> Result<Self> {
        let eq = RatFunc::from_poly(curve.poly().ok_or(Error::RingMismatch)?.clone());
        Self::new(curve, eq, f1, unit, sign)
    }

    pub fn curve(&self) -> &PrimeDivisor {
        &self.curve
    }

    pub fn local_eq(&self) -> &RatFunc {
        &self.local_eq
    }

    pub fn f1(&self) -> &RatFunc {
        &self.f1
    }

    pub fn unit(&self) -> &DualRatFunc {
        &self.unit
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn g(&self) -> &RatFunc {
        self.unit.body()
    }

    pub fn g1(&self) -> &RatFunc {
        self.unit.eps_part()
    }
}

impl fmt::Display for GGArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { "+" } else { "-" };
        write!(f, "{s}arc({}, f1={}, unit {}", self.curve, self.f1, self.unit)?;
        let own = self.curve.poly().map(|p| RatFunc::from_poly(p.clone()));
        if own.as_ref() != Some(&self.local_eq) {
            write!(f, ", local {}", self.local_eq)?;
        }
        write!(f, ")")
    }
}

/// Arcs of the boundary of a dual symbol: for `{f + eps*f1, g + eps*g1}` one arc
/// with sign +1 on each component of `div(f)` carrying `f1` and the unit
/// `g + eps*g1`, and one arc with sign -1 on each component of `div(g)` carrying
/// `g1` and the unit `f + eps*f1`. A symbol whose bodies share a component
/// contributes nothing. A coefficient `n` repeats the arcs `|n|` times, flipping
/// signs when negative.
pub fn d_eps(s: &DualMilnorSymbol, ctx: &Context) -> Result<Vec<GGArc>> {
    let mut out = Vec::new();
    for (n, u, v) in s.iter() {
        if u.ring() != Ring::XY || v.ring() != Ring::XY {
            return Err(Error::Unsupported("arcs are defined on the plane".into()));
        }
        let (f, g) = (u.body(), v.body());
        let df = div_codim1(f, Variety::A2, ctx)?;
        let dg = div_codim1(g, Variety::A2, ctx)?;
        if df.iter().any(|(p, _)| dg.get(p) != 0) {
            continue;
        }
        let mut arcs = Vec::new();
        for (p, _) in df.iter() {
            arcs.push(GGArc::new(p.clone(), f.clone(), u.eps_part().clone(), v.clone(), 1)?);
        }
        for (p, _) in dg.iter() {
            arcs.push(GGArc::new(p.clone(), g.clone(), v.eps_part().clone(), u.clone(), -1)?);
        }
        for _ in 0..n.unsigned_abs() {
            for a in &arcs {
                let mut a = a.clone();
                if n < 0 {
                    a.sign = -a.sign;
                }
                out.push(a);
            }
        }
    }
    Ok(out)
}

/// The image at `eps = 0`: the tame component `(g|_Y)^(-sign * ord_Y(f))`.
pub fn arc_specialize(a: &GGArc) -> Result<(PrimeDivisor, ResidueFunc)> {
    let e = -(a.sign as i64) * valuation(&a.local_eq, &a.curve);
    let value = restrict(a.g(), &a.curve)?.pow(e);
    Ok((a.curve.clone(), value))
}

/// The pair of short exact sequences attached to an arc: the module
/// `(O_X)_(f)[eps]/(f + eps*f1)` with the identity and multiplication by `g + eps*g1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSES {
    pub support: PrimeDivisor,
    pub localized_at: RatFunc,
    pub presentation: DualRatFunc,
    pub automorphism: DualRatFunc,
    pub sign: i8,
}

pub fn arc_as_double_ses(a: &GGArc) -> DoubleSES {
    DoubleSES {
        support: a.curve.clone(),
        localized_at: a.local_eq.clone(),
        presentation: DualRatFunc::new(a.local_eq.clone(), a.f1.clone()).expect("same ring"),
        automorphism: a.unit.clone(),
        sign: a.sign,
    }
}

impl DoubleSES {
    pub fn is_undeformed(&self) -> bool {
        self.presentation.is_undeformed()
    }

    pub fn to_arc(&self) -> Result<GGArc> {
        GGArc::new(
            self.support.clone(),
            self.localized_at.clone(),
            self.presentation.eps_part().clone(),
            self.automorphism.clone(),
            self.sign,
        )
    }
}

impl fmt::Display for DoubleSES {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "support: {}", self.support)?;
        writeln!(f, "module: O[eps]/({}) localized at {}", self.presentation, self.localized_at)?;
        writeln!(f, "sequence 1: id")?;
        writeln!(f, "sequence 2: *({})", self.automorphism)?;
        write!(f, "sign: {}", self.sign)
    }
}
