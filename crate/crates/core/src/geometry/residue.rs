use std::fmt;

use super::prime::PrimeDivisor;
use super::valuation;
use crate::arith::poly::{Monomial, MultiPoly, Ring, Var};
use crate::arith::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// The class of a rational function in the function field of a plane curve.
///
/// Representatives have numerator and denominator prime to the curve. When the
/// curve has constant leading coefficient in some variable, both are reduced
/// modulo the curve in that variable; for curves linear in that variable this
/// makes the representative canonical.
#[derive(Clone, Debug)]
pub struct ResidueFunc {
    curve: PrimeDivisor,
    rep: RatFunc,
}

impl ResidueFunc {
    pub fn curve(&self) -> &PrimeDivisor {
        &self.curve
    }

    pub fn rep(&self) -> &RatFunc {
        &self.rep
    }

    fn poly(&self) -> &MultiPoly {
        self.curve.poly().expect("plane curve")
    }

    pub fn one(curve: &PrimeDivisor) -> Self {
        ResidueFunc { curve: curve.clone(), rep: RatFunc::one(Ring::XY) }
    }

    pub fn is_one(&self) -> bool {
        (self.rep.num() - self.rep.den()).is_zero() || self.poly().divides(&(self.rep.num() - self.rep.den()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.curve != other.curve {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply classes on {} and {}",
                self.curve, other.curve
            )));
        }
        Ok(reduced(&self.curve, &(&self.rep * &other.rep)))
    }

    pub fn inv(&self) -> Self {
        let rep = self.rep.inv().expect("representatives are nonzero");
        ResidueFunc { curve: self.curve.clone(), rep }
    }

    pub fn pow(&self, e: i64) -> Self {
        let rep = self.rep.pow(e).expect("representatives are nonzero");
        reduced(&self.curve, &rep)
    }
}

impl PartialEq for ResidueFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.curve != other.curve {
            return false;
        }
        let diff = &(self.rep.num() * other.rep.den()) - &(other.rep.num() * self.rep.den());
        diff.is_zero() || self.poly().divides(&diff)
    }
}

impl Eq for ResidueFunc {}

impl fmt::Display for ResidueFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Variable to reduce in: one where the curve has constant leading coefficient,
/// lowest degree first, `x` on ties.
fn reduction_var(p: &MultiPoly) -> Option<Var> {
    [Var::X, Var::Y]
        .into_iter()
        .filter(|&v| p.degree_in(v) > 0 && p.lc_in(v).is_constant())
        .min_by_key(|&v| p.degree_in(v))
}

fn reduce_mod(q: &MultiPoly, p: &MultiPoly, v: Var) -> MultiPoly {
    let dp = p.degree_in(v);
    let c = p.lc_in(v).constant_value().expect("constant leading coefficient").recip();
    let mut q = q.clone();
    while !q.is_zero() && q.degree_in(v) >= dp {
        let k = q.degree_in(v) - dp;
        let mut exps = [0u32; 2];
        exps[v.index()] = k;
        let shift = MultiPoly::monomial(Ring::XY, Monomial(exps), c.clone());
        q = &q - &(&(&q.lc_in(v) * &shift) * p);
    }
    q
}

fn reduced(curve: &PrimeDivisor, rep: &RatFunc) -> ResidueFunc {
    let p = curve.poly().expect("plane curve");
    let rep = match reduction_var(p) {
        Some(v) => {
            let num = reduce_mod(rep.num(), p, v);
            let den = reduce_mod(rep.den(), p, v);
            RatFunc::new(num, den).expect("denominator prime to the curve")
        }
        None => rep.clone(),
    };
    ResidueFunc { curve: curve.clone(), rep }
}

/// The class of `g` in the function field of the plane curve `y`.
pub fn restrict(g: &RatFunc, y: &PrimeDivisor) -> Result<ResidueFunc> {
    if y.ring() != Ring::XY || g.ring() != Ring::XY {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() || valuation(g, y) != 0 {
        return Err(Error::NotAUnitAlongY { value: g.to_string(), curve: y.to_string() });
    }
    Ok(reduced(y, g))
}
