//! Dual numbers over rational functions: `body + eps * part` with `eps^2 = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Ring;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualRatFunc {
    body: RatFunc,
    eps: RatFunc,
}

impl DualRatFunc {
    pub fn new(body: RatFunc, eps: RatFunc) -> Result<Self> {
        if body.ring() != eps.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(DualRatFunc { body, eps })
    }

    pub fn from_body(body: RatFunc) -> Self {
        let ring = body.ring();
        DualRatFunc { body, eps: RatFunc::zero(ring) }
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_body(RatFunc::one(ring))
    }

    /// The nilpotent generator itself.
    pub fn eps(ring: Ring) -> Self {
        DualRatFunc { body: RatFunc::zero(ring), eps: RatFunc::one(ring) }
    }

    pub fn body(&self) -> &RatFunc {
        &self.body
    }

    pub fn eps_part(&self) -> &RatFunc {
        &self.eps
    }

    pub fn ring(&self) -> Ring {
        self.body.ring()
    }

    pub fn is_unit(&self) -> bool {
        !self.body.is_zero()
    }

    pub fn is_undeformed(&self) -> bool {
        self.eps.is_zero()
    }

    pub fn into_parts(self) -> (RatFunc, RatFunc) {
        (self.body, self.eps)
    }

    pub fn inv(&self) -> Result<Self> {
        dual_invert(self)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &dual_invert(other)?)
    }
}

/// `(b + eps*e)^-1 = 1/b - eps*e/b^2`.
pub fn dual_invert(u: &DualRatFunc) -> Result<DualRatFunc> {
    let inv = u.body.inv().ok_or_else(|| Error::NotAUnit { value: u.to_string() })?;
    let eps = -&(&u.eps * &(&inv * &inv));
    Ok(DualRatFunc { body: inv, eps })
}

impl fmt::Display for DualRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps.is_zero() {
            return write!(f, "{}", self.body);
        }
        let negative = self.eps.num().lc() < num_traits::Zero::zero();
        let mag = if negative { -&self.eps } else { self.eps.clone() };
        let tail = if mag.is_one() { "eps".to_string() } else { format!("eps*({mag})") };
        match (self.body.is_zero(), negative) {
            (true, false) => write!(f, "{tail}"),
            (true, true) => write!(f, "-{tail}"),
            (false, false) => write!(f, "{} + {tail}", self.body),
            (false, true) => write!(f, "{} - {tail}", self.body),
        }
    }
}

impl fmt::Debug for DualRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualRatFunc({self})")
    }
}

impl From<RatFunc> for DualRatFunc {
    fn from(r: RatFunc) -> Self {
        DualRatFunc::from_body(r)
    }
}

impl<'a> Add<&'a DualRatFunc> for &'a DualRatFunc {
    type Output = DualRatFunc;
    fn add(self, rhs: &DualRatFunc) -> DualRatFunc {
        DualRatFunc { body: &self.body + &rhs.body, eps: &self.eps + &rhs.eps }
    }
}

impl<'a> Sub<&'a DualRatFunc> for &'a DualRatFunc {
    type Output = DualRatFunc;
    fn sub(self, rhs: &DualRatFunc) -> DualRatFunc {
        DualRatFunc { body: &self.body - &rhs.body, eps: &self.eps - &rhs.eps }
    }
}

impl<'a> Mul<&'a DualRatFunc> for &'a DualRatFunc {
    type Output = DualRatFunc;
    fn mul(self, rhs: &DualRatFunc) -> DualRatFunc {
        let eps = &(&self.body * &rhs.eps) + &(&self.eps * &rhs.body);
        DualRatFunc { body: &self.body * &rhs.body, eps }
    }
}

impl Neg for &DualRatFunc {
    type Output = DualRatFunc;
    fn neg(self) -> DualRatFunc {
        DualRatFunc { body: -&self.body, eps: -&self.eps }
    }
}

impl Mul for DualRatFunc {
    type Output = DualRatFunc;
    fn mul(self, rhs: DualRatFunc) -> DualRatFunc {
        &self * &rhs
    }
}

impl Add for DualRatFunc {
    type Output = DualRatFunc;
    fn add(self, rhs: DualRatFunc) -> DualRatFunc {
        &self + &rhs
    }
}

impl Sub for DualRatFunc {
    type Output = DualRatFunc;
    fn sub(self, rhs: DualRatFunc) -> DualRatFunc {
        &self - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Var;
    use crate::arith::rat;

    fn x() -> RatFunc {
        RatFunc::var(Var::X)
    }

    fn dual(b: RatFunc, e: RatFunc) -> DualRatFunc {
        DualRatFunc::new(b, e).unwrap()
    }

    #[test]
    fn invert_one_plus_eps_x() {
        let u = dual(RatFunc::one(Ring::XY), x());
        assert_eq!(dual_invert(&u).unwrap(), dual(RatFunc::one(Ring::XY), -&x()));
    }

    #[test]
    fn invert_x_plus_eps() {
        let u = dual(x(), RatFunc::one(Ring::XY));
        let v = dual_invert(&u).unwrap();
        assert_eq!(v.body(), &x().inv().unwrap());
        assert_eq!(v.eps_part(), &-&x().pow(-2).unwrap());
        assert_eq!(v.to_string(), "1/x - eps*(1/x^2)");
    }

    #[test]
    fn invert_constant() {
        let u = DualRatFunc::from_body(RatFunc::from_int(Ring::XY, 5));
        let v = dual_invert(&u).unwrap();
        assert_eq!(v.body(), &RatFunc::constant(Ring::XY, crate::arith::rat_frac(1, 5)));
        assert!(v.is_undeformed());
    }

    #[test]
    fn zero_body_is_not_a_unit() {
        let e = DualRatFunc::eps(Ring::XY);
        assert!(matches!(dual_invert(&e), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn eps_squares_to_zero() {
        let e = DualRatFunc::eps(Ring::T);
        let sq = &e * &e;
        assert!(sq.body().is_zero() && sq.eps_part().is_zero());
        assert_eq!(dual(x(), x().scale(&rat(-2))).to_string(), "x - eps*(2*x)");
        assert_eq!(dual(x(), RatFunc::one(Ring::XY)).to_string(), "x + eps");
    }
}
