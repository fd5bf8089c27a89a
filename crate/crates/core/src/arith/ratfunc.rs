//! Reduced fractions of polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::poly::{MultiPoly, Ring, Var};
use super::Rational;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` primitive over Z with positive leading
/// coefficient; zero is `0 / 1`. The normal form is unique, so derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if num.ring() != den.ring() {
            return Err(Error::RingMismatch);
        }
        if den.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        let ring = num.ring();
        if num.is_zero() {
            return RatFunc { num, den: MultiPoly::one(ring) };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let (c, den) = den.primitive();
        RatFunc { num: num.scale(&c.recip()), den }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let ring = p.ring();
        RatFunc { num: p, den: MultiPoly::one(ring) }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(ring, c))
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(ring, c))
    }

    pub fn zero(ring: Ring) -> Self {
        Self::from_poly(MultiPoly::zero(ring))
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_poly(MultiPoly::one(ring))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn ring(&self) -> Ring {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert. `None` for a negative power of zero.
    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Some(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn derivative(&self, v: Var) -> Self {
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::normalize(num, self.den.pow(2))
    }

    /// Substitute a rational function for a variable.
    pub fn substitute(&self, v: Var, value: &RatFunc) -> Option<Self> {
        let d = self.num.degree_in(v).max(self.den.degree_in(v));
        let lift = |p: &MultiPoly| -> MultiPoly {
            // p(value) * den(value)^d, kept polynomial
            let cs = p.coeffs_in(v);
            let mut acc = MultiPoly::zero(p.ring());
            for (k, c) in cs.iter().enumerate() {
                let t = &(c * &value.num.pow(k as u32)) * &value.den.pow(d - k as u32);
                acc = &acc + &t;
            }
            acc
        };
        let num = lift(&self.num);
        let den = lift(&self.den);
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

fn wrap(p: &MultiPoly, atomic: bool) -> String {
    if atomic {
        p.to_string()
    } else {
        format!("({p})")
    }
}

impl fmt::Display for RatFunc {
    /// Canonical rendering; the expression parser reads it back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_ok = self.num.num_terms() == 1;
        let den_ok = self.den.is_atomic() || (self.den.num_terms() == 1 && self.den.lc().is_one() && {
            let (m, _) = self.den.leading().unwrap();
            m.0[0] == 0 || m.0[1] == 0
        });
        write!(f, "{}/{}", wrap(&self.num, num_ok), wrap(&self.den, den_ok))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let g = poly_gcd(&self.den, &rhs.den);
        let cut = |p: &MultiPoly, g: &MultiPoly| p.div_exact(g).expect("gcd divides");
        let (d1, d2) = (cut(&self.den, &g), cut(&rhs.den, &g));
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFunc::zero(self.ring());
        }
        let h = poly_gcd(&num, &g);
        let den = &d1 * &rhs.den;
        let (c, den) = cut(&den, &h).primitive();
        RatFunc { num: cut(&num, &h).scale(&c.recip()), den }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.ring());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let cut = |p: &MultiPoly, g: &MultiPoly| p.div_exact(g).expect("gcd divides");
        let num = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let den = &cut(&rhs.den, &g1) * &cut(&self.den, &g2);
        let (c, den) = den.primitive();
        RatFunc { num: num.scale(&c.recip()), den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one(Ring::XY)
    }
}
