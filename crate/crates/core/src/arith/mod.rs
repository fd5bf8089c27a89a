//! Exact arithmetic over the rationals: polynomials, rational functions, dual
//! numbers, gcd, factorization and resultants.

pub mod dual;
pub mod factor;
pub mod gcd;
pub mod linalg;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod ratfunc;
pub mod resultant;
pub mod upoly;
mod zassenhaus;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;

/// Arbitrary-precision rational number in lowest terms, positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` or `n/d`, the same form the expression parser reads back.
pub fn render_rational(r: &Rational) -> String {
    let mut s = String::new();
    if r.denom().is_one() {
        write!(s, "{}", r.numer()).unwrap();
    } else {
        write!(s, "{}/{}", r.numer(), r.denom()).unwrap();
    }
    s
}
