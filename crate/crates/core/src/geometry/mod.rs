//! The projective line and the affine plane over Q: primes, valuations, divisors,
//! restriction to curves and zero-cycles.

mod cycle;
mod intersect;
mod point;
mod prime;
mod residue;

use std::fmt;
use std::str::FromStr;

pub use cycle::{cycle_add, cycle_is_zero, ClosedPointCycle, Cycle, DivisorCycle};
pub use intersect::{div_on_curve, intersection_cycle};
pub use point::ClosedPoint;
pub use prime::PrimeDivisor;
pub(crate) use prime::multiplicity;
pub use residue::{restrict, ResidueFunc};

use crate::arith::factor::factor;
use crate::arith::poly::Ring;
use crate::arith::ratfunc::RatFunc;
use crate::context::Context;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variety {
    P1,
    A2,
}

impl Variety {
    pub fn ring(self) -> Ring {
        match self {
            Variety::P1 => Ring::T,
            Variety::A2 => Ring::XY,
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::P1 => "P1",
            Variety::A2 => "A2",
        })
    }
}

impl FromStr for Variety {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P1" | "p1" => Ok(Variety::P1),
            "A2" | "a2" => Ok(Variety::A2),
            other => Err(Error::InvalidArgument(format!("unknown variety '{other}'"))),
        }
    }
}

/// Order of vanishing of `f` along `y`.
pub fn valuation(f: &RatFunc, y: &PrimeDivisor) -> i64 {
    match y.poly() {
        None => f.den().total_degree() as i64 - f.num().total_degree() as i64,
        Some(p) => multiplicity(f.num(), p) as i64 - multiplicity(f.den(), p) as i64,
    }
}

/// The divisor of a nonzero rational function, including infinity on the line.
pub fn div_codim1(f: &RatFunc, x: Variety, ctx: &Context) -> Result<DivisorCycle> {
    if f.ring() != x.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::InvalidArgument("the divisor of zero is undefined".into()));
    }
    let mut out = DivisorCycle::zero();
    for (part, sign) in [(f.num(), 1), (f.den(), -1)] {
        if part.is_constant() {
            continue;
        }
        for fac in factor(part, ctx)?.factors {
            out.add_term(PrimeDivisor::from_factor(&fac.poly, fac.cert), sign * fac.multiplicity as i64);
        }
    }
    if x == Variety::P1 {
        out.add_term(PrimeDivisor::Inf, valuation(f, &PrimeDivisor::Inf));
    }
    Ok(out)
}

/// Primes of `f`: every prime where its valuation is nonzero.
pub fn support(f: &RatFunc, x: Variety, ctx: &Context) -> Result<Vec<PrimeDivisor>> {
    Ok(div_codim1(f, x, ctx)?.iter().map(|(p, _)| p.clone()).collect())
}
