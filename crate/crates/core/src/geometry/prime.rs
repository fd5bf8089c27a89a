use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::arith::factor::{factor, FactorCert};
use crate::arith::poly::{MultiPoly, Ring, Var};
use crate::arith::render_rational;
use crate::context::Context;
use crate::error::{Error, Result};

/// A codimension-one prime: a point of the projective line (monic irreducible
/// in `t`, or the point at infinity) or an irreducible plane curve (primitive,
/// positive leading coefficient).
#[derive(Clone, Debug)]
pub enum PrimeDivisor {
    Inf,
    Prime { poly: MultiPoly, cert: FactorCert },
}

impl PrimeDivisor {
    /// Wrap a polynomial already known to be irreducible, normalizing it.
    pub fn from_factor(poly: &MultiPoly, cert: FactorCert) -> Self {
        let poly = match poly.ring() {
            Ring::T => poly.monic(),
            Ring::XY => poly.primitive_part(),
        };
        PrimeDivisor::Prime { poly, cert }
    }

    /// Check irreducibility by factoring, then wrap.
    pub fn new(poly: &MultiPoly, ctx: &Context) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::NotIrreducible(poly.to_string()));
        }
        let f = factor(poly, ctx)?;
        if !f.is_irreducible() {
            return Err(Error::NotIrreducible(poly.to_string()));
        }
        Ok(Self::from_factor(&f.factors[0].poly, f.factors[0].cert))
    }

    pub fn poly(&self) -> Option<&MultiPoly> {
        match self {
            PrimeDivisor::Inf => None,
            PrimeDivisor::Prime { poly, .. } => Some(poly),
        }
    }

    pub fn cert(&self) -> FactorCert {
        match self {
            PrimeDivisor::Inf => FactorCert::Proved,
            PrimeDivisor::Prime { cert, .. } => *cert,
        }
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, PrimeDivisor::Inf)
    }

    pub fn ring(&self) -> Ring {
        self.poly().map_or(Ring::T, MultiPoly::ring)
    }

    /// Degree of the defining polynomial; 1 at infinity. On the line this is the residue degree.
    pub fn degree(&self) -> u32 {
        self.poly().map_or(1, MultiPoly::total_degree)
    }

    /// The rational coordinate of a degree-one point of the line.
    pub fn rational_root(&self) -> Option<crate::arith::Rational> {
        let p = self.poly()?;
        if p.ring() != Ring::T || p.degree_in(Var::T) != 1 {
            return None;
        }
        Some(-p.eval(&[crate::arith::rat(0), crate::arith::rat(0)]))
    }
}

impl PartialEq for PrimeDivisor {
    fn eq(&self, other: &Self) -> bool {
        self.poly() == other.poly()
    }
}

impl Eq for PrimeDivisor {}

impl Hash for PrimeDivisor {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly().hash(state);
    }
}

impl Ord for PrimeDivisor {
    /// Finite primes first in polynomial order, infinity last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.poly(), other.poly()) {
            (Some(a), Some(b)) => a.cmp(b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PrimeDivisor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeDivisor::Inf => write!(f, "INF"),
            PrimeDivisor::Prime { poly, .. } if poly.ring() == Ring::T => match self.rational_root() {
                Some(r) => write!(f, "{}", render_rational(&r)),
                None => write!(f, "{poly}"),
            },
            PrimeDivisor::Prime { poly, .. } => write!(f, "V({poly})"),
        }
    }
}

/// Multiplicity of the irreducible `p` in the nonzero polynomial `q`.
pub(crate) fn multiplicity(q: &MultiPoly, p: &MultiPoly) -> u32 {
    let mut q = q.clone();
    let mut k = 0;
    while let Some(r) = q.div_exact(p) {
        if q.is_constant() {
            break;
        }
        q = r;
        k += 1;
    }
    k
}
