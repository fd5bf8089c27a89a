use std::fmt;

use num_traits::{One, Zero};

use super::prime::PrimeDivisor;
use crate::arith::linalg::solve;
use crate::arith::numfield::NumberField;
use crate::arith::poly::{Monomial, MultiPoly, Ring, Var};
use crate::arith::upoly::UPoly;
use crate::arith::{render_rational, Rational};

/// A closed point. On the line it is a prime of `Q[t]` or infinity; in the plane it
/// is the maximal ideal `(u(x), v(x, y))` with `u` monic irreducible, `v` monic in
/// `y` and of `x`-degree below `deg u`. That pair is the reduced lex Groebner basis,
/// so the presentation is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedPoint {
    Line(PrimeDivisor),
    Plane { u: MultiPoly, v: MultiPoly },
}

impl ClosedPoint {
    pub fn rational(a: &Rational, b: &Rational) -> Self {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        ClosedPoint::Plane {
            u: &x - &MultiPoly::constant(Ring::XY, a.clone()),
            v: &y - &MultiPoly::constant(Ring::XY, b.clone()),
        }
    }

    pub fn residue_degree(&self) -> u32 {
        match self {
            ClosedPoint::Line(p) => p.degree(),
            ClosedPoint::Plane { u, v } => u.degree_in(Var::X) * v.degree_in(Var::Y),
        }
    }

    /// Coordinates of a rational plane point.
    pub fn coordinates(&self) -> Option<(Rational, Rational)> {
        match self {
            ClosedPoint::Plane { u, v } if self.residue_degree() == 1 => {
                let origin = [Rational::zero(), Rational::zero()];
                Some((-u.eval(&origin), -v.eval(&origin)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedPoint::Line(p) => write!(f, "{p}"),
            ClosedPoint::Plane { u, v } => match self.coordinates() {
                Some((a, b)) => write!(f, "({},{})", render_rational(&a), render_rational(&b)),
                None => write!(f, "V({u}, {v})"),
            },
        }
    }
}

fn padded(a: &UPoly, n: usize) -> Vec<Rational> {
    (0..n).map(|i| a.coeff(i)).collect()
}

/// The closed point with coordinates `(px, py)`, elements of `field` that generate it.
pub(crate) fn canonical_point(field: &NumberField, px: &UPoly, py: &UPoly) -> ClosedPoint {
    let n = field.degree();
    let mut powers = vec![UPoly::one()];
    let coeffs = loop {
        let next = field.mul(powers.last().unwrap(), px);
        let cols: Vec<Vec<Rational>> = powers.iter().map(|p| padded(p, n)).collect();
        if let Some(c) = solve(&cols, &padded(&next, n)) {
            break c;
        }
        powers.push(next);
    };
    let d = powers.len();
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let mut u = x.pow(d as u32);
    for (j, c) in coeffs.iter().enumerate() {
        u = &u - &MultiPoly::monomial(Ring::XY, Monomial([j as u32, 0]), c.clone());
    }

    let e = n / d;
    let mut basis = Vec::with_capacity(n);
    let mut index = Vec::with_capacity(n);
    let mut ypow = UPoly::one();
    for i in 0..e {
        for (j, xp) in powers.iter().enumerate() {
            basis.push(padded(&field.mul(&ypow, xp), n));
            index.push((j as u32, i as u32));
        }
        ypow = field.mul(&ypow, py);
    }
    let c = solve(&basis, &padded(&ypow, n)).expect("coordinates generate the residue field");
    let mut v = y.pow(e as u32);
    for ((j, i), c) in index.into_iter().zip(c) {
        v = &v - &MultiPoly::monomial(Ring::XY, Monomial([j, i]), c);
    }
    debug_assert!(u.lc().is_one());
    ClosedPoint::Plane { u, v }
}
