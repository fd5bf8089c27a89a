use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::arith::poly::{MultiPoly, Ring, Var};
use crate::arith::ratfunc::RatFunc;

/// A Kaehler differential of the function field: `a*dt` on the line,
/// `a*dx + b*dy` on the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffForm {
    ring: Ring,
    coeffs: Vec<RatFunc>,
}

impl DiffForm {
    pub fn zero(ring: Ring) -> Self {
        DiffForm { ring, coeffs: ring.vars().iter().map(|_| RatFunc::zero(ring)).collect() }
    }

    pub fn new(ring: Ring, coeffs: Vec<RatFunc>) -> Self {
        assert_eq!(coeffs.len(), ring.vars().len(), "one coefficient per coordinate");
        DiffForm { ring, coeffs }
    }

    /// The exact form `df`.
    pub fn d(f: &RatFunc) -> Self {
        let ring = f.ring();
        DiffForm { ring, coeffs: ring.vars().iter().map(|&v| f.derivative(v)).collect() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, v: Var) -> &RatFunc {
        let i = self.ring.vars().iter().position(|&w| w == v).expect("coordinate of this ring");
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    /// Multiply every coefficient by a function.
    pub fn scale(&self, f: &RatFunc) -> Self {
        DiffForm { ring: self.ring, coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }
}

/// `df / f`.
pub fn dlog_dform(f: &RatFunc) -> DiffForm {
    DiffForm::d(f).scale(&f.inv().expect("logarithmic derivative of zero"))
}

impl<'a> Add<&'a DiffForm> for &'a DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        DiffForm { ring: self.ring, coeffs }
    }
}

impl<'a> Sub<&'a DiffForm> for &'a DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        DiffForm { ring: self.ring, coeffs }
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        DiffForm { ring: self.ring, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

fn den_needs_parens(d: &MultiPoly) -> bool {
    if d.num_terms() != 1 {
        return true;
    }
    let (m, c) = d.leading().unwrap();
    !(c.is_one() && (m.0[0] == 0 || m.0[1] == 0))
}

/// `dx`, `-dy`, `x*dy`, `(x + 1)*dx/y`, `-dy/(x*y)`.
fn render_term(c: &RatFunc, basis: &str) -> String {
    let num = c.num();
    let mut s = if num.is_one() {
        format!("d{basis}")
    } else if (-num).is_one() {
        format!("-d{basis}")
    } else if num.num_terms() == 1 {
        format!("{num}*d{basis}")
    } else {
        format!("({num})*d{basis}")
    };
    let den = c.den();
    if !den.is_one() {
        if den_needs_parens(den) {
            s = format!("{s}/({den})");
        } else {
            s = format!("{s}/{den}");
        }
    }
    s
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .ring
            .vars()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| render_term(c, v.name()))
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in terms.iter().enumerate() {
            match (i, t.strip_prefix('-')) {
                (0, _) => write!(f, "{t}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfunc;

    fn xy(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::XY).unwrap()
    }

    #[test]
    fn dlog_examples() {
        assert_eq!(dlog_dform(&xy("x")).to_string(), "dx/x");
        assert_eq!(dlog_dform(&xy("x*y")).to_string(), "dx/x + dy/y");
        assert!(dlog_dform(&xy("7")).is_zero());
    }

    #[test]
    fn rendering() {
        let f = DiffForm::new(Ring::XY, vec![xy("0"), xy("-1/(x*y)")]);
        assert_eq!(f.to_string(), "-dy/(x*y)");
        let g = DiffForm::new(Ring::XY, vec![xy("(x+1)/y"), xy("-2")]);
        assert_eq!(g.to_string(), "(x + 1)*dx/y - 2*dy");
        assert_eq!(DiffForm::zero(Ring::T).to_string(), "0");
    }
}
