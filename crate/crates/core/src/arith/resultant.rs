//! Sylvester resultants, evaluated by fraction-free (Bareiss) elimination.

use super::poly::{MultiPoly, Var};

/// Determinant of a square matrix of polynomials.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>) -> Option<MultiPoly> {
    let n = m.len();
    let ring = m.first()?.first()?.ring();
    let mut sign = false;
    let mut prev = MultiPoly::one(ring);
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Some(MultiPoly::zero(ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(ring);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if sign { -d } else { d })
}

/// The Sylvester resultant of `p` and `q` with respect to `var`.
///
/// Vanishes exactly when `p` and `q` share a factor of positive degree in `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: Var) -> MultiPoly {
    assert_eq!(p.ring(), q.ring(), "resultant across rings");
    let ring = p.ring();
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero(ring);
    }
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    if size == 0 {
        return MultiPoly::one(ring);
    }
    let zero = MultiPoly::zero(ring);
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows).expect("nonempty matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Ring;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }

    #[test]
    fn one_by_one_sylvester() {
        assert_eq!(resultant(&x(), &y(), Var::Y), x());
    }

    #[test]
    fn parabola_against_axis() {
        let p = &y() - &(&x() * &x());
        assert_eq!(resultant(&p, &y(), Var::Y), &x() * &x());
    }

    #[test]
    fn shared_factor_vanishes() {
        let p = &(&y() * &y()) + &x();
        assert!(resultant(&p, &p, Var::Y).is_zero());
    }

    #[test]
    fn univariate_numbers() {
        let t = MultiPoly::var(Var::T);
        let one = MultiPoly::one(Ring::T);
        // Res(t^2 - 1, t - 3) = 8
        let a = &(&t * &t) - &one;
        let b = &t - &MultiPoly::from_int(Ring::T, 3);
        assert_eq!(resultant(&a, &b, Var::T), MultiPoly::from_int(Ring::T, 8));
    }
}
