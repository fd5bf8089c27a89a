//! Dense linear algebra over the rationals.

use num_traits::Zero;

use super::Rational;

/// Coefficients `c` with `sum c[j] * columns[j] = target`, or `None` when the
/// target is outside the span. Free variables, if any, are set to zero.
pub fn solve(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (dst, src) in m[i].iter_mut().zip(&pivot).skip(c) {
                    *dst -= &f * src;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut out = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][cols].clone();
    }
    Some(out)
}
