//! Polynomial gcd over the rationals.
//!
//! Bivariate inputs go through a primitive pseudo-remainder sequence in
//! `Q[x][y]`, with contents handled by univariate gcds in `Q[x]`.

use num_traits::{One, Zero};

use super::poly::{MultiPoly, Ring, Var};
use super::upoly::UPoly;
use super::Rational;

/// Polynomial in `y` with coefficients in `Q[x]`, low degree first.
type YPoly = Vec<UPoly>;

fn trim(p: &mut YPoly) {
    while p.last().is_some_and(UPoly::is_zero) {
        p.pop();
    }
}

fn to_ypoly(p: &MultiPoly) -> YPoly {
    p.coeffs_in(Var::Y)
        .iter()
        .map(|c| c.to_upoly(Var::X).expect("y-coefficient free of y"))
        .collect()
}

fn from_ypoly(p: &YPoly) -> MultiPoly {
    let cs: Vec<MultiPoly> = p.iter().map(|c| MultiPoly::from_upoly(Ring::XY, Var::X, c)).collect();
    MultiPoly::from_coeffs_in(Ring::XY, Var::Y, &cs)
}

fn content(p: &YPoly) -> UPoly {
    p.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
}

fn divide_by(p: &YPoly, c: &UPoly) -> YPoly {
    p.iter().map(|a| a.div_exact(c).expect("content divides")).collect()
}

/// Pseudo-remainder of `a` by `b` in `Q[x][y]`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: YPoly = r.iter().map(|c| c.mul(lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&bc.mul(&lr));
        }
        trim(&mut next);
        r = next;
    }
    r
}

fn x_degree(p: &YPoly) -> usize {
    p.iter().map(UPoly::deg).max().unwrap_or(0)
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> UPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = out.mul(&UPoly::new(vec![-xs[i].clone(), Rational::one()])).add(&UPoly::constant(dd[i].clone()));
    }
    out
}

/// Gcd of two polynomials primitive over `Q[x]`, by specializing `x`, taking gcds in
/// `Q[y]` and interpolating; the candidate is accepted only if it divides both inputs.
/// `None` if no candidate is found within the point budget.
fn gcd_by_evaluation(a: &YPoly, b: &YPoly) -> Option<YPoly> {
    const BUDGET: i64 = 400;
    let (la, lb) = (a.last().unwrap(), b.last().unwrap());
    let gamma = la.gcd(lb);
    let need = gamma.deg() + x_degree(a).min(x_degree(b)) + 1;
    let (ma, mb) = (from_ypoly(a), from_ypoly(b));
    let mut degree = usize::MAX;
    let mut points: Vec<(Rational, UPoly)> = Vec::new();
    for k in 0..BUDGET {
        let x0 = super::rat(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        if la.eval(&x0).is_zero() || lb.eval(&x0).is_zero() {
            continue;
        }
        let sa = UPoly::new(a.iter().map(|c| c.eval(&x0)).collect());
        let sb = UPoly::new(b.iter().map(|c| c.eval(&x0)).collect());
        let g0 = sa.gcd(&sb);
        if g0.deg() == 0 {
            return Some(vec![UPoly::one()]);
        }
        if g0.deg() > degree {
            continue;
        }
        if g0.deg() < degree {
            degree = g0.deg();
            points.clear();
        }
        points.push((x0.clone(), g0.scale(&gamma.eval(&x0))));
        if points.len() < need {
            continue;
        }
        let xs: Vec<Rational> = points.iter().map(|(x, _)| x.clone()).collect();
        let h: YPoly = (0..=degree)
            .map(|j| interpolate(&xs, &points.iter().map(|(_, g)| g.coeff(j)).collect::<Vec<_>>()))
            .collect();
        let h = divide_by(&h, &content(&h));
        let mh = from_ypoly(&h);
        if mh.divides(&ma) && mh.divides(&mb) {
            return Some(h);
        }
        points.remove(0);
    }
    None
}

/// Greatest common divisor, primitive with positive leading coefficient; gcd(0, 0) = 0.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.ring(), b.ring(), "gcd across rings");
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    match a.ring() {
        Ring::T => {
            let g = a.to_upoly(Var::T).unwrap().gcd(&b.to_upoly(Var::T).unwrap());
            MultiPoly::from_upoly(Ring::T, Var::T, &g).primitive_part()
        }
        Ring::XY => gcd_xy(a, b),
    }
}

fn gcd_xy(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut pa = to_ypoly(a);
    let mut pb = to_ypoly(b);
    let ca = content(&pa);
    let cb = content(&pb);
    let cg = ca.gcd(&cb);
    pa = divide_by(&pa, &ca);
    pb = divide_by(&pb, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = if pb.len() == 1 {
        vec![UPoly::one()]
    } else {
        gcd_by_evaluation(&pa, &pb).unwrap_or_else(|| prs_gcd(pa, pb))
    };
    let g = divide_by(&g, &content(&g));
    let out: YPoly = g.iter().map(|c| c.mul(&cg)).collect();
    from_ypoly(&out).primitive_part()
}

/// Primitive pseudo-remainder sequence; `a` has at least the y-degree of `b`.
fn prs_gcd(mut pa: YPoly, mut pb: YPoly) -> YPoly {
    while pb.len() > 1 {
        let r = prem(&pa, &pb);
        pa = pb;
        if r.is_empty() {
            return pa;
        }
        let c = content(&r);
        pb = divide_by(&r, &c);
    }
    // pb is a nonzero polynomial free of y; primitive parts are coprime.
    vec![UPoly::one()]
}

/// Squarefree decomposition `p = c * prod q_i^i` with primitive pairwise-coprime `q_i`.
pub fn squarefree_decomposition(p: &MultiPoly) -> Vec<(MultiPoly, u32)> {
    let mut out = Vec::new();
    let mut rest = p.primitive_part();
    let mut mult = 1u32;
    while !rest.is_constant() {
        // rest = prod q_i^i gives g = prod q_i^(i-1)
        let g = derivative_gcd(&rest);
        let sqfree = rest.div_exact(&g).expect("gcd divides");
        let common = poly_gcd(&sqfree, &g);
        let once = sqfree.div_exact(&common).expect("gcd divides");
        if !once.is_constant() {
            out.push((once.primitive_part(), mult));
        }
        rest = g;
        mult += 1;
    }
    out
}

/// gcd of `p` with all its partial derivatives.
fn derivative_gcd(p: &MultiPoly) -> MultiPoly {
    let mut g = p.clone();
    for &v in p.ring().vars() {
        if p.involves(v) {
            g = poly_gcd(&g, &p.derivative(v));
        }
    }
    g
}
