//! Factorization over the rationals in one variable and in the plane.
//!
//! Univariate: squarefree decomposition, rational roots, then modular
//! factorization with Hensel lifting and exhaustive recombination.
//!
//! Bivariate: squarefree and content splitting, a linear shear making the
//! polynomial monic in `y`, specialization `x = a` to a squarefree univariate
//! polynomial, Hensel lifting of its factors in `Q[[x - a]][y]`, and exhaustive
//! recombination. An irreducible specialization proves irreducibility outright.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gcd::squarefree_decomposition;
use super::poly::{MultiPoly, Ring, Var};
use super::upoly::UPoly;
use super::zassenhaus::factor_squarefree_z;
use super::Rational;
use crate::context::Context;
use crate::error::{Error, Result};

/// Evidence backing the irreducibility of a reported factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorCert {
    /// Established by an exact argument (degree, modular witness, or exhaustive recombination).
    Proved,
    /// Supported only by modular evidence.
    Probabilistic,
    /// Taken from a user-supplied factorization.
    UserAsserted,
}

impl fmt::Display for FactorCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorCert::Proved => "proved",
            FactorCert::Probabilistic => "probabilistic",
            FactorCert::UserAsserted => "user-asserted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: MultiPoly,
    pub multiplicity: u32,
    pub cert: FactorCert,
}

/// `unit * prod factor^multiplicity`, factors primitive with positive leading coefficient,
/// pairwise non-associate, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self, ring: Ring) -> MultiPoly {
        self.factors.iter().fold(MultiPoly::constant(ring, self.unit.clone()), |acc, f| {
            &acc * &f.poly.pow(f.multiplicity)
        })
    }

    fn from_parts(input: &MultiPoly, parts: Vec<(MultiPoly, u32, FactorCert)>) -> Self {
        let mut merged: Vec<Factor> = Vec::new();
        for (p, m, cert) in parts {
            let p = p.primitive_part();
            if p.is_constant() {
                continue;
            }
            match merged.iter_mut().find(|f| f.poly == p) {
                Some(f) => {
                    f.multiplicity += m;
                    f.cert = f.cert.max(cert);
                }
                None => merged.push(Factor { poly: p, multiplicity: m, cert }),
            }
        }
        merged.sort_by(|a, b| a.poly.cmp(&b.poly));
        let prod = merged
            .iter()
            .fold(MultiPoly::one(input.ring()), |acc, f| &acc * &f.poly.pow(f.multiplicity));
        let unit = input.div_exact(&prod).and_then(|q| q.constant_value()).expect("factors multiply out to the input");
        Factorization { unit, factors: merged }
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].multiplicity == 1
    }
}

fn apply_hint(p: &MultiPoly, ctx: &Context) -> Option<Vec<(MultiPoly, u32, FactorCert)>> {
    ctx.hints
        .get(p)
        .map(|fs| fs.iter().map(|f| (f.clone(), 1, FactorCert::UserAsserted)).collect())
}

/// Complete factorization of a polynomial in a single variable.
pub fn factor_univariate(p: &MultiPoly, ctx: &Context) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    if let Some(parts) = apply_hint(p, ctx) {
        return Ok(Factorization::from_parts(p, parts));
    }
    if p.is_constant() {
        return Ok(Factorization::from_parts(p, Vec::new()));
    }
    let var = p
        .sole_var()
        .ok_or_else(|| Error::InvalidArgument(format!("{p} is not univariate")))?;
    let degree = p.degree_in(var) as usize;
    if degree > ctx.degree_bound {
        return Err(Error::DegreeBound { degree, bound: ctx.degree_bound });
    }
    let u = p.to_upoly(var).expect("univariate");
    let parts = factor_upoly(&u, ctx.seed)
        .into_iter()
        .map(|(f, m)| (MultiPoly::from_upoly(p.ring(), var, &f), m, FactorCert::Proved))
        .collect();
    Ok(Factorization::from_parts(p, parts))
}

/// Irreducible factors with multiplicity of a univariate rational polynomial.
pub(crate) fn factor_upoly(u: &UPoly, seed: u64) -> Vec<(UPoly, u32)> {
    let mut out = Vec::new();
    for (part, mult) in u.squarefree_decomposition() {
        let mut rest = part;
        for r in rest.rational_roots() {
            let lin = UPoly::linear_root(&r);
            rest = rest.div_exact(&lin).expect("root gives a factor");
            out.push((lin, mult));
        }
        if rest.deg() == 0 {
            continue;
        }
        let (_, ints) = rest.primitive_integer();
        for f in factor_squarefree_z(&ints, seed) {
            out.push((UPoly::from_integers(&f), mult));
        }
    }
    out
}

/// Factorization of a plane polynomial into irreducible factors over Q.
pub fn factor_plane_curve(p: &MultiPoly, ctx: &Context) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    if p.ring() != Ring::XY {
        return factor_univariate(p, ctx);
    }
    if let Some(parts) = apply_hint(p, ctx) {
        return Ok(Factorization::from_parts(p, parts));
    }
    let mut parts = Vec::new();
    for (q, mult) in squarefree_decomposition(p) {
        for (f, cert) in factor_squarefree_xy(&q, ctx)? {
            parts.push((f, mult, cert));
        }
    }
    Ok(Factorization::from_parts(p, parts))
}

/// Factor a primitive squarefree plane polynomial.
fn factor_squarefree_xy(q: &MultiPoly, ctx: &Context) -> Result<Vec<(MultiPoly, FactorCert)>> {
    if q.is_constant() {
        return Ok(Vec::new());
    }
    if let Some(parts) = apply_hint(q, ctx) {
        return Ok(parts.into_iter().map(|(f, _, c)| (f, c)).collect());
    }
    if q.sole_var().is_some() {
        let f = factor_univariate(q, ctx).map_err(|e| incomplete(q, e))?;
        return Ok(f.factors.into_iter().map(|f| (f.poly, f.cert)).collect());
    }
    // Split off the content with respect to y (a polynomial in x alone) and vice versa.
    for v in [Var::Y, Var::X] {
        let content = q
            .coeffs_in(v)
            .iter()
            .fold(MultiPoly::zero(Ring::XY), |g, c| super::gcd::poly_gcd(&g, c));
        if !content.is_constant() {
            let rest = q.div_exact(&content).expect("content divides");
            let mut out = factor_squarefree_xy(&content, ctx)?;
            out.extend(factor_squarefree_xy(&rest, ctx)?);
            return Ok(out);
        }
    }
    factor_primitive_xy(q, ctx)
}

fn incomplete(q: &MultiPoly, e: Error) -> Error {
    match e {
        Error::DegreeBound { .. } => Error::FactorIncomplete { poly: q.to_string() },
        other => other,
    }
}

/// Candidate values for shears and specializations: 0, 1, -1, 2, -2, ...
fn small_values() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(|k| Rational::from_integer(BigInt::from(k)))
}

/// `q(x + c y, y)`
pub(crate) fn shear_x(q: &MultiPoly, c: &Rational) -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    q.compose_xy(&(&x + &y.scale(c)), &y)
}

fn factor_primitive_xy(q: &MultiPoly, ctx: &Context) -> Result<Vec<(MultiPoly, FactorCert)>> {
    const TRIES: usize = 40;
    let top = q.top_form();
    let c = small_values()
        .take(TRIES)
        .find(|c| !top.eval(&[c.clone(), Rational::one()]).is_zero())
        .ok_or_else(|| Error::FactorIncomplete { poly: q.to_string() })?;
    let sheared = shear_x(q, &c);
    let lc_y = sheared.lc_in(Var::Y).constant_value().expect("shear makes the y-leading coefficient constant");
    let sheared = sheared.scale(&lc_y.recip());
    let d = sheared.degree_in(Var::Y) as usize;
    if d > ctx.degree_bound {
        return Err(Error::FactorIncomplete { poly: q.to_string() });
    }
    // Specialize x = a keeping the y-polynomial squarefree.
    let a = small_values()
        .take(TRIES)
        .find(|a| {
            let s = sheared.eval_var(Var::X, a).to_upoly(Var::Y).expect("univariate in y");
            s.deg() == d && s.gcd(&s.derivative()).deg() == 0
        })
        .ok_or_else(|| Error::FactorIncomplete { poly: q.to_string() })?;
    let special = sheared.eval_var(Var::X, &a).to_upoly(Var::Y).expect("univariate in y");
    let uni: Vec<UPoly> = factor_upoly(&special, ctx.seed).into_iter().map(|(f, _)| f.monic()).collect();
    if uni.len() == 1 {
        return Ok(vec![(q.primitive_part(), FactorCert::Proved)]);
    }
    let x = MultiPoly::var(Var::X);
    let shift = MultiPoly::constant(Ring::XY, a.clone());
    // F(s, y) = sheared(s + a, y), monic in y
    let shifted = sheared.substitute(Var::X, &(&x + &shift));
    let prec = shifted.total_degree() as usize + 1;
    let f_series = to_series(&shifted, prec);
    let lifted = hensel_series(&f_series, &uni, prec);

    let mut found = Vec::new();
    let mut rest = shifted.clone();
    let mut pool = lifted;
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        for s in index_subsets(pool.len(), size) {
            let cand = s.iter().fold(series_one(prec), |acc, &i| series_mul(&acc, &pool[i], prec));
            let cand = from_series(&cand);
            if let Some(qt) = rest.div_exact(&cand) {
                hit = Some((s, cand, qt));
                break;
            }
        }
        match hit {
            Some((s, cand, qt)) => {
                found.push(cand);
                rest = qt;
                pool = pool.into_iter().enumerate().filter(|(i, _)| !s.contains(i)).map(|(_, g)| g).collect();
            }
            None => size += 1,
        }
    }
    if !rest.is_constant() {
        found.push(rest);
    }
    let unshift = &x - &shift;
    let neg_c = -c;
    Ok(found
        .into_iter()
        .map(|f| {
            let f = f.substitute(Var::X, &unshift);
            (shear_x(&f, &neg_c).primitive_part(), FactorCert::Proved)
        })
        .collect())
}

/// Polynomial in `y` with coefficients truncated power series in `s`: `[y-degree][s-degree]`.
type Series = Vec<Vec<Rational>>;

fn to_series(p: &MultiPoly, prec: usize) -> Series {
    let d = p.degree_in(Var::Y) as usize;
    let mut out = vec![vec![Rational::zero(); prec]; d + 1];
    for (m, c) in p.terms() {
        let (i, j) = (m.0[0] as usize, m.0[1] as usize);
        if i < prec {
            out[j][i] = c.clone();
        }
    }
    out
}

fn from_series(s: &Series) -> MultiPoly {
    let mut terms = Vec::new();
    for (j, row) in s.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            terms.push((super::poly::Monomial([i as u32, j as u32]), c.clone()));
        }
    }
    MultiPoly::from_terms(Ring::XY, terms)
}

fn series_one(prec: usize) -> Series {
    let mut row = vec![Rational::zero(); prec];
    row[0] = Rational::one();
    vec![row]
}

fn series_mul(a: &Series, b: &Series, prec: usize) -> Series {
    let mut out = vec![vec![Rational::zero(); prec]; a.len() + b.len() - 1];
    for (ja, ra) in a.iter().enumerate() {
        for (jb, rb) in b.iter().enumerate() {
            for (ia, ca) in ra.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (ib, cb) in rb.iter().enumerate().take(prec - ia) {
                    out[ja + jb][ia + ib] += ca * cb;
                }
            }
        }
    }
    out
}

/// Coefficient of `s^k` as a polynomial in `y`.
fn series_slice(a: &Series, k: usize) -> UPoly {
    UPoly::new(a.iter().map(|row| row[k].clone()).collect())
}

fn series_add_slice(a: &mut Series, k: usize, p: &UPoly) {
    for (j, c) in p.coeffs().iter().enumerate() {
        a[j][k] += c;
    }
}

fn upoly_to_series(p: &UPoly, prec: usize) -> Series {
    p.coeffs()
        .iter()
        .map(|c| {
            let mut row = vec![Rational::zero(); prec];
            row[0] = c.clone();
            row
        })
        .collect()
}

/// Lift the factorization `f(0, y) = prod factors` to `f = prod lifted (mod s^prec)`.
fn hensel_series(f: &Series, factors: &[UPoly], prec: usize) -> Vec<Series> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid].iter().fold(UPoly::one(), |a, b| a.mul(b));
    let h0 = factors[mid..].iter().fold(UPoly::one(), |a, b| a.mul(b));
    let (_, s, t) = UPoly::ext_gcd(&g0, &h0);
    let mut g = upoly_to_series(&g0, prec);
    let mut h = upoly_to_series(&h0, prec);
    for k in 1..prec {
        let gh = series_mul(&g, &h, prec);
        let e = series_slice(f, k).sub(&series_slice(&gh, k));
        if e.is_zero() {
            continue;
        }
        let (q, a) = e.mul(&t).div_rem(&g0);
        let b = e.mul(&s).add(&q.mul(&h0));
        series_add_slice(&mut g, k, &a);
        series_add_slice(&mut h, k, &b);
    }
    let mut out = hensel_series(&g, &factors[..mid], prec);
    out.extend(hensel_series(&h, &factors[mid..], prec));
    out
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Factor a polynomial in whichever ring it lives in.
pub fn factor(p: &MultiPoly, ctx: &Context) -> Result<Factorization> {
    match p.ring() {
        Ring::T => factor_univariate(p, ctx),
        Ring::XY => factor_plane_curve(p, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }
    fn polys(f: &Factorization) -> Vec<(String, u32)> {
        f.factors.iter().map(|f| (f.poly.to_string(), f.multiplicity)).collect()
    }

    #[test]
    fn t_squared_minus_one() {
        let p = &(&t() * &t()) - &MultiPoly::one(Ring::T);
        let f = factor_univariate(&p, &Context::default()).unwrap();
        assert_eq!(polys(&f), vec![("t - 1".into(), 1), ("t + 1".into(), 1)]);
        assert!(f.factors.iter().all(|f| f.cert == FactorCert::Proved));
        assert_eq!(f.expand(Ring::T), p);
    }

    #[test]
    fn t_squared_plus_one_irreducible() {
        let p = &(&t() * &t()) + &MultiPoly::one(Ring::T);
        let f = factor_univariate(&p, &Context::default()).unwrap();
        assert!(f.is_irreducible());
        assert_eq!(f.factors[0].cert, FactorCert::Proved);
    }

    #[test]
    fn constant_has_no_factors() {
        let f = factor_univariate(&MultiPoly::from_int(Ring::T, 6), &Context::default()).unwrap();
        assert_eq!(f.unit, rat(6));
        assert!(f.factors.is_empty());
    }

    #[test]
    fn degree_bound_enforced() {
        let p = t().pow(9);
        let err = factor_univariate(&p, &Context::default()).unwrap_err();
        assert_eq!(err, Error::DegreeBound { degree: 9, bound: 8 });
    }

    #[test]
    fn monomial_split() {
        let f = factor_plane_curve(&(&x() * &y()), &Context::default()).unwrap();
        assert_eq!(polys(&f), vec![("y".into(), 1), ("x".into(), 1)]);
    }

    #[test]
    fn difference_of_squares_plane() {
        let p = &(&x() * &x()) - &(&y() * &y());
        let f = factor_plane_curve(&p, &Context::default()).unwrap();
        assert_eq!(polys(&f), vec![("x - y".into(), 1), ("x + y".into(), 1)]);
    }

    #[test]
    fn cusp_is_irreducible() {
        let p = &(&y() * &y()) - &x().pow(3);
        let f = factor_plane_curve(&p, &Context::default()).unwrap();
        assert!(f.is_irreducible());
        assert_eq!(f.factors[0].poly, &x().pow(3) - &(&y() * &y()));
        assert_eq!(f.unit, rat(-1));
    }

    #[test]
    fn product_of_conics_and_line() {
        // (x^2 + y^2 - 1)(y - x^2)(x + 2y + 3)
        let one = MultiPoly::one(Ring::XY);
        let a = &(&(&x() * &x()) + &(&y() * &y())) - &one;
        let b = &y() - &(&x() * &x());
        let c = &(&x() + &y().scale(&rat(2))) + &MultiPoly::from_int(Ring::XY, 3);
        let p = &(&a * &b) * &c;
        let f = factor_plane_curve(&p, &Context::default()).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(Ring::XY), p);
    }

    #[test]
    fn hints_are_trusted_and_tagged() {
        let mut ctx = Context::default();
        let p = &(&x() * &x()) - &(&y() * &y());
        ctx.hints.insert(&p, vec![&x() - &y(), &x() + &y()]).unwrap();
        let f = factor_plane_curve(&p, &ctx).unwrap();
        assert!(f.factors.iter().all(|f| f.cert == FactorCert::UserAsserted));
    }
}
