//! Sparse polynomials in `t` or in `x, y` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;
use super::{render_rational, Rational};

/// The coordinate ring a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ring {
    /// `Q[t]`, functions on the projective line (affine chart).
    T,
    /// `Q[x, y]`, functions on the affine plane.
    XY,
}

impl Ring {
    pub fn vars(self) -> &'static [Var] {
        match self {
            Ring::T => &[Var::T],
            Ring::XY => &[Var::X, Var::Y],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    T,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::X | Var::T => 0,
            Var::Y => 1,
        }
    }

    pub fn ring(self) -> Ring {
        match self {
            Var::T => Ring::T,
            _ => Ring::XY,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::T => "t",
        }
    }

    /// The other variable of the plane.
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
            Var::T => Var::T,
        }
    }
}

/// Exponent vector. In `Q[t]` only slot 0 is used.
///
/// Ordered graded-lexicographically: total degree first, then `x` before `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 2]);

impl Monomial {
    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0[0] <= other.0[0] && self.0[1] <= other.0[1]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in normal form: no zero coefficients, terms keyed by graded-lex monomial.
/// Equal polynomials have identical storage, so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(ring: Ring) -> Self {
        MultiPoly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::default(), c)
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0, 0];
        e[v.index()] = 1;
        Self::monomial(v.ring(), Monomial(e), Rational::one())
    }

    pub fn monomial(ring: Ring, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { ring, terms }
    }

    pub fn from_terms(ring: Ring, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Leading coefficient in graded-lex order; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v.index()]).max().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        assert!(!d.is_zero(), "polynomial division by zero");
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.ring);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !dm.divides(&m) {
                return None;
            }
            let qm = Monomial([m.0[0] - dm.0[0], m.0[1] - dm.0[1]]);
            let qc = c * &inv;
            let t = Self::monomial(self.ring, qm, qc.clone());
            rem = &rem - &(&t * d);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, p: &Self) -> bool {
        p.div_exact(self).is_some()
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        Self::from_terms(
            self.ring,
            self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
                let mut e = m.0;
                let k = e[i];
                e[i] -= 1;
                (Monomial(e), c * Rational::from_integer(BigInt::from(k)))
            }),
        )
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, v: Var, value: &Self) -> Self {
        self.check_ring(value);
        let i = v.index();
        let mut powers: Vec<Self> = vec![Self::one(self.ring)];
        let mut out = Self::zero(self.ring);
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut e = m.0;
            e[i] = 0;
            let rest = Self::monomial(self.ring, Monomial(e), c.clone());
            out = &out + &(&rest * &powers[k]);
        }
        out
    }

    /// Simultaneous substitution `x -> px, y -> py` in `Q[x, y]`.
    pub fn compose_xy(&self, px: &Self, py: &Self) -> Self {
        assert_eq!(self.ring, Ring::XY);
        let dx = self.degree_in(Var::X) as usize;
        let dy = self.degree_in(Var::Y) as usize;
        let mut xp = vec![Self::one(Ring::XY)];
        for _ in 0..dx {
            xp.push(&xp[xp.len() - 1] * px);
        }
        let mut yp = vec![Self::one(Ring::XY)];
        for _ in 0..dy {
            yp.push(&yp[yp.len() - 1] * py);
        }
        let mut out = Self::zero(Ring::XY);
        for (m, c) in &self.terms {
            let t = (&xp[m.0[0] as usize] * &yp[m.0[1] as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Evaluate one variable at a rational value.
    pub fn eval_var(&self, v: Var, a: &Rational) -> Self {
        self.substitute(v, &Self::constant(self.ring, a.clone()))
    }

    /// Evaluate at a full point (`[t]` or `[x, y]`).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, a) in point.iter().enumerate() {
                t *= num_traits::pow(a.clone(), m.0[i] as usize);
            }
            acc += t;
        }
        acc
    }

    /// Rational content `c` and primitive part `p` with `self = c * p`, where `p` has
    /// coprime integer coefficients and positive leading coefficient. Zero maps to `(0, 0)`.
    pub fn primitive(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let lcm_den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm_den / c.denom()))));
        if self.lc().is_negative() {
            g = -g;
        }
        let content = Rational::new(g, lcm_den);
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    pub fn primitive_part(&self) -> Self {
        self.primitive().1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Coefficients as a polynomial in `v`: entry `k` is the coefficient of `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Self> {
        let i = v.index();
        let d = self.degree_in(v) as usize;
        let mut out = vec![Self::zero(self.ring); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[i] as usize;
            e[i] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(ring: Ring, v: Var, coeffs: &[Self]) -> Self {
        let i = v.index();
        let mut out = Self::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0;
                e[i] += k as u32;
                out.add_term(Monomial(e), a.clone());
            }
        }
        out
    }

    /// Leading coefficient as a polynomial in `v`.
    pub fn lc_in(&self, v: Var) -> Self {
        self.coeffs_in(v).pop().unwrap_or_else(|| Self::zero(self.ring))
    }

    /// View as a univariate polynomial when no other variable occurs.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly> {
        let i = v.index();
        let d = self.degree_in(v) as usize;
        let mut c = vec![Rational::zero(); d + 1];
        for (m, a) in &self.terms {
            if m.0[1 - i] != 0 && self.ring == Ring::XY {
                return None;
            }
            c[m.0[i] as usize] = a.clone();
        }
        Some(UPoly::new(c))
    }

    pub fn from_upoly(ring: Ring, v: Var, p: &UPoly) -> Self {
        let i = v.index();
        Self::from_terms(
            ring,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = [0, 0];
                e[i] = k as u32;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// The single variable this polynomial involves, if exactly one.
    pub fn sole_var(&self) -> Option<Var> {
        let vs: Vec<Var> = self.ring.vars().iter().copied().filter(|&v| self.involves(v)).collect();
        (vs.len() == 1).then(|| vs[0])
    }

    /// Top homogeneous component.
    pub fn top_form(&self) -> Self {
        let d = self.total_degree();
        Self::from_terms(
            self.ring,
            self.terms.iter().filter(|(m, _)| m.total() == d).map(|(m, c)| (*m, c.clone())),
        )
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for &v in self.ring.vars() {
            match m.0[v.index()] {
                0 => {}
                1 => parts.push(v.name().to_string()),
                k => parts.push(format!("{}^{}", v.name(), k)),
            }
        }
        parts.join("*")
    }

    /// True when rendering is a single token that needs no parentheses as a divisor.
    pub(crate) fn is_atomic(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (m, c) = self.leading().unwrap();
        if m.total() == 0 {
            return c.is_integer() && !c.is_negative();
        }
        c.is_one() && (m.0[0] == 0 || m.0[1] == 0) && m.total() == 1
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if m.total() == 0 {
                write!(f, "{}", render_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", self.render_monomial(m))?;
            } else {
                write!(f, "{}*{}", render_rational(&a), self.render_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

impl Ord for MultiPoly {
    /// Canonical ordering: ring, then terms compared from the leading term down.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ring.cmp(&other.ring).then_with(|| {
            let a = self.terms.iter().rev();
            let b = other.terms.iter().rev();
            a.cmp(b)
        })
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = MultiPoly::zero(self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial([ma.0[0] + mb.0[0], ma.0[1] + mb.0[1]]), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
