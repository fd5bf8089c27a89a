//! Dense polynomials over a small prime field, with distinct-degree and
//! equal-degree factorization.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Coefficients low degree first, reduced mod `p`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFp {
    pub p: u64,
    pub c: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl PolyFp {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for a in c.iter_mut() {
            *a %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyFp { p, c }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Self::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p)
            .collect();
        Self::new(p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|a| a * (k % self.p) % self.p).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::new(p, vec![]), self.clone());
        }
        let dd = d.deg();
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * inv % p;
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * dc % p) % p;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::new(p, vec![]));
        let (mut t0, mut t1) = (Self::new(p, vec![]), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        let k = inv_mod(r0.lc(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(p, self.c.iter().enumerate().skip(1).map(|(i, &a)| a * (i as u64 % p) % p).collect())
    }

    pub fn pow_mod_poly(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &PolyFp) -> Vec<(PolyFp, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = PolyFp::x(p);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod_poly(p, &rest);
        let g = rest.gcd(&h.sub(&PolyFp::x(p)));
        if g.deg() > 0 {
            out.push((g.clone(), d));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest.monic(), d));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus) for odd `p`.
pub fn equal_degree(f: &PolyFp, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
    let p = f.p;
    if f.deg() == d {
        return vec![f.monic()];
    }
    loop {
        let a = PolyFp::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let g = a.gcd(f);
        let g = if g.deg() > 0 {
            g
        } else {
            let e = (p.pow(d as u32) - 1) / 2;
            let b = a.pow_mod_poly(e, f).sub(&PolyFp::one(p));
            b.gcd(f)
        };
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

/// Complete factorization of a monic squarefree polynomial into monic irreducibles.
pub fn factor_squarefree(f: &PolyFp, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.c.cmp(&b.c)));
    out
}

/// Whether a monic squarefree polynomial is irreducible mod `p`.
pub fn is_irreducible(f: &PolyFp) -> bool {
    let dd = distinct_degree(f);
    dd.len() == 1 && dd[0].1 == f.deg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn splits_completely() {
        // (x - 1)(x - 2)(x^2 + 1) mod 7; x^2 + 1 is irreducible mod 7
        let p = 7;
        let f = PolyFp::new(p, vec![6, 1])
            .mul(&PolyFp::new(p, vec![5, 1]))
            .mul(&PolyFp::new(p, vec![1, 0, 1]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(PolyFp::one(p), |a, b| a.mul(b));
        assert_eq!(prod, f);
        assert!(is_irreducible(&PolyFp::new(p, vec![1, 0, 1])));
        assert!(!is_irreducible(&PolyFp::new(5, vec![1, 0, 1])));
    }
}
