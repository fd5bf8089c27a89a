//! Factorization of squarefree integer polynomials: modular factorization,
//! Hensel lifting and exhaustive recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, PolyFp};
use super::upoly::UPoly;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// How many good primes to sample before committing to the one with fewest factors.
const PRIME_SAMPLES: usize = 6;

fn reduce(c: &[BigInt], p: u64) -> PolyFp {
    let m = BigInt::from(p);
    PolyFp::new(p, c.iter().map(|a| a.mod_floor(&m).to_u64().unwrap()).collect())
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn mod_vec(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn lift_fp(a: &PolyFp) -> Vec<BigInt> {
    a.c.iter().map(|&x| BigInt::from(x)).collect()
}

/// Outcome of the modular irreducibility probe.
pub(crate) enum ModularWitness {
    /// Irreducible modulo some prime, which proves irreducibility over Q.
    Irreducible,
    /// Factorization pattern found; continue with lifting.
    Split { p: u64, factors: Vec<PolyFp> },
}

pub(crate) fn modular_probe(f: &[BigInt], seed: u64) -> ModularWitness {
    let lc = f.last().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<PolyFp>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce(f, p);
        if fp.deg() + 1 != f.len() || !fp.is_squarefree() {
            continue;
        }
        let monic = fp.monic();
        if modp::is_irreducible(&monic) {
            return ModularWitness::Irreducible;
        }
        let fs = modp::factor_squarefree(&monic, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= PRIME_SAMPLES {
            break;
        }
    }
    let (p, factors) = best.expect("some small prime keeps a squarefree reduction");
    ModularWitness::Split { p, factors }
}

/// Lift `f ≡ g0 * h0 (mod p)` with monic `g0, h0`, `f` monic mod `p^k`.
fn hensel_pair(f: &[BigInt], g0: &PolyFp, h0: &PolyFp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = PolyFp::ext_gcd(g0, h0);
    let pb = BigInt::from(p);
    let mut g = lift_fp(g0);
    let mut h = lift_fp(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let gh = mul_z(&g, &h);
        let n = f.len().max(gh.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &pj
            })
            .collect();
        let e = reduce(&diff, p);
        let (q, a) = e.mul(&t).div_rem(g0);
        let b = e.mul(&s).add(&q.mul(h0));
        let ga = lift_fp(&a);
        let hb = lift_fp(&b);
        g = add_scaled(&g, &ga, &pj, &next);
        h = add_scaled(&h, &hb, &pj, &next);
        pj = next;
    }
    (g, h)
}

fn add_scaled(a: &[BigInt], b: &[BigInt], k: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let v: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default() * k)
        .collect();
    mod_vec(&v, m)
}

fn hensel_multi(f: &[BigInt], factors: &[PolyFp], p: u64, k: u32, m: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![mod_vec(f, m)];
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid].iter().fold(PolyFp::one(p), |a, b| a.mul(b));
    let h0 = factors[mid..].iter().fold(PolyFp::one(p), |a, b| a.mul(b));
    let (g, h) = hensel_pair(f, &g0, &h0, p, k);
    let mut out = hensel_multi(&g, &factors[..mid], p, k, m);
    out.extend(hensel_multi(&h, &factors[mid..], p, k, m));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m / 2;
    a.iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn primitive_int(a: &[BigInt]) -> Vec<BigInt> {
    let mut v = a.to_vec();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

fn exact_div_z(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let q = UPoly::from_integers(f).div_exact(&UPoly::from_integers(g))?;
    if q.coeffs().iter().all(|c| c.is_integer()) {
        Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
    } else {
        None
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1
/// with positive leading coefficient.
pub(crate) fn factor_squarefree_z(f: &[BigInt], seed: u64) -> Vec<Vec<BigInt>> {
    if f.len() <= 2 {
        return vec![f.to_vec()];
    }
    let (p, modular) = match modular_probe(f, seed) {
        ModularWitness::Irreducible => return vec![f.to_vec()],
        ModularWitness::Split { p, factors } => (p, factors),
    };
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let n = f.len() - 1;
    let lc = f.last().unwrap().clone();
    let norm = f.iter().map(|c| c.abs()).max().unwrap();
    // any factor's coefficients are bounded by 2^n * |f|_2 <= 2^n * (n+1) * |f|_inf,
    // and we multiply by the leading coefficient before recombining
    let bound: BigInt = BigInt::from(2u32).pow(n as u32 + 1) * (n as u64 + 1) * &norm * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let lc_inv = lc.modinv(&m).expect("lc invertible mod p^k");
    let monic: Vec<BigInt> = mod_vec(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &m);
    let mut lifted = hensel_multi(&monic, &modular, p, k, &m);

    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for s in subsets(lifted.len(), size) {
            let lc_rest = rest.last().unwrap().clone();
            let mut cand = vec![lc_rest.clone()];
            for &i in &s {
                cand = mod_vec(&mul_z(&cand, &lifted[i]), &m);
            }
            let cand = primitive_int(&symmetric(&cand, &m));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = exact_div_z(&rest, &cand) {
                out.push(cand);
                rest = q;
                let keep: Vec<Vec<BigInt>> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !s.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if rest.len() > 1 {
        out.push(primitive_int(&rest));
    }
    out
}
