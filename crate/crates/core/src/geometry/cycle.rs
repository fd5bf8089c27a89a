use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::point::ClosedPoint;
use super::prime::PrimeDivisor;

/// Formal Z-linear combination with no zero coefficients, keys in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle<K: Ord> {
    terms: BTreeMap<K, i64>,
}

pub type DivisorCycle = Cycle<PrimeDivisor>;
pub type ClosedPointCycle = Cycle<ClosedPoint>;

impl<K: Ord> Default for Cycle<K> {
    fn default() -> Self {
        Cycle { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Cycle<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, n: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(k, n);
        c
    }

    pub fn add_term(&mut self, k: K, n: i64) {
        if n == 0 {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(n);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += n;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, n) in &other.terms {
            out.add_term(k.clone(), *n);
        }
        out
    }

    pub fn scale(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Cycle { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * n)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl DivisorCycle {
    /// Sum of coefficients weighted by the degree of each prime.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, n)| n * p.degree() as i64).sum()
    }
}

impl ClosedPointCycle {
    /// Sum of coefficients weighted by residue degree.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, n)| n * p.residue_degree() as i64).sum()
    }
}

pub fn cycle_add<K: Ord + Clone>(a: &Cycle<K>, b: &Cycle<K>) -> Cycle<K> {
    a.add(b)
}

pub fn cycle_is_zero<K: Ord + Clone>(c: &Cycle<K>) -> bool {
    c.is_zero()
}

impl<K: Ord + fmt::Display> fmt::Display for Cycle<K> {
    /// `[a] + 2*[b] - [c]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, &n)) in self.terms.iter().enumerate() {
            let sign = if n < 0 { "-" } else { "+" };
            match (i, n < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if n.abs() != 1 {
                write!(f, "{}*", n.abs())?;
            }
            write!(f, "[{k}]")?;
        }
        Ok(())
    }
}
