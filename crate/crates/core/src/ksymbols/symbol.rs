use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::arith::dual::DualRatFunc;
use crate::arith::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Formal Z-linear combination of symbols over a coordinate ring. Entries are merged
/// by exact equality of their entries; no Steinberg or bilinearity relation is applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbols<T: Ord> {
    terms: BTreeMap<(T, T), i64>,
}

/// Combination of symbols `{f, g}` with `f, g` nonzero rational functions.
pub type MilnorSymbol = Symbols<RatFunc>;

/// Combination of symbols `{f + eps*f1, g + eps*g1}` with nonzero bodies.
pub type DualMilnorSymbol = Symbols<DualRatFunc>;

impl<T: Ord> Default for Symbols<T> {
    fn default() -> Self {
        Symbols { terms: BTreeMap::new() }
    }
}

pub trait SymbolEntry: Ord + Clone + fmt::Display {
    fn is_unit(&self) -> bool;
}

impl SymbolEntry for RatFunc {
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

impl SymbolEntry for DualRatFunc {
    fn is_unit(&self) -> bool {
        DualRatFunc::is_unit(self)
    }
}

impl<T: SymbolEntry> Symbols<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(f: T, g: T) -> Result<Self> {
        let mut s = Self::zero();
        s.push(1, f, g)?;
        Ok(s)
    }

    pub fn push(&mut self, n: i64, f: T, g: T) -> Result<()> {
        for e in [&f, &g] {
            if !e.is_unit() {
                return Err(Error::NotAUnit { value: e.to_string() });
            }
        }
        if n == 0 {
            return Ok(());
        }
        match self.terms.entry((f, g)) {
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
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((f, g), n) in &other.terms {
            out.push(*n, f.clone(), g.clone()).expect("entries already validated");
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &T, &T)> {
        self.terms.iter().map(|((f, g), n)| (*n, f, g))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl DualMilnorSymbol {
    /// Set `eps = 0`.
    pub fn specialize(&self) -> MilnorSymbol {
        let mut out = MilnorSymbol::zero();
        for (n, u, v) in self.iter() {
            out.push(n, u.body().clone(), v.body().clone()).expect("bodies are units");
        }
        out
    }
}

impl<T: SymbolEntry> fmt::Display for Symbols<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), &n)) in self.terms.iter().enumerate() {
            match (i, n < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if n.abs() != 1 {
                write!(f, "{}*", n.abs())?;
            }
            write!(f, "{{{a}, {b}}}")?;
        }
        Ok(())
    }
}
