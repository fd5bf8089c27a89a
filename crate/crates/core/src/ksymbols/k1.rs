use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::numfield::NumberField;
use crate::arith::poly::{MultiPoly, Ring, Var};
use crate::arith::ratfunc::RatFunc;
use crate::arith::upoly::UPoly;
use crate::arith::{render_rational, Rational};
use crate::error::{Error, Result};
use crate::geometry::{restrict, PrimeDivisor, ResidueFunc, Variety};

/// Nonzero element of the residue field of a point of the line: Q for rational
/// points and infinity, `Q[t]/(m)` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointValue {
    field: Option<NumberField>,
    value: UPoly,
}

impl PointValue {
    pub fn rational(r: Rational) -> Self {
        PointValue { field: None, value: UPoly::constant(r) }
    }

    pub fn field(&self) -> Option<&NumberField> {
        self.field.as_ref()
    }

    pub fn value(&self) -> &UPoly {
        &self.value
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.field {
            None => Some(self.value.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.value == UPoly::one()
    }

    fn mul(&self, other: &Self) -> Self {
        let value = match &self.field {
            None => self.value.mul(&other.value),
            Some(k) => k.mul(&self.value, &other.value),
        };
        PointValue { field: self.field.clone(), value }
    }

    fn inv(&self) -> Self {
        let value = match &self.field {
            None => UPoly::constant(self.value.coeff(0).recip()),
            Some(k) => k.inv(&self.value).expect("nonzero residue value"),
        };
        PointValue { field: self.field.clone(), value }
    }

    /// Norm down to Q.
    pub fn norm(&self) -> Rational {
        match &self.field {
            None => self.value.coeff(0),
            Some(k) => k.norm(&self.value),
        }
    }
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            None => write!(f, "{}", render_rational(&self.value.coeff(0))),
            Some(_) => write!(f, "{}", MultiPoly::from_upoly(Ring::T, Var::T, &self.value)),
        }
    }
}

/// A component value of a K1 cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K1Value {
    Point(PointValue),
    Curve(ResidueFunc),
}

impl K1Value {
    pub fn is_one(&self) -> bool {
        match self {
            K1Value::Point(p) => p.is_one(),
            K1Value::Curve(r) => r.is_one(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (K1Value::Point(a), K1Value::Point(b)) => Ok(K1Value::Point(a.mul(b))),
            (K1Value::Curve(a), K1Value::Curve(b)) => Ok(K1Value::Curve(a.mul(b)?)),
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            K1Value::Point(p) => K1Value::Point(p.inv()),
            K1Value::Curve(r) => K1Value::Curve(r.inv()),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        match self {
            K1Value::Curve(r) => K1Value::Curve(r.pow(e)),
            K1Value::Point(p) => {
                let base = if e < 0 { p.inv() } else { p.clone() };
                let mut acc = PointValue { field: p.field.clone(), value: UPoly::one() };
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(&base);
                }
                K1Value::Point(acc)
            }
        }
    }
}

impl fmt::Display for K1Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K1Value::Point(p) => write!(f, "{p}"),
            K1Value::Curve(r) => write!(f, "{r}"),
        }
    }
}

/// The value of `h` at the point `y` of the line; `h` must be a unit there.
pub fn point_value(h: &RatFunc, y: &PrimeDivisor) -> Result<PointValue> {
    let undefined = || Error::RestrictionUndefined(format!("{h} at {y}"));
    match y.poly() {
        None => {
            if h.num().total_degree() != h.den().total_degree() {
                return Err(undefined());
            }
            Ok(PointValue::rational(h.num().lc() / h.den().lc()))
        }
        Some(m) => {
            let m = m.to_upoly(Var::T).ok_or_else(undefined)?;
            let n = h.num().to_upoly(Var::T).ok_or_else(undefined)?;
            let d = h.den().to_upoly(Var::T).ok_or_else(undefined)?;
            if m.deg() == 1 {
                let root = -m.coeff(0) / m.coeff(1);
                let dv = d.eval(&root);
                let nv = n.eval(&root);
                if dv.is_zero() || nv.is_zero() {
                    return Err(undefined());
                }
                return Ok(PointValue::rational(nv / dv));
            }
            let k = NumberField::new(&m);
            let value = k.div(&n, &d).ok_or_else(undefined)?;
            if value.is_zero() {
                return Err(undefined());
            }
            Ok(PointValue { field: Some(k), value })
        }
    }
}

/// The class of `h` in the residue field of the prime `y` on `variety`.
pub fn k1_value(h: &RatFunc, y: &PrimeDivisor, variety: Variety) -> Result<K1Value> {
    match variety {
        Variety::P1 => Ok(K1Value::Point(point_value(h, y)?)),
        Variety::A2 => restrict(h, y)
            .map(K1Value::Curve)
            .map_err(|_| Error::RestrictionUndefined(format!("{h} along {y}"))),
    }
}

/// Element of the sum over primes of the multiplicative groups of residue fields.
/// Trivial components are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K1Cycle {
    variety: Variety,
    comps: BTreeMap<PrimeDivisor, K1Value>,
}

impl K1Cycle {
    pub fn trivial(variety: Variety) -> Self {
        K1Cycle { variety, comps: BTreeMap::new() }
    }

    pub fn variety(&self) -> Variety {
        self.variety
    }

    pub fn single(variety: Variety, prime: PrimeDivisor, value: K1Value) -> Result<Self> {
        let mut c = Self::trivial(variety);
        c.insert(prime, value)?;
        Ok(c)
    }

    /// Multiply `value` into the component at `prime`.
    pub fn insert(&mut self, prime: PrimeDivisor, value: K1Value) -> Result<()> {
        match self.comps.entry(prime) {
            Entry::Vacant(v) => {
                if !value.is_one() {
                    v.insert(value);
                }
            }
            Entry::Occupied(mut o) => {
                let prod = o.get().mul(&value)?;
                if prod.is_one() {
                    o.remove();
                } else {
                    *o.get_mut() = prod;
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.variety != other.variety {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (p, v) in &other.comps {
            out.insert(p.clone(), v.clone())?;
        }
        Ok(out)
    }

    pub fn inv(&self) -> Self {
        K1Cycle {
            variety: self.variety,
            comps: self.comps.iter().map(|(p, v)| (p.clone(), v.inv())).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn get(&self, prime: &PrimeDivisor) -> Option<&K1Value> {
        self.comps.get(prime)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PrimeDivisor, &K1Value)> {
        self.comps.iter()
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }
}

impl fmt::Display for K1Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.comps.iter().map(|(p, v)| format!("{p}: {v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};
    use crate::parse::parse_ratfunc;

    fn t(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::T).unwrap()
    }

    #[test]
    fn values_on_the_line() {
        let zero = PrimeDivisor::from_factor(t("t").num(), crate::arith::factor::FactorCert::Proved);
        assert_eq!(point_value(&t("1/(t-2)"), &zero).unwrap().as_rational(), Some(rat_frac(-1, 2)));
        assert_eq!(point_value(&t("-(t-2)/t"), &PrimeDivisor::Inf).unwrap().as_rational(), Some(rat(-1)));
        assert!(point_value(&t("t"), &zero).is_err());
        let i = PrimeDivisor::from_factor(t("t^2 + 1").num(), crate::arith::factor::FactorCert::Proved);
        let v = point_value(&t("t + 1"), &i).unwrap();
        assert_eq!(v.norm(), rat(2));
        assert_eq!(v.to_string(), "t + 1");
    }
}
