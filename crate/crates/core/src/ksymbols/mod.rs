//! Milnor symbols, the tame symbol, the divisor map on K1 data, and
//! Green-Griffiths arcs over dual numbers.

mod arc;
mod k1;
mod symbol;

use std::collections::BTreeSet;

pub use arc::{arc_as_double_ses, arc_specialize, d_eps, DoubleSES, GGArc};
pub use k1::{k1_value, point_value, K1Cycle, K1Value, PointValue};
pub use symbol::{DualMilnorSymbol, MilnorSymbol, SymbolEntry, Symbols};

use crate::arith::ratfunc::RatFunc;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::geometry::{div_codim1, div_on_curve, valuation, ClosedPointCycle, PrimeDivisor, Variety};

/// `(-1)^(ab) f^b / g^a` with `a = ord(f)`, `b = ord(g)`: a unit along the prime.
pub fn tame_component(f: &RatFunc, g: &RatFunc, y: &PrimeDivisor) -> RatFunc {
    let a = valuation(f, y);
    let b = valuation(g, y);
    let mut h = &f.pow(b).expect("nonzero") * &g.pow(-a).expect("nonzero");
    if (a * b) % 2 != 0 {
        h = -h;
    }
    h
}

/// The tame symbol, extended linearly; trivial components are dropped.
pub fn tame(s: &MilnorSymbol, x: Variety, ctx: &Context) -> Result<K1Cycle> {
    let mut out = K1Cycle::trivial(x);
    for (n, f, g) in s.iter() {
        if f.ring() != x.ring() || g.ring() != x.ring() {
            return Err(Error::RingMismatch);
        }
        let mut primes = BTreeSet::new();
        for h in [f, g] {
            primes.extend(div_codim1(h, x, ctx)?.iter().map(|(p, _)| p.clone()));
        }
        for y in primes {
            let h = tame_component(f, g, &y);
            let value = k1_value(&h, &y, x)?;
            out.insert(y, value.pow(n))?;
        }
    }
    Ok(out)
}

/// Sum of the divisors of the components. On the line there is no codimension-two
/// part and the result is zero.
pub fn div_k1(c: &K1Cycle, ctx: &Context) -> Result<ClosedPointCycle> {
    let mut out = ClosedPointCycle::zero();
    for (_, v) in c.iter() {
        if let K1Value::Curve(r) = v {
            out = out.add(&div_on_curve(r, ctx)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Ring;
    use crate::arith::{rat, rat_frac};
    use crate::parse::{parse_expr, parse_ratfunc};

    fn xy(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::XY).unwrap()
    }

    fn t(src: &str) -> RatFunc {
        parse_ratfunc(src, Ring::T).unwrap()
    }

    fn curve(src: &str) -> PrimeDivisor {
        PrimeDivisor::new(xy(src).num(), &Context::default()).unwrap()
    }

    #[test]
    fn steinberg_on_the_line() {
        let s = MilnorSymbol::single(t("t"), t("1 - t")).unwrap();
        assert!(tame(&s, Variety::P1, &Context::default()).unwrap().is_trivial());
    }

    #[test]
    fn weil_instance() {
        let s = MilnorSymbol::single(t("t"), t("t - 2")).unwrap();
        let c = tame(&s, Variety::P1, &Context::default()).unwrap();
        let vals: Vec<_> = c
            .iter()
            .map(|(p, v)| match v {
                K1Value::Point(p1) => (p.to_string(), p1.as_rational().unwrap()),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            vals,
            vec![("0".into(), rat_frac(-1, 2)), ("2".into(), rat(2)), ("INF".into(), rat(-1))]
        );
    }

    #[test]
    fn tame_of_coordinates() {
        let ctx = Context::default();
        let s = MilnorSymbol::single(xy("x"), xy("y")).unwrap();
        let c = tame(&s, Variety::A2, &ctx).unwrap();
        assert_eq!(c.to_string(), "V(y): x, V(x): 1/y");
        assert!(div_k1(&c, &ctx).unwrap().is_zero());
        let k = MilnorSymbol::single(xy("2"), xy("3")).unwrap();
        assert!(tame(&k, Variety::A2, &ctx).unwrap().is_trivial());
    }

    #[test]
    fn div_of_single_component() {
        let ctx = Context::default();
        let c = K1Cycle::single(
            Variety::A2,
            curve("x"),
            K1Value::Curve(crate::geometry::restrict(&xy("y"), &curve("x")).unwrap()),
        )
        .unwrap();
        assert_eq!(div_k1(&c, &ctx).unwrap().to_string(), "[(0,0)]");
        assert!(div_k1(&K1Cycle::trivial(Variety::A2), &ctx).unwrap().is_zero());
    }

    fn dual(src: &str) -> crate::arith::dual::DualRatFunc {
        parse_expr(src, Ring::XY).unwrap()
    }

    #[test]
    fn boundary_arcs() {
        let ctx = Context::default();
        let s = DualMilnorSymbol::single(dual("x + eps"), dual("y")).unwrap();
        let arcs = d_eps(&s, &ctx).unwrap();
        let shown: Vec<String> = arcs.iter().map(|a| a.to_string()).collect();
        assert_eq!(shown, vec!["+arc(V(x), f1=1, unit y)", "-arc(V(y), f1=0, unit x + eps)"]);
        let degenerate = DualMilnorSymbol::single(dual("x + eps"), dual("x")).unwrap();
        assert!(d_eps(&degenerate, &ctx).unwrap().is_empty());
        let both = DualMilnorSymbol::single(dual("x + eps"), dual("y + eps")).unwrap();
        let shown: Vec<String> = d_eps(&both, &ctx).unwrap().iter().map(|a| a.to_string()).collect();
        assert_eq!(shown, vec!["+arc(V(x), f1=1, unit y + eps)", "-arc(V(y), f1=1, unit x + eps)"]);
    }

    #[test]
    fn specialization_matches_tame() {
        let ctx = Context::default();
        let s = DualMilnorSymbol::single(dual("x + eps"), dual("y")).unwrap();
        let mut sum = K1Cycle::trivial(Variety::A2);
        for a in d_eps(&s, &ctx).unwrap() {
            let (p, v) = arc_specialize(&a).unwrap();
            sum.insert(p, K1Value::Curve(v)).unwrap();
        }
        assert_eq!(sum, tame(&s.specialize(), Variety::A2, &ctx).unwrap());
    }

    #[test]
    fn double_ses_round_trip() {
        let a = GGArc::on_curve(curve("x"), xy("1"), dual("y"), 1).unwrap();
        let d = arc_as_double_ses(&a);
        assert_eq!(d.presentation.to_string(), "x + eps");
        assert_eq!(d.to_arc().unwrap(), a);
        let b = GGArc::on_curve(curve("x^2 + y^2 - 1"), xy("0"), dual("x + 2"), -1).unwrap();
        assert!(arc_as_double_ses(&b).is_undeformed());
        assert_eq!(arc_as_double_ses(&b).to_arc().unwrap(), b);
    }
}
