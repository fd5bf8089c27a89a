#![allow(dead_code)]

use gersten_core::arith::dual::DualRatFunc;
use gersten_core::arith::poly::Ring;
use gersten_core::arith::ratfunc::RatFunc;
use gersten_core::parse::{parse_expr, parse_ratfunc};
use proptest::prelude::*;

pub fn t(src: &str) -> RatFunc {
    parse_ratfunc(src, Ring::T).unwrap()
}

pub fn xy(src: &str) -> RatFunc {
    parse_ratfunc(src, Ring::XY).unwrap()
}

pub fn dual(src: &str) -> DualRatFunc {
    parse_expr(src, Ring::XY).unwrap()
}

/// Irreducible plane curves whose pairwise intersections are small.
pub const PLANE_FACTORS: [&str; 8] =
    ["x", "y", "x - 1", "y + 2", "x + y - 1", "x - y", "y - x^2", "x - y^2 + 1"];

fn product(c: i64, parts: &[(String, i64)]) -> String {
    let mut src = format!("{c}");
    for (p, e) in parts {
        if *e > 0 {
            src.push_str(&format!("*({p})^{e}"));
        } else {
            src.push_str(&format!("/({p})^{}", -e));
        }
    }
    src
}

fn nonzero(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = i64> {
    range.prop_filter("nonzero", |c| *c != 0)
}

/// `c * prod (t - a)^e` with at most four linear factors, each exponent `+1` or `-1`.
pub fn line_func() -> impl Strategy<Value = RatFunc> {
    (nonzero(-5..=5), prop::collection::vec((-4i64..=4, prop::bool::ANY), 0..=4)).prop_map(|(c, roots)| {
        let parts: Vec<(String, i64)> =
            roots.into_iter().map(|(a, up)| (format!("t - ({a})"), if up { 1 } else { -1 })).collect();
        t(&product(c, &parts))
    })
}

/// Like `line_func`, up to five factors.
pub fn line_func5() -> impl Strategy<Value = RatFunc> {
    (nonzero(-5..=5), prop::collection::vec((-4i64..=4, prop::bool::ANY), 0..=5)).prop_map(|(c, roots)| {
        let parts: Vec<(String, i64)> =
            roots.into_iter().map(|(a, up)| (format!("t - ({a})"), if up { 1 } else { -1 })).collect();
        t(&product(c, &parts))
    })
}

fn plane_from(c: i64, picks: &[(usize, i64)]) -> RatFunc {
    let parts: Vec<(String, i64)> = picks.iter().map(|&(i, e)| (PLANE_FACTORS[i].to_string(), e)).collect();
    xy(&product(c, &parts))
}

/// A plane function built from at most three pool factors.
pub fn plane_func() -> impl Strategy<Value = RatFunc> {
    (
        nonzero(-3..=3),
        prop::collection::vec((0..PLANE_FACTORS.len(), prop::sample::select(vec![-1i64, 1, 2])), 0..=3),
    )
        .prop_map(|(c, picks)| plane_from(c, &picks))
}

/// Two plane functions whose zeros and poles share no curve.
pub fn coprime_plane_pair() -> impl Strategy<Value = (RatFunc, RatFunc)> {
    (
        nonzero(-3..=3),
        nonzero(-3..=3),
        prop::collection::vec(0u8..10, PLANE_FACTORS.len()),
    )
        .prop_map(|(c, d, roles)| {
            let mut f = Vec::new();
            let mut g = Vec::new();
            for (i, r) in roles.into_iter().enumerate() {
                match r {
                    6 => f.push((i, 1)),
                    7 => f.push((i, -1)),
                    8 => g.push((i, 1)),
                    9 => g.push((i, -1)),
                    _ => {}
                }
            }
            (plane_from(c, &f), plane_from(d, &g))
        })
}

/// `a*x + b*y + c` with small coefficients.
pub fn small_poly() -> impl Strategy<Value = RatFunc> {
    (-2i64..=2, -2i64..=2, -2i64..=2).prop_map(|(a, b, c)| xy(&format!("{a}*x + {b}*y + {c}")))
}

/// A dual plane function `f + eps*f1` with `f` nonzero.
pub fn dual_unit(body: impl Strategy<Value = RatFunc>) -> impl Strategy<Value = DualRatFunc> {
    (body, small_poly()).prop_map(|(f, f1)| DualRatFunc::new(f, f1).unwrap())
}

/// Two dual units with coprime bodies.
pub fn admissible_dual_pair() -> impl Strategy<Value = (DualRatFunc, DualRatFunc)> {
    (coprime_plane_pair(), small_poly(), small_poly())
        .prop_map(|((f, g), f1, g1)| (DualRatFunc::new(f, f1).unwrap(), DualRatFunc::new(g, g1).unwrap()))
}
