mod common;

use gersten_core::arith::dual::{dual_invert, DualRatFunc};
use gersten_core::arith::factor::factor;
use gersten_core::arith::gcd::{poly_gcd, squarefree_decomposition};
use gersten_core::arith::poly::{Monomial, MultiPoly, Ring, Var};
use gersten_core::arith::ratfunc::RatFunc;
use gersten_core::arith::resultant::resultant;
use gersten_core::arith::rat;
use gersten_core::Context;
use proptest::prelude::*;

use common::{dual_unit, plane_func};

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -4i64..=4), 0..=max_terms).prop_map(|terms| {
        MultiPoly::from_terms(Ring::XY, terms.into_iter().map(|(i, j, c)| (Monomial([i, j]), rat(c))))
    })
}

fn nonzero_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    poly(max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(2, 4), nonzero_poly(2, 3)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Products of a few small factors, so that factorizations are nontrivial.
fn composite() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(nonzero_poly(1, 3), 1..=3)
        .prop_map(|fs| fs.iter().fold(MultiPoly::one(Ring::XY), |acc, f| &acc * f))
        .prop_filter("nonconstant", |p| !p.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(ai) = a.inv() {
            prop_assert!((&a * &ai).is_one());
        }
    }

    #[test]
    fn gcd_divides_with_coprime_cofactors(a in nonzero_poly(3, 4), b in nonzero_poly(3, 4), c in nonzero_poly(1, 3)) {
        let (a, b) = (&a * &c, &b * &c);
        let g = poly_gcd(&a, &b);
        let ca = a.div_exact(&g);
        let cb = b.div_exact(&g);
        prop_assert!(ca.is_some() && cb.is_some());
        prop_assert!(c.divides(&g));
        prop_assert!(poly_gcd(&ca.unwrap(), &cb.unwrap()).is_constant());
    }

    #[test]
    fn squarefree_parts_multiply_back(p in composite()) {
        let parts = squarefree_decomposition(&p);
        let prod = parts.iter().fold(MultiPoly::one(Ring::XY), |acc, (q, k)| &acc * &q.pow(*k));
        prop_assert_eq!(prod.primitive_part(), p.primitive_part());
        for (i, (q, _)) in parts.iter().enumerate() {
            let g = poly_gcd(&poly_gcd(q, &q.derivative(Var::X)), &q.derivative(Var::Y));
            prop_assert!(g.is_constant());
            for (r, _) in &parts[i + 1..] {
                prop_assert!(poly_gcd(q, r).is_constant());
            }
        }
    }

    #[test]
    fn factorization_round_trip(p in composite()) {
        let ctx = Context::default();
        let fz = factor(&p, &ctx).unwrap();
        prop_assert_eq!(fz.expand(Ring::XY), p);
        for f in &fz.factors {
            prop_assert!(factor(&f.poly, &ctx).unwrap().is_irreducible());
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in nonzero_poly(2, 3), b in nonzero_poly(2, 3), c in poly(1, 2)) {
        let (a, b) = (&a * &(&c + &MultiPoly::var(Var::Y)), &b * &c);
        prop_assume!(a.involves(Var::Y) && b.involves(Var::Y));
        let r = resultant(&a, &b, Var::Y);
        prop_assert_eq!(r.is_zero(), poly_gcd(&a, &b).degree_in(Var::Y) > 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_inverse(u in dual_unit(plane_func())) {
        let v = dual_invert(&u).unwrap();
        prop_assert_eq!(&u * &v, DualRatFunc::one(Ring::XY));
    }
}

#[test]
fn dual_zero_divisor_has_no_inverse() {
    assert!(dual_invert(&DualRatFunc::eps(Ring::XY)).is_err());
}
