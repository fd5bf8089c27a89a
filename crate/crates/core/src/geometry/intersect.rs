use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cycle::ClosedPointCycle;
use super::point::canonical_point;
use super::residue::ResidueFunc;
use crate::arith::factor::{factor, factor_univariate, shear_x};
use crate::arith::numfield::{NfPoly, NumberField};
use crate::arith::poly::{MultiPoly, Var};
use crate::arith::resultant::resultant;
use crate::arith::upoly::UPoly;
use crate::arith::{rat, Rational};
use crate::context::Context;
use crate::error::{Error, Result};

const SHEAR_ATTEMPTS: usize = 12;
const SHEAR_RANGE: i64 = 9;
const SECOND_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

fn swap_xy(p: &MultiPoly) -> MultiPoly {
    p.compose_xy(&MultiPoly::var(Var::Y), &MultiPoly::var(Var::X))
}

/// Fibre of `p` over the point `alpha` of the x-line, as a polynomial in `y` over `field`.
fn fibre(field: &NumberField, p: &MultiPoly) -> NfPoly {
    let mut out: NfPoly = p
        .coeffs_in(Var::Y)
        .iter()
        .map(|c| field.reduce(&c.to_upoly(Var::X).expect("coefficients in x only")))
        .collect();
    NumberField::poly_trim(&mut out);
    out
}

/// The root of `g` when `g = (y - phi)^k` for a single `phi`.
fn single_root(field: &NumberField, g: &NfPoly) -> Option<UPoly> {
    let k = g.len() - 1;
    if k == 0 {
        return None;
    }
    let phi = field.mul(&g[k - 1], &UPoly::constant(-Rational::from_integer((k as i64).into()).recip()));
    let lin: NfPoly = vec![phi.neg(), UPoly::one()];
    let mut pow: NfPoly = vec![UPoly::one()];
    for _ in 0..k {
        pow = field.poly_mul(&pow, &lin);
    }
    (pow == *g).then_some(phi)
}

/// Intersection cycle of the coprime curves `p` and `q`, projecting along a random
/// shear onto the x-axis (or the y-axis when `swapped`).
fn project(p: &MultiPoly, q: &MultiPoly, swapped: bool, rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<ClosedPointCycle>> {
    let (p, q) = if swapped { (swap_xy(p), swap_xy(q)) } else { (p.clone(), q.clone()) };
    let top = p.top_form();
    'shear: for _ in 0..SHEAR_ATTEMPTS {
        let c = rat(rng.gen_range(-SHEAR_RANGE..=SHEAR_RANGE));
        if top.eval(&[c.clone(), rat(1)]).is_zero() {
            continue;
        }
        let ps = shear_x(&p, &c);
        let qs = shear_x(&q, &c);
        let res = resultant(&ps, &qs, Var::Y);
        if res.is_zero() {
            return Err(Error::InvalidArgument(format!("{p} and {q} share a component")));
        }
        let mut cycle = ClosedPointCycle::zero();
        if res.is_constant() {
            return Ok(Some(cycle));
        }
        for f in factor_univariate(&res, ctx)?.factors {
            let field = NumberField::new(&f.poly.to_upoly(Var::X).expect("resultant lives on the x-line"));
            let g = field.poly_gcd(&fibre(&field, &ps), &fibre(&field, &qs));
            let Some(phi) = single_root(&field, &g) else {
                continue 'shear;
            };
            // undo the shear: x = s + c*y
            let alpha = field.generator();
            let px = field.add(&alpha, &field.mul(&UPoly::constant(c.clone()), &phi));
            let (px, py) = if swapped { (phi, px) } else { (px, phi) };
            cycle.add_term(canonical_point(&field, &px, &py), f.multiplicity as i64);
        }
        return Ok(Some(cycle));
    }
    Ok(None)
}

/// The intersection cycle `[V(p) . V(q)]` of two plane curves without common component.
/// Two independent projections must agree.
pub fn intersection_cycle(p: &MultiPoly, q: &MultiPoly, ctx: &Context) -> Result<ClosedPointCycle> {
    if q.is_constant() || p.is_constant() {
        return Ok(ClosedPointCycle::zero());
    }
    let disagree = || Error::ProjectionDisagreement { curve: p.to_string(), other: q.to_string() };
    let mut rng_a = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut rng_b = ChaCha8Rng::seed_from_u64(ctx.seed ^ SECOND_STREAM);
    let a = project(p, q, false, &mut rng_a, ctx)?.ok_or_else(disagree)?;
    let b = project(p, q, true, &mut rng_b, ctx)?.ok_or_else(disagree)?;
    if a != b {
        return Err(disagree());
    }
    Ok(a)
}

/// Zeros minus poles of a function on a plane curve, with intersection multiplicities.
pub fn div_on_curve(g: &ResidueFunc, ctx: &Context) -> Result<ClosedPointCycle> {
    let p = g.curve().poly().ok_or(Error::RingMismatch)?;
    let mut total = ClosedPointCycle::zero();
    for (part, sign) in [(g.rep().num(), 1), (g.rep().den(), -1)] {
        if part.is_constant() {
            continue;
        }
        for f in factor(part, ctx)?.factors {
            let c = intersection_cycle(p, &f.poly, ctx)?;
            total = total.add(&c.scale(sign * f.multiplicity as i64));
        }
    }
    Ok(total)
}
