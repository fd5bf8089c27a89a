//! Fixtures shared by the benchmarks.

use gersten_core::{parse_expr, parse_ratfunc, DualMilnorSymbol, MilnorSymbol, PrimeDivisor, RatFunc, Ring};

pub fn line(src: &str) -> RatFunc {
    parse_ratfunc(src, Ring::T).expect("fixture parses")
}

pub fn plane(src: &str) -> RatFunc {
    parse_ratfunc(src, Ring::XY).expect("fixture parses")
}

/// `{f, 1 - f}` for a degree-four function on the line.
pub fn steinberg_on_the_line() -> MilnorSymbol {
    let f = line("3*(t - 1)*(t + 2)/((t - 3)*(t + 4))");
    let g = &RatFunc::one(Ring::T) - &f;
    MilnorSymbol::single(f, g).expect("units")
}

/// A coprime pair on the plane meeting in several rational points.
pub fn plane_pair() -> MilnorSymbol {
    MilnorSymbol::single(plane("(y - x^2)*(x + y - 1)/(x - 1)"), plane("(x - y)/((y + 2)*(x - y^2 + 1))")).expect("units")
}

/// An admissible dual symbol with coprime body loci.
pub fn dual_pair() -> DualMilnorSymbol {
    let u = parse_expr("(y - x^2)/(x - 1) + eps*(x + y)", Ring::XY).expect("fixture parses");
    let v = parse_expr("(x - y)*(y + 2) + eps*(2*x - 1)", Ring::XY).expect("fixture parses");
    DualMilnorSymbol::single(u, v).expect("units")
}

/// The parabola with a function on it, for divisors on a curve.
pub fn curve_and_function() -> (PrimeDivisor, RatFunc) {
    let p = plane("y - x^2");
    let curve = PrimeDivisor::new(p.num(), &Default::default()).expect("irreducible");
    (curve, plane("(x - y)*(x + y - 1)/(y + 2)"))
}

/// Two polynomials sharing a factor with non-constant leading coefficient.
pub fn gcd_pair() -> (RatFunc, RatFunc) {
    let g = "(x*y^2 + y - x^3 + 2)";
    (plane(&format!("{g}*(x^2*y - y^3 + 1)")), plane(&format!("1/({g}*(x*y + x - 3*y^2))")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(steinberg_on_the_line().len(), 1);
        assert_eq!(plane_pair().len(), 1);
        assert_eq!(dual_pair().len(), 1);
        let (curve, _) = curve_and_function();
        assert_eq!(curve.to_string(), "V(x^2 - y)");
        let (a, b) = gcd_pair();
        assert!(!(&a * &b).is_polynomial());
    }
}
