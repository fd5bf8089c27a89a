//! Arithmetic in a simple extension `Q[z]/(m(z))` with `m` monic irreducible,
//! and univariate polynomials over it.

use num_traits::{One, Zero};

use super::upoly::UPoly;
use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: UPoly,
}

/// Polynomial over a number field, low degree first, no trailing zeros.
pub type NfPoly = Vec<UPoly>;

impl NumberField {
    /// `modulus` must be irreducible; it is made monic here.
    pub fn new(modulus: &UPoly) -> Self {
        assert!(modulus.deg() >= 1, "extension modulus must be nonconstant");
        NumberField { modulus: modulus.monic() }
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn reduce(&self, a: &UPoly) -> UPoly {
        a.rem(&self.modulus)
    }

    pub fn from_rational(&self, c: Rational) -> UPoly {
        UPoly::constant(c)
    }

    /// The generator `z`.
    pub fn generator(&self) -> UPoly {
        self.reduce(&UPoly::monomial(Rational::one(), 1))
    }

    pub fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.add(b)
    }

    pub fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.sub(b)
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&a.mul(b))
    }

    pub fn pow(&self, a: &UPoly, mut e: u32) -> UPoly {
        let mut base = self.reduce(a);
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: &UPoly) -> Option<UPoly> {
        let a = self.reduce(a);
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = UPoly::ext_gcd(&a, &self.modulus);
        (g.deg() == 0).then(|| self.reduce(&s))
    }

    pub fn div(&self, a: &UPoly, b: &UPoly) -> Option<UPoly> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// Field norm down to Q: the resultant with the monic modulus.
    pub fn norm(&self, a: &UPoly) -> Rational {
        let a = self.reduce(a);
        if a.is_zero() {
            return Rational::zero();
        }
        // Res(m, a) = prod a(roots of m) for monic m
        UPoly::resultant(&self.modulus, &a)
    }

    /// Map a rational-coefficient polynomial in `z` into the field.
    pub fn embed(&self, a: &UPoly) -> UPoly {
        self.reduce(a)
    }

    pub fn poly_trim(p: &mut NfPoly) {
        while p.last().is_some_and(UPoly::is_zero) {
            p.pop();
        }
    }

    pub fn poly_rem(&self, a: &NfPoly, b: &NfPoly) -> NfPoly {
        let mut r = a.clone();
        Self::poly_trim(&mut r);
        let db = b.len() - 1;
        let inv = self.inv(&b[db]).expect("nonzero leading coefficient");
        while r.len() > db {
            let dr = r.len() - 1;
            let c = self.mul(&r[dr], &inv);
            for (j, bc) in b.iter().enumerate() {
                let t = self.mul(&c, bc);
                r[dr - db + j] = r[dr - db + j].sub(&t);
            }
            Self::poly_trim(&mut r);
        }
        r
    }

    /// Monic gcd of two polynomials over the field.
    pub fn poly_gcd(&self, a: &NfPoly, b: &NfPoly) -> NfPoly {
        let mut a = a.clone();
        let mut b = b.clone();
        Self::poly_trim(&mut a);
        Self::poly_trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    pub fn poly_monic(&self, a: &NfPoly) -> NfPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) => {
                let inv = self.inv(lc).expect("nonzero");
                a.iter().map(|c| self.mul(c, &inv)).collect()
            }
        }
    }

    pub fn poly_mul(&self, a: &NfPoly, b: &NfPoly) -> NfPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![UPoly::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&self.mul(x, y));
            }
        }
        Self::poly_trim(&mut out);
        out
    }
}
