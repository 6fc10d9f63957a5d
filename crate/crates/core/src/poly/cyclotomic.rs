//! Cyclotomic polynomials and arithmetic modulo them.

use num_traits::One;

use super::{Poly, RationalPoly};
use crate::scalar::Rational;

/// The `r`-th cyclotomic polynomial, `X^r - 1` divided by every `Phi_d` with
/// `d` a proper divisor of `r`.
pub fn cyclotomic(r: usize) -> RationalPoly {
    assert!(r >= 1);
    let mut p = Poly::monomial(Rational::one(), r) - Poly::constant(Rational::one());
    for d in 1..r {
        if r.is_multiple_of(d) {
            p = p.exact_divide(&cyclotomic(d)).expect("Phi_d divides X^r - 1");
        }
    }
    p
}

/// Euler's totient, equal to `deg Phi_r`.
pub fn totient(r: usize) -> usize {
    (1..=r).filter(|&k| num_integer::gcd(k, r) == 1).count()
}

/// Reduces every coefficient of a polynomial over `Q[b]` modulo `modulus`.
pub fn reduce_coefficients(p: &Poly<RationalPoly>, modulus: &RationalPoly) -> Poly<RationalPoly> {
    Poly::new(p.coeffs().iter().map(|c| c.rem(modulus)).collect())
}

/// `true` when `p(b) = 0` for a primitive `r`-th root of unity `b`.
pub fn vanishes_at_primitive_root(p: &RationalPoly, r: usize) -> bool {
    p.rem(&cyclotomic(r)).is_zero()
}

/// Powers `b^0, ..., b^(count-1)` reduced modulo `modulus`.
pub fn reduced_powers(b: &RationalPoly, count: usize, modulus: &RationalPoly) -> Vec<RationalPoly> {
    let mut out = Vec::with_capacity(count);
    let mut acc = Poly::constant(Rational::one());
    for _ in 0..count {
        out.push(acc.clone());
        acc = (&acc * b).rem(modulus);
    }
    out
}
