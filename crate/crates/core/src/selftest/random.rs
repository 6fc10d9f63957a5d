use rand::Rng;

use crate::poly::{Poly, RationalPoly};
use crate::scalar::{int, rat, Rational};

/// A dense or sparse integer polynomial of exact degree `degree`.
pub fn integer_poly<R: Rng>(rng: &mut R, degree: usize, bound: i64, density: f64) -> RationalPoly {
    let mut coeffs: Vec<Rational> = (0..degree)
        .map(|_| {
            if rng.gen_bool(density) {
                int(rng.gen_range(-bound..=bound))
            } else {
                int(0)
            }
        })
        .collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-bound..=bound);
    }
    coeffs.push(int(lead));
    Poly::new(coeffs)
}

pub fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound.max(1)))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = small_rational(rng, bound);
        if r != int(0) {
            return r;
        }
    }
}

/// Rational coefficients with small numerators and denominators.
pub fn rational_poly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> RationalPoly {
    let degree = rng.gen_range(0..=max_degree);
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| small_rational(rng, bound)).collect();
    coeffs.push(nonzero_rational(rng, bound));
    Poly::new(coeffs)
}

/// Inputs for the classifier: sparse integer polynomials, trinomials and
/// shifted powers, so that every route is exercised.
pub fn classifier_input<R: Rng>(rng: &mut R, max_degree: usize) -> RationalPoly {
    let n = rng.gen_range(2..=max_degree);
    match rng.gen_range(0..4) {
        0 => integer_poly(rng, n, 3, 0.5),
        1 => {
            let m = rng.gen_range(1..n);
            let a = int(rng.gen_range(-2..=2));
            let b = int(rng.gen_range(-2..=2));
            let alpha = small_rational(rng, 2);
            let x = Poly::new(vec![-alpha, int(1)]);
            &(&x.pow(n as u32) + &x.pow(m as u32).scale(&a)) + &Poly::constant(b)
        }
        2 => {
            // P' with a prescribed repeated root
            let k = rng.gen_range(1..n);
            let x = Poly::x();
            let root = Poly::new(vec![int(-rng.gen_range(-2..=2)), int(1)]);
            &(&root.pow(k as u32) * &integer_poly(rng, n - k, 2, 0.7)) + &x.scale(&int(rng.gen_range(-1..=1)))
        }
        _ => integer_poly(rng, n, 2, 0.9),
    }
}
