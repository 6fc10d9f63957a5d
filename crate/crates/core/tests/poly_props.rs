mod common;

use common::{int_poly, small_rational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use supoly::poly::{gcd, resultant, squarefree_decomposition, HomogPoly};
use supoly::RationalPoly;

proptest! {
    #[test]
    fn resultant_vanishes_iff_common_factor(p in int_poly(1, 8, 4), q in int_poly(1, 8, 4)) {
        let g = gcd(&p, &q);
        prop_assert_eq!(resultant(&p, &q).is_zero(), g.degree().unwrap() >= 1);
    }

    #[test]
    fn resultant_detects_planted_factors(p in int_poly(1, 5, 4), q in int_poly(1, 5, 4), r in int_poly(1, 3, 3)) {
        prop_assert!(resultant(&(&p * &r), &(&q * &r)).is_zero());
    }

    #[test]
    fn squarefree_reassembles(p in int_poly(1, 4, 3), q in int_poly(1, 3, 3)) {
        let f = &(&p * &q.pow(2)) * &q;
        let parts = squarefree_decomposition(&f);
        let lead = f.leading().unwrap().clone();
        let product = parts.iter().fold(RationalPoly::one(), |acc, s| &acc * &s.factor.pow(s.multiplicity as u32));
        prop_assert_eq!(product.scale(&lead), f);
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                prop_assert_eq!(gcd(&a.factor, &b.factor).degree(), Some(0));
            }
        }
    }

    #[test]
    fn taylor_shift_inverts(p in int_poly(0, 10, 9), s in small_rational()) {
        prop_assert_eq!(p.taylor_shift(&s).taylor_shift(&-s), p);
    }

    #[test]
    fn homogenize_round_trips(p in int_poly(0, 8, 5), extra in 0u32..4) {
        let d = p.degree().unwrap() as u32 + extra;
        let h = HomogPoly::from_univariate(&p, supoly::poly::Var::X, d).unwrap();
        let back = h.dehomogenize();
        let again = HomogPoly::homogenize(&back, d).unwrap();
        prop_assert_eq!(again, h);
        for k in 0..=p.degree().unwrap() {
            prop_assert_eq!(back.coeff(k).coeff(0), p.coeff(k));
        }
        let n = p.degree().unwrap() as u32;
        if n >= 1 {
            prop_assert!(HomogPoly::from_univariate(&p, supoly::poly::Var::X, n - 1).is_err());
        }
    }

    #[test]
    fn degrees_add(p in int_poly(0, 8, 5), q in int_poly(0, 8, 5)) {
        prop_assert_eq!((&p * &q).degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
    }
}
