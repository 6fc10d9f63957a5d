mod common;

use common::{int_poly, nonzero_rational, small_rational, sparse_poly};
use num_traits::Zero;
use proptest::prelude::*;
use supoly::classifier::{witness_search, SearchMode};
use supoly::criteria::{
    affine_symmetry, critical_structure, index_data, linear_factor_scan, shape_gap, CurveKind, LinearFactorScan,
    Rigidity,
};
use supoly::curve::homogenized;
use supoly::poly::cyclotomic::{cyclotomic, reduce_coefficients};
use supoly::poly::Var;
use supoly::scalar::int;
use supoly::{Poly, RationalPoly};

/// `X^n` plus terms of degree at most `n - 3`, biased towards exponents in
/// one residue class so that rotations occur.
fn gap_shaped() -> impl Strategy<Value = RationalPoly> {
    (3usize..=10, 1usize..=4, proptest::collection::vec((-3i64..=3, any::<bool>()), 8)).prop_map(|(n, r, coeffs)| {
        let mut c = vec![0i64; n + 1];
        c[n] = 1;
        for (i, (v, keep)) in coeffs.into_iter().enumerate().take(n - 2) {
            if keep || (n - i) % r == 0 {
                c[i] = v;
            }
        }
        Poly::from_i64s(&c)
    })
}

proptest! {
    #[test]
    fn multiplicities_sum_to_degree_of_derivative(p in int_poly(2, 9, 4)) {
        let cs = critical_structure(&p);
        prop_assert_eq!(cs.multiplicity_sum(), cs.n - 1);
        prop_assert_eq!(cs.l, cs.multiplicities.len());
    }

    #[test]
    fn separation_is_affine_invariant(p in sparse_poly(2, 8, 3), s in small_rational(), lambda in nonzero_rational()) {
        let base = critical_structure(&p);
        for q in [p.taylor_shift(&s), p.scale_variable(&lambda)] {
            let other = critical_structure(&q);
            prop_assert_eq!(other.separated, base.separated);
            prop_assert_eq!(&other.multiplicities, &base.multiplicities);
        }
    }

    #[test]
    fn rigid_radicals_have_no_affine_witness(p in sparse_poly(2, 7, 3)) {
        let rad = p.radical();
        let n = rad.degree().unwrap();
        match affine_symmetry(&p) {
            Rigidity::Rigid => prop_assert_eq!(witness_search(&rad, SearchMode::AnyC, n), None),
            Rigidity::Symmetric(s) => prop_assert!(s.verify(&rad)),
            Rigidity::Degenerate => prop_assert!(n <= 1),
        }
    }

    #[test]
    fn linear_factors_substitute_to_zero(p in gap_shaped()) {
        for kind in [CurveKind::F, CurveKind::Fc] {
            let LinearFactorScan::Factors(found) = linear_factor_scan(&p, kind) else { continue };
            for f in found {
                // X = bY, Z = 1 in the homogeneous forms, over Q[b] / Phi_r(b)
                let modulus = cyclotomic(f.order);
                let b: RationalPoly = Poly::x();
                let embed = |c: &supoly::Rational| Poly::constant(Poly::constant(c.clone()));
                let x = Poly::new(vec![Poly::zero(), b.clone()]);
                let y: Poly<RationalPoly> = Poly::x();
                let one: Poly<RationalPoly> = Poly::constant(Poly::constant(int(1)));
                let px = homogenized(&p, Var::X).eval_in(&x, &y, &one, embed);
                let py = homogenized(&p, Var::Y).eval_in(&x, &y, &one, embed);
                let c = b.pow(f.c_exponent as u32);
                let residual = &px - &py.scale(&c);
                prop_assert!(reduce_coefficients(&residual, &modulus).is_zero(), "{} {:?} {:?}", p, kind, f);
                if kind == CurveKind::F {
                    prop_assert_eq!(f.c_exponent % f.order, 0);
                }
            }
        }
    }

    #[test]
    fn wide_gap_with_coprime_shifts_has_three_terms(p in gap_shaped()) {
        let idx = index_data(&p);
        if shape_gap(&p).is_some_and(|k| k >= 3) && idx.gcd_j == 1 {
            prop_assert!(idx.i_set.len() >= 3, "{} {:?}", p, idx);
        }
    }
}
