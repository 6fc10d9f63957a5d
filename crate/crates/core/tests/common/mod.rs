#![allow(dead_code)]

use proptest::prelude::*;
use supoly::scalar::{int, rat};
use supoly::{Poly, Rational, RationalPoly};

/// Integer coefficients in `-bound..=bound`, degree in `lo..=hi`, nonzero lead.
pub fn int_poly(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = RationalPoly> {
    (lo..=hi)
        .prop_flat_map(move |d| {
            (
                proptest::collection::vec(-bound..=bound, d),
                (1..=bound).prop_flat_map(|v| prop_oneof![Just(v), Just(-v)]),
            )
        })
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            Poly::new(c.into_iter().map(int).collect())
        })
}

/// Sparse integer polynomials: each lower coefficient is zero half the time.
pub fn sparse_poly(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = RationalPoly> {
    (lo..=hi)
        .prop_flat_map(move |d| {
            (
                proptest::collection::vec(prop_oneof![Just(0i64), -bound..=bound], d),
                1..=bound,
            )
        })
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            Poly::from_i64s(&c)
        })
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != int(0))
}
