mod common;

use common::small_rational;
use proptest::prelude::*;
use supoly::parse::{canonical, parse_expr, parse_poly};
use supoly::{Poly, RationalPoly};

fn rational_poly() -> impl Strategy<Value = RationalPoly> {
    proptest::collection::vec(small_rational(), 0..12).prop_map(Poly::new)
}

fn expression() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("X".to_string()),
        (0u32..50).prop_map(|v| v.to_string()),
        (0u32..9, 1u32..9).prop_map(|(p, q)| format!("{p}/{q}")),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) - ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn canonical_text_round_trips(p in rational_poly()) {
        let text = canonical(&p);
        prop_assert_eq!(parse_poly(&text, 64).unwrap(), p);
    }

    #[test]
    fn expressions_expand_consistently(e in expression(), x in small_rational()) {
        let p = parse_poly(&e, 64).unwrap();
        prop_assert_eq!(parse_expr(&e).unwrap().eval(&x), p.eval(&x));
        prop_assert_eq!(parse_poly(&canonical(&p), 64).unwrap(), p);
    }

    #[test]
    fn garbage_reports_an_offset_inside_the_input(s in "[X0-9+*^()/ -]{0,12}") {
        if let Err(supoly::Error::Parse { offset, .. }) = parse_poly(&s, 64) {
            prop_assert!(offset <= s.len());
        }
    }
}
