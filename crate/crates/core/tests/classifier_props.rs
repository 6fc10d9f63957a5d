mod common;

use common::{nonzero_rational, small_rational, sparse_poly};
use proptest::prelude::*;
use supoly::classifier::{classify, witness_search, Answer, Property, SearchMode};
use supoly::criteria::{critical_structure, normalize, shape_gap};
use supoly::Poly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn lattice_holds(p in sparse_poly(2, 8, 3)) {
        let v = classify(&p).unwrap();
        prop_assert!(v.lattice_violations().is_empty(), "{}: {:?}", p, v.lattice_violations());
        prop_assert!(v.conflicts.is_empty(), "{}: {:?}", p, v.conflicts);
        for prop in Property::ALL {
            if v.answer(prop) == Answer::No {
                prop_assert!(v.justification(prop).is_some_and(|w| w.verify(&p)), "{} {}", p, prop.name());
            }
        }
    }

    #[test]
    fn invariant_under_shift_and_scale(p in sparse_poly(2, 7, 3), s in small_rational(), lambda in nonzero_rational()) {
        let base = classify(&p).unwrap().answers();
        prop_assert_eq!(classify(&p.taylor_shift(&s)).unwrap().answers(), base);
        prop_assert_eq!(classify(&p.scale(&lambda)).unwrap().answers(), base);
    }

    /// With a wide gap and separation both routes run; they must agree.
    #[test]
    fn gap_route_agrees_with_separated_route(
        n in 4usize..=9,
        lower in proptest::collection::vec(-3i64..=3, 7),
        s in small_rational(),
    ) {
        let mut c = vec![0i64; n + 1];
        c[n] = 1;
        for (i, v) in lower.into_iter().enumerate().take(n - 2) {
            c[i] = v;
        }
        let p = Poly::from_i64s(&c).taylor_shift(&s);
        let gap = shape_gap(&normalize(&p).p0).unwrap_or(0);
        let cs = critical_structure(&p);
        prop_assume!(gap >= 3 && cs.separated && cs.l >= 2);
        let v = classify(&p).unwrap();
        let rules: Vec<&str> = v.rule_trace.iter().map(|r| r.rule.as_str()).collect();
        prop_assert!(rules.contains(&"coefficient-gap") && rules.contains(&"separated-multiplicities"));
        prop_assert!(v.conflicts.is_empty(), "{}: {:?}", p, v.conflicts);
    }

    #[test]
    fn oracle_witnesses_replay(p in sparse_poly(2, 8, 3)) {
        let n = p.degree().unwrap();
        for mode in [SearchMode::CEqualsOne, SearchMode::AnyC] {
            if let Some(w) = witness_search(&p, mode, n) {
                prop_assert!(w.verify(&p), "{}: {}", p, w);
                if mode == SearchMode::CEqualsOne {
                    prop_assert!(w.has_c_one());
                }
            }
        }
    }
}
