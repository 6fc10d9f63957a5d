use supoly::classifier::{classify, consistency_audit, corollary_classify, Answer};
use supoly::poly::{Poly, RationalPoly};
use supoly::scalar::int;

fn trinomial(n: usize, m: usize, a: i64, b: i64) -> RationalPoly {
    &(&Poly::monomial(int(1), n) + &Poly::monomial(int(a), m)) + &Poly::constant(int(b))
}

#[test]
fn trinomial_grid_matches_closed_form() {
    let mut mismatches = Vec::new();
    for n in 2..=10 {
        for m in 1..n {
            for a in -2..=2 {
                for b in -2..=2 {
                    let p = trinomial(n, m, a, b);
                    let v = classify(&p).unwrap();
                    let row = corollary_classify(&int(0), n, m, &int(a), &int(b)).unwrap();
                    let expected = row.as_array().map(|y| if y { Answer::Yes } else { Answer::No });
                    if v.answers() != expected || !v.conflicts.is_empty() {
                        mismatches.push(format!("{p}: {:?} vs {:?} {:?}", v.answers(), expected, v.conflicts));
                    }
                }
            }
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn trinomial_grid_audits() {
    let mut failures = Vec::new();
    for n in 2..=8 {
        for m in 1..n {
            for (a, b) in [(1, 1), (1, 0), (-2, 1), (2, -2), (0, 1)] {
                let p = trinomial(n, m, a, b);
                let r = consistency_audit(&p).unwrap();
                if !r.passed() {
                    failures.push(format!("{p}: {:?}", r.failures()));
                }
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
