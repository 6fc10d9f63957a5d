use num_traits::Zero;

use super::{classify_with_cap, corollary_classify, witness_search, Answer, Property, SearchMode, Verdict};
use crate::error::Result;
use crate::poly::{RationalPoly, DEFAULT_DEGREE_CAP};
use crate::scalar::{format_rational, Rational};

/// `P = lead * ((X - alpha)^n + a (X - alpha)^m + b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorollaryShape {
    pub alpha: Rational,
    pub n: usize,
    pub m: usize,
    pub a: Rational,
    pub b: Rational,
}

/// Detects the trinomial family. The centre is either the normalizing
/// shift (when `m <= n - 2`) or a rational critical point (when `m = n - 1`).
/// With `a = 0` the exponent `m` is reported as 1.
pub fn recognise_corollary_shape(p: &RationalPoly) -> Option<CorollaryShape> {
    let n = p.degree()?;
    if n < 2 {
        return None;
    }
    let monic = p.monic();
    let mut centres = vec![-monic.coeff(n - 1) / Rational::from_integer((n as i64).into())];
    centres.extend(p.derivative().rational_roots());
    centres.into_iter().find_map(|alpha| {
        let q = monic.taylor_shift(&alpha);
        let middle: Vec<usize> = q.support().into_iter().filter(|&k| k != 0 && k != n).collect();
        let m = match middle.as_slice() {
            [] => 1,
            [m] => *m,
            _ => return None,
        };
        Some(CorollaryShape {
            alpha,
            n,
            m,
            a: q.coeff(m),
            b: q.coeff(0),
        })
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport {
    pub verdict: Verdict,
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AuditCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Cross-checks the verdict against the affine-witness oracle and, for the
/// trinomial family, against the closed form.
pub fn consistency_audit(p: &RationalPoly) -> Result<AuditReport> {
    consistency_audit_with_cap(p, DEFAULT_DEGREE_CAP)
}

pub fn consistency_audit_with_cap(p: &RationalPoly, cap: usize) -> Result<AuditReport> {
    let verdict = classify_with_cap(p, cap)?;
    let n = p.degree().expect("classified");
    let c_one = witness_search(p, SearchMode::CEqualsOne, n);
    let any_c = witness_search(p, SearchMode::AnyC, n);
    let mut checks = Vec::new();
    let mut check = |name: String, passed: bool, detail: String| checks.push(AuditCheck { name, passed, detail });

    for prop in Property::ALL {
        let oracle = if prop.is_strong() { &any_c } else { &c_one };
        let found = oracle.as_ref().map_or("none".to_string(), |w| w.to_string());
        match verdict.answer(prop) {
            Answer::No => {
                let justified = verdict.justification(prop);
                let cited = justified.is_some_and(|w| w.is_exception() && w.verify(p));
                let replayed = justified.is_some_and(|w| w.verify(p));
                check(
                    format!("{} no is confirmed", prop.name()),
                    replayed && (cited || oracle.is_some()),
                    format!(
                        "justification: {}; oracle: {found}",
                        justified.map_or("missing".to_string(), |w| w.to_string())
                    ),
                );
            }
            Answer::Yes => check(format!("{} yes has no witness", prop.name()), oracle.is_none(), format!("oracle: {found}")),
            Answer::OutOfScope => {}
        }
    }
    check(
        "implication lattice".into(),
        verdict.lattice_violations().is_empty(),
        verdict.lattice_violations().join("; "),
    );
    check("routes agree".into(), verdict.conflicts.is_empty(), verdict.conflicts.join("; "));

    if let Some(shape) = recognise_corollary_shape(p) {
        let row = corollary_classify(&shape.alpha, shape.n, shape.m, &shape.a, &shape.b)?;
        let expected = row.as_array().map(|b| if b { Answer::Yes } else { Answer::No });
        check(
            "trinomial closed form agrees".into(),
            expected == verdict.answers(),
            format!(
                "alpha = {}, n = {}, m = {}, a = {}, b = {}: expected {:?}, classified {:?}",
                format_rational(&shape.alpha),
                shape.n,
                shape.m,
                format_rational(&shape.a),
                format_rational(&shape.b),
                expected,
                verdict.answers()
            ),
        );
        debug_assert!(shape.n == n && (shape.a.is_zero() || shape.m < n));
    }
    Ok(AuditReport { verdict, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::scalar::int;

    fn q(c: &[i64]) -> RationalPoly {
        Poly::from_i64s(c)
    }

    #[test]
    fn recognises_trinomials() {
        let s = recognise_corollary_shape(&q(&[1, 1, 0, 0, 1])).unwrap();
        assert_eq!((s.n, s.m, s.a, s.b), (4, 1, int(1), int(1)));
        // (X - 1)^4 + 2 (X - 1)^3 + 3, m = n - 1
        let p = &(&q(&[-1, 1]).pow(4) + &q(&[-1, 1]).pow(3).scale(&int(2))) + &q(&[3]);
        let s = recognise_corollary_shape(&p).unwrap();
        assert_eq!((s.alpha, s.m, s.a, s.b), (int(1), 3, int(2), int(3)));
        assert!(recognise_corollary_shape(&q(&[1, 1, 1, 0, 1])).is_none());
    }

    #[test]
    fn audits_pass() {
        for c in [
            vec![1, 1, 0, 0, 1],
            vec![0, -4, 0, 0, 1],
            vec![1, 0, 0, 1, 0, 1],
            vec![1, 0, 1, 0, 1],
            vec![0, 1, 0, 1],
        ] {
            let r = consistency_audit(&q(&c)).unwrap();
            assert!(r.passed(), "{c:?}: {:?}", r.failures());
        }
    }

    #[test]
    fn quintic_grid() {
        for a in [-2, -1, 1, 2] {
            for b in [-2, -1, 1, 2] {
                let r = consistency_audit(&q(&[b, 0, 0, a, 0, 1])).unwrap();
                assert!(r.passed(), "a = {a}, b = {b}: {:?}", r.failures());
                assert_eq!(r.verdict.answers(), [Answer::Yes; 4]);
            }
        }
    }
}
