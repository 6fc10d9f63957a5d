//! Acceptance checks shared by the `acceptance` test target and the
//! `selftest` subcommand. Each check reports pass/fail with its tolerance.

pub mod numeric;
pub mod random;
mod suites;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classifier::{classify, corollary_classify, witness_search, Answer, Property, SearchMode, Witness};
use crate::criteria::{critical_structure, exceptional_flags, index_data, linear_factor_scan, CurveKind, LinearFactorScan};
use crate::curve::{
    build_f, build_fc, derivative_form, genus_ordinary, homogenized, mixed_fermat_forms, singular_census,
    verify_partial_identities,
};
use crate::order::{configurations_up_to, hyperbolicity_verdict, statement_verdict};
use crate::poly::{HomogPoly, Poly, RationalPoly, Var};
use crate::scalar::{int, rat, Rational};

pub use suites::{property_suites, SuiteResult};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub tolerance: String,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {}: {} [{}] {} ({}; {} ms)",
            self.id,
            self.name,
            self.tolerance,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.elapsed_ms
        )
    }
}

fn timed(id: u8, name: &'static str, tolerance: String, f: impl FnOnce() -> (bool, String)) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = f();
    CriterionResult {
        id,
        name,
        passed,
        tolerance,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

pub fn trinomial(n: usize, m: usize, a: i64, b: i64) -> RationalPoly {
    &(&Poly::monomial(int(1), n) + &Poly::monomial(int(a), m)) + &Poly::constant(int(b))
}

fn grid() -> impl Iterator<Item = (usize, usize, i64, i64)> {
    (2..=10).flat_map(|n| (1..n).flat_map(move |m| (-2..=2).flat_map(move |a| (-2..=2).map(move |b| (n, m, a, b)))))
}

fn to_answers(row: [bool; 4]) -> [Answer; 4] {
    row.map(|y| if y { Answer::Yes } else { Answer::No })
}

/// Trinomial grid against the closed form, with pinned rows.
pub fn criterion_1() -> CriterionResult {
    timed(1, "trinomial grid matches the closed form", "0 mismatches, < 30 s".into(), || {
        let start = Instant::now();
        let mut cases = 0;
        let mut bad = Vec::new();
        for (n, m, a, b) in grid() {
            cases += 1;
            let p = trinomial(n, m, a, b);
            let v = match classify(&p) {
                Ok(v) => v,
                Err(e) => {
                    bad.push(format!("{p}: {e}"));
                    continue;
                }
            };
            let row = corollary_classify(&int(0), n, m, &int(a), &int(b)).expect("1 <= m < n");
            if v.answers() != to_answers(row.as_array()) || !v.conflicts.is_empty() {
                bad.push(format!("{p}: {:?} vs {:?}", v.answers(), row.as_array()));
            }
            // b = 0 with a uniqueness polynomial: strong uniqueness fails by a scaling with c != 1
            if b == 0 && row.up_rational {
                let ok = v
                    .justification(Property::SupRational)
                    .is_some_and(|w| w.kind() == "scaling-with-c" && w.verify(&p));
                if !ok {
                    bad.push(format!("{p}: no verified scaling-with-c witness"));
                }
            }
        }
        let pins = [
            ((4, 1, 1, 1), [Answer::Yes, Answer::Yes, Answer::No, Answer::No]),
            ((5, 2, 1, 1), [Answer::Yes; 4]),
            ((6, 4, 1, 1), [Answer::No; 4]),
        ];
        for ((n, m, a, b), expected) in pins {
            let got = classify(&trinomial(n, m, a, b)).map(|v| v.answers());
            if got.as_ref().ok() != Some(&expected) {
                bad.push(format!("pinned ({n},{m},{a},{b}): {got:?}"));
            }
        }
        let secs = start.elapsed().as_secs_f64();
        if secs >= 30.0 {
            bad.push(format!("runtime {secs:.1} s"));
        }
        (bad.is_empty(), summary(cases, &bad))
    })
}

fn summary(cases: usize, bad: &[String]) -> String {
    let mut s = format!("{cases} cases, {} failures", bad.len());
    for b in bad.iter().take(5) {
        s.push_str("; ");
        s.push_str(b);
    }
    s
}

/// The affine-witness oracle agrees with every verdict on the grid.
pub fn criterion_2() -> CriterionResult {
    timed(2, "witness oracle agrees on the grid", "exact replay".into(), || {
        let mut cases = 0;
        let mut bad = Vec::new();
        for (n, m, a, b) in grid() {
            cases += 1;
            let p = trinomial(n, m, a, b);
            let Ok(v) = classify(&p) else { continue };
            let c_one = witness_search(&p, SearchMode::CEqualsOne, n);
            let any_c = witness_search(&p, SearchMode::AnyC, n);
            for w in c_one.iter().chain(any_c.iter()) {
                if !w.verify(&p) {
                    bad.push(format!("{p}: oracle witness {w} does not replay"));
                }
            }
            if c_one.as_ref().is_some_and(|w| !w.has_c_one()) {
                bad.push(format!("{p}: c = 1 search returned c != 1"));
            }
            for prop in Property::ALL {
                let found = if prop.is_strong() { &any_c } else { &c_one };
                let exception = v.justification(prop).is_some_and(Witness::is_exception);
                match v.answer(prop) {
                    Answer::No if !exception && found.is_none() => {
                        bad.push(format!("{p}: {} no but the oracle finds nothing", prop.name()))
                    }
                    Answer::Yes if found.is_some() => bad.push(format!(
                        "{p}: {} yes but the oracle finds {}",
                        prop.name(),
                        found.as_ref().unwrap()
                    )),
                    _ => {}
                }
            }
        }
        (bad.is_empty(), summary(cases, &bad))
    })
}

/// Index-gcd converses produce verified linear factors.
pub fn criterion_3() -> CriterionResult {
    timed(3, "index-gcd converse factors verify", "identity mod Phi_r".into(), || {
        let pinned: [&[i64]; 5] = [
            &[0, 1, 0, 1, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0, 1],
            &[0, 0, 1, 0, 1, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0, 1],
            &[0, -4, 0, 0, 1],
        ];
        let mut bad = Vec::new();
        for c in pinned {
            let p = Poly::from_i64s(c);
            let idx = index_data(&p);
            let mut expected = Vec::new();
            if idx.gcd_i > 1 {
                expected.push((CurveKind::F, idx.gcd_i));
            }
            if idx.gcd_j > 1 {
                expected.push((CurveKind::Fc, idx.gcd_j));
            }
            if expected.is_empty() {
                bad.push(format!("{p}: pinned input has coprime indices"));
            }
            for (kind, r) in expected {
                match linear_factor_scan(&p, kind) {
                    LinearFactorScan::Factors(fs) if fs.iter().any(|f| f.order == r && f.verified) => {}
                    other => bad.push(format!("{p}: {kind:?} scan for order {r} gave {other:?}")),
                }
            }
        }
        (bad.is_empty(), summary(pinned.len(), &bad))
    })
}

/// Partial-derivative identities and diagonal restrictions.
pub fn criterion_4(seed: u64) -> CriterionResult {
    timed(4, "curve identities hold exactly", "exact, 0 failures".into(), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = Vec::new();
        let cases = 100;
        for _ in 0..cases {
            let n = rng.gen_range(2..=10);
            let p = random::integer_poly(&mut rng, n, 5, 0.7);
            let c = loop {
                let c = random::nonzero_rational(&mut rng, 5);
                if c != int(1) {
                    break c;
                }
            };
            let (x, z) = (HomogPoly::var(Var::X), HomogPoly::var(Var::Z));
            match (build_f(&p), build_fc(&p, &c)) {
                (Ok(f), Ok(fc)) => {
                    for (label, cd) in [("F", &f), ("F_c", &fc)] {
                        let report = verify_partial_identities(cd);
                        if !report.holds() {
                            bad.push(format!("{p} {label}: {:?}", report.failures()));
                        }
                    }
                    let diag_f = f.defining.substitute(&x, &x, &z);
                    if diag_f != derivative_form(&p, Var::X) {
                        bad.push(format!("{p}: F(X,X,1) != P'(X)"));
                    }
                    let diag_fc = fc.defining.substitute(&x, &x, &z);
                    if diag_fc != homogenized(&p, Var::X).scale(&(int(1) - c.clone())) {
                        bad.push(format!("{p}: F_c(X,X,1) != (1 - c) P(X)"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => bad.push(format!("{p}: {e}")),
            }
        }
        (bad.is_empty(), summary(cases, &bad))
    })
}

/// A random input for the separation comparison: dense, even (hence
/// usually not separated) or with a repeated critical point.
fn separation_input(rng: &mut ChaCha8Rng) -> RationalPoly {
    let n = rng.gen_range(3..=10);
    match rng.gen_range(0..3) {
        0 => random::integer_poly(rng, n, 5, 0.8),
        1 => {
            let half = random::integer_poly(rng, n / 2, 4, 0.8);
            &half.compose(&Poly::from_i64s(&[0, 0, 1])) + &Poly::constant(int(rng.gen_range(-3..=3)))
        }
        _ => {
            let k = rng.gen_range(2..=3.min(n - 1));
            let root = Poly::from_i64s(&[rng.gen_range(-2..=2), 1]);
            let rest = random::integer_poly(rng, n - 1 - k, 3, 0.8);
            // integrate root^k * rest, scaled to integer coefficients
            let d = &root.pow(k as u32) * &rest;
            let integral = Poly::new(
                std::iter::once(int(rng.gen_range(-3..=3)))
                    .chain(d.coeffs().iter().enumerate().map(|(i, c)| c / int(i as i64 + 1)))
                    .collect(),
            );
            let den = integral.coeffs().iter().fold(num_bigint::BigInt::from(1), |acc, c| {
                num_integer::Integer::lcm(&acc, c.denom())
            });
            integral.scale(&Rational::from_integer(den))
        }
    }
}

/// Exact separation against a numeric root finder.
pub fn criterion_5(seed: u64) -> CriterionResult {
    let tol = 1e-9;
    timed(5, "separation agrees with a numeric oracle", format!("relative tolerance {tol:e}"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e9a);
        let mut bad = Vec::new();
        let (mut cases, mut separated, mut rejected) = (0, 0, 0);
        while cases < 200 {
            let p = separation_input(&mut rng);
            let nc = numeric::numeric_critical(&p, 1e-3);
            // conditioning: well-spread critical points only
            if nc.min_gap < 0.05 {
                rejected += 1;
                continue;
            }
            cases += 1;
            let exact = critical_structure(&p);
            let float = numeric::numerically_separated(&nc, tol);
            separated += exact.separated as usize;
            if exact.l != nc.points.len() {
                bad.push(format!("{p}: l = {} exact, {} numeric", exact.l, nc.points.len()));
            } else if exact.separated != float {
                bad.push(format!("{p}: separated {} exact, {float} numeric", exact.separated));
            }
        }
        let detail = format!("{}; {separated} separated; {rejected} ill-conditioned inputs redrawn", summary(cases, &bad));
        (bad.is_empty(), detail)
    })
}

/// Genus values the negative cases and the mixed Fermat family rely on.
pub fn criterion_6() -> CriterionResult {
    timed(6, "genus pins", "exact".into(), || {
        let mut bad = Vec::new();
        let mut check = |label: String, p: &RationalPoly, kind: CurveKind, tau: Option<&[Option<usize>]>, expected: i64| {
            let cs = critical_structure(p);
            let got = singular_census(&cs, kind, tau).and_then(|c| genus_ordinary(c.degree, &c, true));
            if got.as_ref().ok() != Some(&expected) {
                bad.push(format!("{label}: expected {expected}, got {got:?}"));
            }
        };
        check("smooth cubic".into(), &Poly::from_i64s(&[1, 1, 0, 0, 1]), CurveKind::F, None, 1);
        for m1 in 1..=7usize {
            // P' = X^m1 (X - 1)
            let p = Poly::from_terms([(m1 + 2, rat(1, m1 as i64 + 2)), (m1 + 1, rat(-1, m1 as i64 + 1))]);
            check(format!("m = ({m1}, 1)"), &p, CurveKind::F, None, 0);
        }
        check("m = (2, 2)".into(), &Poly::from_i64s(&[0, 0, 0, 10, -15, 6]), CurveKind::F, None, 1);
        let three_cycle = [Some(1), Some(2), Some(0)];
        check("C_w".into(), &Poly::from_i64s(&[0, -4, 0, 0, 1]), CurveKind::Fc, Some(&three_cycle), 0);
        if !exceptional_flags(&critical_structure(&Poly::from_i64s(&[0, -4, 0, 0, 1]))).quartic_w_case {
            bad.push("X^4 - 4X is not flagged".into());
        }
        for m in 2..=5usize {
            for k in 2..=4usize {
                let expected = m * (m - 1) / 2;
                match mixed_fermat_forms(m, m + k) {
                    Ok(forms) if forms.len() == expected => {}
                    other => bad.push(format!("C_({m},{}) bound: {:?}", m + k, other.map(|f| f.len()))),
                }
            }
        }
        let pinned = mixed_fermat_forms(3, 5).map(|f| f.len()).unwrap_or(0);
        if pinned != 3 {
            bad.push(format!("C_(3,5) bound {pinned}"));
        }
        (bad.is_empty(), summary(1 + 7 + 1 + 1 + 12 + 1, &bad))
    })
}

/// The order-calculus replay against the hand-encoded table.
pub fn criterion_7() -> CriterionResult {
    timed(7, "order-calculus table", "0 mismatches, n <= 12, < 60 s".into(), || {
        let start = Instant::now();
        let mut bad = Vec::new();
        let mut cases = 0;
        for kind in [CurveKind::F, CurveKind::Fc] {
            for cfg in configurations_up_to(12, kind) {
                cases += 1;
                let replay = hyperbolicity_verdict(&cfg).level;
                let expected = statement_verdict(&cfg);
                if replay != expected {
                    bad.push(format!("{cfg}: {replay} vs {expected}"));
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        if secs >= 60.0 {
            bad.push(format!("runtime {secs:.1} s"));
        }
        (bad.is_empty(), summary(cases, &bad))
    })
}

/// The quartic w-case flag.
pub fn criterion_8() -> CriterionResult {
    timed(8, "quartic w-orbit flag", "exact".into(), || {
        let mut bad = Vec::new();
        let p = Poly::from_i64s(&[0, -4, 0, 0, 1]);
        let cs = critical_structure(&p);
        if cs.q != Poly::from_i64s(&[27, 0, 0, 1]) {
            bad.push(format!("X^4 - 4X: Q = {}", cs.q));
        }
        if !exceptional_flags(&cs).quartic_w_case {
            bad.push("X^4 - 4X: flag missing".into());
        }
        let mut cases = 1;
        for a in [-3, -2, -1, 1, 2, 3] {
            for b in [-3, -2, -1, 1, 2, 3] {
                cases += 1;
                let p = Poly::from_i64s(&[b, a, 0, 0, 1]);
                if exceptional_flags(&critical_structure(&p)).quartic_w_case {
                    bad.push(format!("{p}: flagged"));
                }
            }
        }
        (bad.is_empty(), summary(cases, &bad))
    })
}

/// Randomized property suites.
pub fn criterion_9(seed: u64, cases: usize) -> CriterionResult {
    timed(9, "property suites", format!("{cases} cases per suite, seed {seed}, < 120 s"), || {
        let start = Instant::now();
        let results = property_suites(seed, cases);
        let mut bad: Vec<String> = results
            .iter()
            .filter(|r| !r.failures.is_empty())
            .map(|r| format!("{}: {}", r.name, r.failures[0]))
            .collect();
        let secs = start.elapsed().as_secs_f64();
        if secs >= 120.0 {
            bad.push(format!("runtime {secs:.1} s"));
        }
        let detail = results
            .iter()
            .map(|r| format!("{} {}/{}", r.name, r.cases - r.failures.len(), r.cases))
            .collect::<Vec<_>>()
            .join(", ");
        (bad.is_empty(), if bad.is_empty() { detail } else { format!("{detail}; {}", bad.join("; ")) })
    })
}

pub fn run_all(seed: u64, property_cases: usize) -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(seed),
        criterion_5(seed),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(seed, property_cases),
    ]
}
