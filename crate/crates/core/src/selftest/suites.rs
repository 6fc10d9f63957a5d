use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random;
use crate::classifier::{classify, Answer, Property};
use crate::parse::{canonical, parse_expr, parse_poly};
use crate::poly::{gcd, resultant, squarefree_decomposition, RationalPoly};
use crate::scalar::int;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    /// The first few counterexamples.
    pub failures: Vec<String>,
}

fn run_suite(
    name: &'static str,
    seed: u64,
    cases: usize,
    mut case: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>,
) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..cases {
        if let Err(e) = case(&mut rng) {
            if failures.len() < 5 {
                failures.push(e);
            }
        }
    }
    SuiteResult { name, cases, failures }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly_core_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random::rational_poly(rng, 6, 4);
    let q = random::rational_poly(rng, 4, 4);
    let r = random::rational_poly(rng, 3, 4);

    let (quot, rem) = p.div_rem(&q);
    ensure(&(&quot * &q) + &rem == p, || format!("division identity fails for {p} / {q}"))?;
    ensure(rem.is_zero() || rem.degree() < q.degree(), || format!("remainder too large: {p} / {q}"))?;

    let g = gcd(&p, &q);
    ensure(p.rem(&g).is_zero() && q.rem(&g).is_zero(), || format!("gcd({p}, {q}) = {g} does not divide"))?;
    let gr = gcd(&(&p * &r), &(&q * &r));
    ensure(gr.monic() == (&g * &r).monic(), || format!("gcd not multiplicative for {p}, {q}, {r}"))?;

    let res = resultant(&p, &q);
    ensure(res.is_zero() == (g.degree().unwrap_or(0) > 0), || format!("resultant of {p}, {q} = {res} vs gcd {g}"))?;
    let split = resultant(&p, &(&q * &r));
    ensure(split == &res * &resultant(&p, &r), || format!("resultant not multiplicative: {p}, {q}, {r}"))?;

    let square = &(&p * &q) * &q;
    let factors = squarefree_decomposition(&square);
    let product = factors
        .iter()
        .fold(RationalPoly::one(), |acc, f| &acc * &f.factor.pow(f.multiplicity as u32));
    ensure(product.monic() == square.monic(), || format!("squarefree product mismatch for {square}"))?;
    for f in &factors {
        let d = f.factor.derivative();
        ensure(gcd(&f.factor, &d).degree().unwrap_or(0) == 0, || format!("{} is not squarefree", f.factor))?;
    }

    let s = random::small_rational(rng, 3);
    let t = random::small_rational(rng, 3);
    ensure(
        p.taylor_shift(&s).taylor_shift(&t) == p.taylor_shift(&(&s + &t)),
        || format!("taylor shifts do not compose for {p}"),
    )
}

fn lattice_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random::classifier_input(rng, 7);
    let v = classify(&p).map_err(|e| format!("{p}: {e}"))?;
    ensure(v.lattice_violations().is_empty(), || format!("{p}: {:?}", v.lattice_violations()))?;
    ensure(v.conflicts.is_empty(), || format!("{p}: conflicts {:?}", v.conflicts))?;
    for prop in Property::ALL {
        if v.answer(prop) == Answer::No {
            let w = v.justification(prop).ok_or_else(|| format!("{p}: {} unjustified", prop.name()))?;
            ensure(w.verify(&p), || format!("{p}: {} witness {w} does not replay", prop.name()))?;
            ensure(prop.is_strong() || w.has_c_one() || w.is_exception(), || {
                format!("{p}: {} refuted by a witness with c != 1", prop.name())
            })?;
        }
    }
    ensure(
        v.answers().contains(&Answer::OutOfScope) == v.out_of_scope_reason.is_some(),
        || format!("{p}: out-of-scope reason mismatch"),
    )
}

fn invariance_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random::classifier_input(rng, 6);
    let s = random::small_rational(rng, 3);
    let lambda = random::nonzero_rational(rng, 4);
    let base = classify(&p).map_err(|e| format!("{p}: {e}"))?.answers();
    let shifted = p.taylor_shift(&s);
    let scaled = p.scale(&lambda);
    for (label, q) in [("shift", &shifted), ("scale", &scaled)] {
        let other = classify(q).map_err(|e| format!("{q}: {e}"))?.answers();
        ensure(other == base, || format!("{p} vs {label} {q}: {base:?} vs {other:?}"))?;
    }
    Ok(())
}

/// A random expression string in the input grammar.
fn expression(rng: &mut ChaCha8Rng, depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..4) {
            0 => "X".to_string(),
            1 => rng.gen_range(0..20).to_string(),
            2 => format!("{}/{}", rng.gen_range(0..9), rng.gen_range(1..9)),
            _ => format!("{}X", rng.gen_range(1..5)),
        };
    }
    let a = expression(rng, depth - 1);
    match rng.gen_range(0..6) {
        0 => format!("{a} + {}", expression(rng, depth - 1)),
        1 => format!("{a} - {}", expression(rng, depth - 1)),
        2 => format!("({a})*({})", expression(rng, depth - 1)),
        3 => format!("({a})^{}", rng.gen_range(0..4)),
        4 => format!("-({a})"),
        _ => format!("({a}) {}", expression(rng, depth - 1)),
    }
}

fn parser_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = random::rational_poly(rng, 10, 9);
    let text = canonical(&p);
    let back = parse_poly(&text, 64).map_err(|e| format!("{text}: {e}"))?;
    ensure(back == p, || format!("{text} parses to {back}"))?;
    let expr = expression(rng, 4);
    let parsed = parse_poly(&expr, 64).map_err(|e| format!("{expr}: {e}"))?;
    let again = parse_poly(&canonical(&parsed), 64).map_err(|e| format!("{parsed}: {e}"))?;
    ensure(again == parsed, || format!("{expr}: canonical form {parsed} does not round-trip"))?;
    // the syntax tree evaluated directly agrees with the expanded polynomial
    let x = int(rng.gen_range(-3..=3));
    let tree = parse_expr(&expr).map_err(|e| format!("{expr}: {e}"))?;
    ensure(tree.eval(&x) == parsed.eval(&x), || format!("{expr}: evaluation at {x} differs"))
}

/// The four randomized suites, each from its own stream of `seed`.
pub fn property_suites(seed: u64, cases: usize) -> Vec<SuiteResult> {
    vec![
        run_suite("poly-core invariants", seed, cases, poly_core_case),
        run_suite("verdict lattice", seed.wrapping_add(1), cases, lattice_case),
        run_suite("shift/scale invariance", seed.wrapping_add(2), cases, invariance_case),
        run_suite("parser round-trip", seed.wrapping_add(3), cases, parser_case),
    ]
}
