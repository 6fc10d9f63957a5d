use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use supoly::classifier::{
    constraint_polynomial, consistency_audit_with_cap, corollary_classify, witness_search, Answer,
    SearchMode,
};
use supoly::criteria::{critical_structure, normalize, CriticalStructure, CurveKind};
use supoly::curve::{
    bezout_irreducibility, build_f, build_fc, genus_ordinary, singular_census,
    verify_partial_identities, Irreducibility,
};
use supoly::order::{
    gap_route, hyperbolicity_verdict, statement_verdict, unpaired_route_verdict, Configuration,
};
use supoly::parse::parse_poly;
use supoly::scalar::{format_rational, parse_rational};
use supoly::selftest::run_all;
use supoly::{Error, Poly, Rational, RationalPoly};

use crate::cli::{FormKind, SearchModeArg};
use crate::config::Settings;
use crate::report::*;
use crate::{exit, Rendered};

/// A serialized report with its exit code.
pub struct Done {
    pub value: serde_json::Value,
    pub code: i32,
}

fn done(report: &impl Serialize, code: i32) -> Done {
    Done {
        value: serde_json::to_value(report).expect("reports serialize"),
        code,
    }
}

/// Exit code for an error raised while handling `input`.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::DegreeCap { .. } => exit::PARSE,
        Error::Internal(_) => exit::AUDIT,
        _ => exit::USAGE,
    }
}

pub fn error_report(command: &'static str, input: &str, e: &Error) -> Done {
    let (offset, expected) = match e {
        Error::Parse { offset, expected, .. } => (Some(*offset), Some(expected.clone())),
        _ => (None, None),
    };
    let kind = match e {
        Error::Parse { .. } => "syntax",
        Error::DegreeCap { .. } => "degree_cap",
        Error::Internal(_) => "internal",
        _ => "invalid_input",
    };
    let report = ErrorReport {
        header: Header::new(command),
        input: input.to_string(),
        error: ErrorOut { kind, message: e.to_string(), offset, expected },
    };
    done(&report, error_code(e))
}

fn parse(command: &'static str, text: &str, s: &Settings) -> Result<RationalPoly, Done> {
    parse_poly(text, s.degree_cap).map_err(|e| error_report(command, text, &e))
}

fn parse_rational_arg(command: &'static str, flag: &str, text: &str) -> Result<Rational, Done> {
    parse_rational(text.trim()).ok_or_else(|| {
        let e = Error::InvalidInput(format!("--{flag} expects an integer or p/q, got {text:?}"));
        error_report(command, text, &e)
    })
}

/// Census and genus of `C` (or `C_c` with a pairing). Irreducibility is
/// certified by Bézout without assuming the absence of lines.
fn census_of(cs: &CriticalStructure, kind: CurveKind, tau: Option<&[Option<usize>]>) -> Result<CensusOut, String> {
    let census = singular_census(cs, kind, tau).map_err(|e| e.to_string())?;
    let irr = bezout_irreducibility(census.degree, &census, false);
    let genus = genus_ordinary(census.degree, &census, irr == Irreducibility::Certified).ok();
    Ok(CensusOut::new(&census, irr, genus))
}

fn classify_one(text: &str, s: &Settings) -> Done {
    let start = Instant::now();
    let p = match parse("classify", text, s) {
        Ok(p) => p,
        Err(d) => return d,
    };
    let audit = match consistency_audit_with_cap(&p, s.degree_cap) {
        Ok(a) => a,
        Err(e) => return error_report("classify", text, &e),
    };
    let v = &audit.verdict;
    let cs = critical_structure(&p);
    let census = census_of(&cs, CurveKind::F, None).ok();
    let coefficient_gap = build_f(&normalize(&p).p0)
        .and_then(|cd| gap_route(&cd))
        .ok()
        .flatten()
        .map(|g| GapOut::new(&g));
    let order_calculus = cs.separated.then(|| {
        let cfg = Configuration::diagonal(cs.multiplicities.clone()).expect("sorted positive multiplicities");
        OrderOut::new(&hyperbolicity_verdict(&cfg), statement_verdict(&cfg).to_string())
    });
    let out_of_scope = v.answers().contains(&Answer::OutOfScope);
    let code = if !audit.passed() {
        exit::AUDIT
    } else if out_of_scope {
        exit::OUT_OF_SCOPE
    } else {
        exit::OK
    };
    let report = ClassifyReport {
        header: Header::new("classify"),
        input: PolyEcho::new(&p),
        verdict: Answers::of(v),
        decisions: decisions(v),
        rule_trace: trace(v),
        witnesses: v.witnesses.iter().map(|w| WitnessOut::new(w, &p)).collect(),
        certificates: Certificates {
            critical: CriticalOut::new(&cs),
            census,
            coefficient_gap,
            order_calculus,
        },
        audit: AuditOut::new(&audit),
        conflicts: v.conflicts.clone(),
        out_of_scope_reason: v.out_of_scope_reason.clone(),
        assumptions: ASSUMPTIONS.to_vec(),
        timing_ms: s.timing.then(|| start.elapsed().as_millis()),
    };
    done(&report, code)
}

pub fn classify(poly: &str, s: &Settings) -> Done {
    classify_one(poly, s)
}

/// Order-preserving parallel classification of every non-blank,
/// non-comment line. The exit code is the largest one seen.
pub fn classify_batch(text: &str, s: &Settings) -> Vec<Done> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    lines.par_iter().map(|l| classify_one(l, s)).collect()
}

/// Distinct rational critical points ordered like `cs.multiplicities`
/// (multiplicity descending, then value), or `None` if one is irrational.
fn rational_critical_points(p: &RationalPoly, cs: &CriticalStructure) -> Option<Vec<Rational>> {
    let dp = p.derivative();
    let mut points: Vec<(usize, Rational)> = dp
        .rational_roots()
        .into_iter()
        .map(|a| {
            let mut q = dp.clone();
            let mut mult = 0;
            while !q.is_zero() && q.eval(&a).is_zero() {
                mult += 1;
                q = q.derivative();
            }
            (mult, a)
        })
        .collect();
    if points.len() != cs.l {
        return None;
    }
    points.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
    Some(points.into_iter().map(|(_, a)| a).collect())
}

pub fn curve(poly: &str, c: Option<&str>, s: &Settings) -> Done {
    let p = match parse("curve", poly, s) {
        Ok(p) => p,
        Err(d) => return d,
    };
    let c = match c.map(|t| parse_rational_arg("curve", "c", t)).transpose() {
        Ok(c) => c,
        Err(d) => return d,
    };
    let built = match &c {
        None => build_f(&p),
        Some(c) => build_fc(&p, c),
    };
    let cd = match built {
        Ok(cd) => cd,
        Err(e) => return error_report("curve", poly, &e),
    };
    let ids = verify_partial_identities(&cd);
    let cs = critical_structure(&p);
    let (pairing, census) = match &c {
        None => (None, census_of(&cs, CurveKind::F, None)),
        Some(c) => match rational_critical_points(&p, &cs) {
            None => (None, Err("the pairing needs rational critical points".to_string())),
            Some(points) => {
                let values: Vec<Rational> = points.iter().map(|a| p.eval(a)).collect();
                let tau: Vec<Option<usize>> = (0..values.len())
                    .map(|i| (0..values.len()).find(|&j| j != i && values[i] == c * &values[j]))
                    .collect();
                let shown = tau
                    .iter()
                    .enumerate()
                    .filter_map(|(i, t)| t.map(|j| format!("{} -> {}", i + 1, j + 1)))
                    .collect();
                (Some(shown), census_of(&cs, CurveKind::Fc, Some(&tau)))
            }
        },
    };
    let (census, census_note) = match census {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e)),
    };
    let holds = ids.holds();
    let report = CurveReport {
        header: Header::new("curve"),
        input: PolyEcho::new(&p),
        curve: if c.is_some() { "C_c" } else { "C" },
        c: c.as_ref().map(format_rational),
        defining_form: cd.defining.to_string(),
        degree: cd.degree,
        identities: ids
            .checks
            .iter()
            .map(|(name, residual)| IdentityOut { name, holds: residual.is_zero() })
            .collect(),
        identities_hold: holds,
        critical: CriticalOut::new(&cs),
        pairing,
        census,
        census_note,
    };
    done(&report, if holds { exit::OK } else { exit::AUDIT })
}

fn parse_tau(items: &[String], l: usize) -> Result<Vec<Option<usize>>, String> {
    let mut tau = vec![None; l];
    for item in items {
        let (i, j) = item
            .split_once(':')
            .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| format!("--tau expects one-based pairs i:j, got {item:?}"))?;
        if i == 0 || j == 0 || i > l || j > l {
            return Err(format!("--tau index out of range 1..={l} in {item:?}"));
        }
        if tau[i - 1].replace(j - 1).is_some() {
            return Err(format!("--tau assigns index {i} twice"));
        }
    }
    Ok(tau)
}

pub fn forms(kind: FormKind, m: &[usize], tau: &[String]) -> Done {
    let input = format!("{kind:?} m={m:?} tau={tau:?}");
    let cfg = match kind {
        FormKind::F if !tau.is_empty() => Err(Error::InvalidInput("--tau only applies to --kind fc".into())),
        FormKind::F => Configuration::diagonal(m.to_vec()),
        FormKind::Fc => parse_tau(tau, m.len())
            .map_err(Error::InvalidInput)
            .and_then(|t| Configuration::paired(m.to_vec(), t)),
    };
    let cfg = match cfg {
        Ok(cfg) => cfg,
        Err(e) => return error_report("forms", &input, &e),
    };
    let verdict = hyperbolicity_verdict(&cfg);
    let report = FormsReport {
        header: Header::new("forms"),
        order_calculus: OrderOut::new(&verdict, statement_verdict(&cfg).to_string()),
        unpaired_route_level: unpaired_route_verdict(&cfg).to_string(),
    };
    done(&report, exit::OK)
}

pub fn witness(poly: &str, mode: SearchModeArg, bound: Option<usize>, s: &Settings) -> Done {
    let p = match parse("witness", poly, s) {
        Ok(p) => p,
        Err(d) => return d,
    };
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        d => return error_report("witness", poly, &Error::DegreeTooSmall(d.unwrap_or(0))),
    };
    let (mode, label) = match mode {
        SearchModeArg::C1 => (SearchMode::CEqualsOne, "c1"),
        SearchModeArg::Any => (SearchMode::AnyC, "any"),
    };
    let bound = bound.unwrap_or(n);
    let found = witness_search(&p, mode, bound);
    let report = WitnessReport {
        header: Header::new("witness"),
        input: PolyEcho::new(&p),
        mode: label,
        bound,
        constraint_polynomial: constraint_polynomial(&p, mode).to_string().replace('X', "beta"),
        witness: found.as_ref().map(|w| WitnessOut::new(w, &p)),
    };
    let code = if found.as_ref().is_none_or(|w| w.verify(&p)) { exit::OK } else { exit::AUDIT };
    done(&report, code)
}

fn answers_from(row: [bool; 4]) -> Answers {
    let a = |b: bool| if b { Answer::Yes } else { Answer::No }.as_str();
    Answers {
        up_rational: a(row[0]),
        sup_rational: a(row[1]),
        up_meromorphic: a(row[2]),
        sup_meromorphic: a(row[3]),
    }
}

pub struct CorollaryArgs<'a> {
    pub alpha: &'a str,
    pub n: usize,
    pub m: usize,
    pub a: &'a str,
    pub b: &'a str,
}

pub fn corollary(args: &CorollaryArgs<'_>, s: &Settings) -> Done {
    let input = format!("alpha={} n={} m={} a={} b={}", args.alpha, args.n, args.m, args.a, args.b);
    let parsed = (|| {
        Ok::<_, Done>((
            parse_rational_arg("corollary", "alpha", args.alpha)?,
            parse_rational_arg("corollary", "a", args.a)?,
            parse_rational_arg("corollary", "b", args.b)?,
        ))
    })();
    let (alpha, a, b) = match parsed {
        Ok(t) => t,
        Err(d) => return d,
    };
    if args.n > s.degree_cap {
        let e = Error::DegreeCap { degree: args.n, cap: s.degree_cap };
        return error_report("corollary", &input, &e);
    }
    let row = match corollary_classify(&alpha, args.n, args.m, &a, &b) {
        Ok(r) => r,
        Err(e) => return error_report("corollary", &input, &e),
    };
    let shifted = Poly::new(vec![-alpha.clone(), Rational::one()]);
    let p = &(&shifted.pow(args.n as u32) + &shifted.pow(args.m as u32).scale(&a)) + &Poly::constant(b.clone());
    let classified = match supoly::classifier::classify_with_cap(&p, s.degree_cap) {
        Ok(v) => v,
        Err(e) => return error_report("corollary", &input, &e),
    };
    let expected = row.as_array().map(|b| if b { Answer::Yes } else { Answer::No });
    let agrees = expected == classified.answers();
    let report = CorollaryReport {
        header: Header::new("corollary"),
        alpha: format_rational(&alpha),
        n: args.n,
        m: args.m,
        a: format_rational(&a),
        b: format_rational(&b),
        polynomial: p.to_string(),
        row: answers_from(row.as_array()),
        classified: Answers::of(&classified),
        agrees,
    };
    done(&report, if agrees { exit::OK } else { exit::AUDIT })
}

pub fn selftest(cases: Option<usize>, s: &Settings) -> Done {
    let cases = cases.unwrap_or(s.property_cases);
    let results = run_all(s.seed, cases);
    let passed = results.iter().all(|r| r.passed);
    let report = SelftestReport {
        header: Header::new("selftest"),
        seed: s.seed,
        property_cases: cases,
        criteria: results
            .into_iter()
            .map(|r| CriterionOut {
                id: r.id,
                name: r.name,
                passed: r.passed,
                tolerance: r.tolerance,
                // some details quote runtimes, so passing ones are dropped unless --timing
                detail: if s.timing || !r.passed { r.detail } else { String::new() },
                elapsed_ms: s.timing.then_some(r.elapsed_ms),
            })
            .collect(),
        passed,
    };
    done(&report, if passed { exit::OK } else { exit::AUDIT })
}

impl Done {
    pub fn rendered(self, format: crate::config::Format, compact: bool) -> Rendered {
        use crate::config::Format;
        let body = match format {
            Format::Json if compact => serde_json::to_string(&self.value).expect("json"),
            Format::Json => serde_json::to_string_pretty(&self.value).expect("json"),
            Format::Text => crate::text::render(&self.value).trim_end().to_string(),
        };
        Rendered { body, code: self.code }
    }
}
