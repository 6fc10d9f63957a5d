use std::fmt;

use super::ledger::{build_ledger, check_form, FormVerdict, OrderLedger};
use super::{Atom, Configuration, Form, Hyperbolicity, Wr};
use crate::criteria::CurveKind;

/// Forms found regular by [`check_form`] together with what a Brody claim
/// still needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rule: &'static str,
    pub level: Hyperbolicity,
    pub forms: Vec<FormVerdict>,
    /// For a pair: `a w1 + b w2 = 0` forces a component of the curve into a
    /// curve of this degree, so no component of degree at most this may exist.
    pub independence_degree: Option<u32>,
    /// The pair is only independent after the per-polynomial expansion check.
    pub needs_expansion_check: bool,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.level)?;
        if let Some(d) = self.independence_degree {
            write!(f, ", independent off components of degree <= {d}")?;
        }
        if self.needs_expansion_check {
            write!(f, ", needs the recentred expansion check")?;
        }
        for v in &self.forms {
            write!(f, "\n  {}", v.form)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct HyperbolicityVerdict {
    pub config: Configuration,
    pub level: Hyperbolicity,
    pub certificates: Vec<Certificate>,
    /// Rules whose preconditions held but whose forms failed the check.
    pub rejected: Vec<String>,
}

impl HyperbolicityVerdict {
    pub fn best(&self) -> Option<&Certificate> {
        self.certificates.iter().max_by_key(|c| c.level)
    }
}

struct Candidate {
    rule: &'static str,
    forms: Vec<Form>,
    needs_expansion_check: bool,
}

impl Candidate {
    fn new(rule: &'static str, forms: Vec<Form>) -> Self {
        Candidate { rule, forms, needs_expansion_check: false }
    }
}

fn ratio_degree(a: &Form, b: &Form) -> Option<u32> {
    if a.wronskian != b.wronskian {
        return None;
    }
    let mut diff = a.exps.clone();
    for (&atom, &e) in &b.exps {
        *diff.entry(atom).or_insert(0) -= e;
    }
    Some(diff.values().filter(|e| **e > 0).map(|&e| e as u32).sum())
}

fn certify(ledger: &OrderLedger, cand: Candidate, rejected: &mut Vec<String>) -> Option<Certificate> {
    let mut forms = Vec::new();
    for f in &cand.forms {
        let v = check_form(ledger, f).expect("dispatch builds well-formed forms");
        if !v.regular {
            rejected.push(format!(
                "{}: {} ({})",
                cand.rule,
                f,
                v.reason.as_deref().unwrap_or("")
            ));
            return None;
        }
        forms.push(v);
    }
    let (level, independence_degree) = match cand.forms.as_slice() {
        [_] => (Hyperbolicity::Algebraic, None),
        [a, b] => (Hyperbolicity::Brody, ratio_degree(a, b)),
        _ => unreachable!("certificates carry one or two forms"),
    };
    Some(Certificate {
        rule: cand.rule,
        level,
        forms,
        independence_degree,
        needs_expansion_check: cand.needs_expansion_check,
    })
}

fn yz(name: &str, factors: &[(Atom, i32)]) -> Form {
    Form::new(name, Wr::YZ, factors)
}

/// `prod (X - a_i)^(-m_i)` over all indices.
fn all_critical(m: &[usize]) -> Vec<(Atom, i32)> {
    m.iter().enumerate().map(|(i, &mi)| (Atom::Xa(i), -(mi as i32))).collect()
}

fn diagonal_candidates(cfg: &Configuration) -> Vec<Candidate> {
    let (l, m, n) = (cfg.l(), &cfg.m, cfg.n() as i32);
    let mut out = Vec::new();
    if l < 2 {
        return out;
    }
    let with = |name: &str, extra: &[(Atom, i32)]| {
        let mut f = all_critical(m);
        f.extend_from_slice(extra);
        yz(name, &f)
    };
    let omega0 = with("omega0", &[(Atom::XminusY, n - 3)]);
    let omega1 = with("omega1", &[(Atom::XminusY, n - 4), (Atom::Xa(0), 1)]);
    let omega2 = with("omega2", &[(Atom::XminusY, n - 4), (Atom::Xa(1), 1)]);
    if l >= 3 || m[1] >= 2 {
        out.push(Candidate::new("diagonal-single", vec![omega0.clone()]));
    }
    let tail = m[1..].iter().sum::<usize>();
    if l >= 4 || (l == 3 && m[0] >= 2 && tail >= 3) || (l == 2 && m[1] >= 3) {
        out.push(Candidate::new("diagonal-pair", vec![omega1, omega2]));
    } else if (l == 3 && m[0] >= 2 && tail == 2) || (l == 2 && m[1] == 2 && m[0] >= 3) {
        out.push(Candidate {
            rule: "diagonal-recentred-pair",
            forms: vec![omega0, omega1],
            needs_expansion_check: true,
        });
    }
    out
}

/// Forms that use the gap `m_i - m_tau(i)` at one paired point.
fn shift_forms(cfg: &Configuration, i: usize, pair: bool) -> Option<Vec<Form>> {
    let j = cfg.tau(i)?;
    let (mi, mj) = (cfg.m[i] as i32, cfg.m[j] as i32);
    let need = if pair { 3 } else { 2 };
    let (wr, num, den, e) = if mi - mj >= need {
        (Wr::YZ, Atom::Ya(j), Atom::Xa(i), mi)
    } else if mj - mi >= need {
        (Wr::XZ, Atom::Xa(i), Atom::Ya(j), mj)
    } else {
        return None;
    };
    if pair {
        Some(
            [(Atom::X, "shift-x"), (Atom::Y, "shift-y")]
                .into_iter()
                .map(|(mult, name)| Form::new(name, wr, &[(mult, 1), (num, e - 3), (den, -e)]))
                .collect(),
        )
    } else {
        Some(vec![Form::new("shift", wr, &[(num, e - 2), (den, -e)])])
    }
}

fn shift_candidates(cfg: &Configuration) -> Vec<Candidate> {
    let mut out = Vec::new();
    if !cfg.all_paired() {
        return out;
    }
    for i in 0..cfg.l() {
        if let Some(forms) = shift_forms(cfg, i, true) {
            out.push(Candidate::new("shift-pair", forms));
        }
        if let Some(forms) = shift_forms(cfg, i, false) {
            out.push(Candidate::new("shift-single", forms));
        }
    }
    out
}

/// Index of largest multiplicity outside `skip`.
fn argmax_except(m: &[usize], skip: &[usize]) -> Option<usize> {
    (0..m.len())
        .filter(|i| !skip.contains(i))
        .max_by(|&a, &b| m[a].cmp(&m[b]).then(b.cmp(&a)))
}

fn unpaired_candidates(cfg: &Configuration) -> Vec<Candidate> {
    let mut out = Vec::new();
    let (l, m) = (cfg.l(), &cfg.m);
    if cfg.kind != CurveKind::Fc || l < 2 {
        return out;
    }
    let free = cfg.unpaired();
    let x = |i: usize, e: i32| (Atom::Xa(i), -e);

    for &i0 in &free {
        if m[i0] >= 3 {
            out.push(Candidate::new(
                "unpaired-triple-pair",
                vec![
                    yz("eta-x", &[(Atom::X, 1), x(i0, 3)]),
                    yz("eta-y", &[(Atom::Y, 1), x(i0, 3)]),
                ],
            ));
        }
        if m[i0] == 2 {
            if let Some(k) = argmax_except(m, &[i0]).filter(|&k| m[k] >= 2) {
                let eta2 = match cfg.tau(k) {
                    None => yz("eta2", &[x(i0, 1), x(k, 1)]),
                    Some(tk) => yz("eta2", &[(Atom::Ya(tk), 1), x(i0, 2), x(k, 1)]),
                };
                out.push(Candidate::new(
                    "unpaired-double-pair",
                    vec![yz("eta1", &[x(i0, 2)]), eta2],
                ));
            }
        }
        if m[i0] >= 2 {
            out.push(Candidate::new("unpaired-double", vec![yz("eta", &[x(i0, 2)])]));
        }
    }
    for (a, &i1) in free.iter().enumerate() {
        for &i2 in &free[a + 1..] {
            let (big, small) = if m[i1] >= m[i2] { (i1, i2) } else { (i2, i1) };
            if m[big] == 2 && m[small] == 1 {
                out.push(Candidate::new(
                    "unpaired-mixed-pair",
                    vec![yz("eta1", &[x(big, 2)]), yz("eta2", &[x(big, 1), x(small, 1)])],
                ));
            }
            if m[i1] == 1 && m[i2] == 1 {
                let eta1 = yz("eta1", &[x(i1, 1), x(i2, 1)]);
                if l >= 3 {
                    let t = argmax_except(m, &[i1, i2]).expect("l >= 3");
                    let eta2 = match cfg.tau(t) {
                        None => yz("eta2", &[x(i1, 1), x(t, 1)]),
                        Some(tt) => yz("eta2", &[(Atom::Ya(tt), 1), x(i1, 1), x(i2, 1), x(t, 1)]),
                    };
                    out.push(Candidate::new("unpaired-simple-pair", vec![eta1.clone(), eta2]));
                }
                out.push(Candidate::new("unpaired-simple", vec![eta1]));
            }
        }
    }
    out
}

fn secant_candidates(cfg: &Configuration) -> Vec<Candidate> {
    let mut out = Vec::new();
    let (l, m) = (cfg.l(), &cfg.m);
    if cfg.kind != CurveKind::Fc || l < 2 || cfg.n() < 4 {
        return out;
    }
    let x = |i: usize, e: i32| (Atom::Xa(i), -e);
    let lines = |a: usize, b: usize, e: i32| (Atom::L(a, b), e);
    let tops: Vec<usize> = (0..l).filter(|&i| m[i] == m[0]).collect();

    if m[1] >= 2 {
        for &a in &tops {
            for b in (0..l).filter(|&b| b != a && m[b] == m[1]) {
                if !(cfg.is_paired(a) && cfg.is_paired(b)) {
                    continue;
                }
                let (ma, mb) = (m[a] as i32, m[b] as i32);
                let omega1 = yz("omega1", &[lines(a, b, ma + mb - 2), x(a, ma), x(b, mb)]);
                out.push(Candidate::new("secant-single", vec![omega1.clone()]));
                if mb >= 3 {
                    let omega2 = yz("omega2", &[lines(a, b, ma + mb - 3), x(a, ma - 1), x(b, mb)]);
                    out.push(Candidate::new("secant-pair", vec![omega1, omega2]));
                } else if (3..=4).contains(&ma) {
                    let omega2 = yz("omega2", &[lines(a, b, ma - 1), x(a, ma), x(b, 1)]);
                    out.push(Candidate::new("secant-pair", vec![omega1, omega2]));
                } else if ma >= 5 {
                    if let Some(forms) = shift_forms(cfg, a, true) {
                        out.push(Candidate::new("secant-shift-pair", forms));
                    }
                } else if l >= 3 {
                    for c in (0..l).filter(|&c| c != a && c != b) {
                        let omega2 = if cfg.is_paired(c) {
                            yz(
                                "omega2",
                                &[
                                    lines(a, b, 1),
                                    lines(b, c, 1),
                                    lines(c, a, 1),
                                    x(a, 2),
                                    x(b, 2),
                                    x(c, 1),
                                ],
                            )
                        } else {
                            yz("omega2", &[lines(a, b, 2), x(a, 2), x(b, 1), x(c, 1)])
                        };
                        out.push(Candidate::new("secant-triangle-pair", vec![omega1.clone(), omega2]));
                    }
                }
            }
        }
        return out;
    }

    if l < 3 {
        return out;
    }
    if m[0] >= 2 {
        // one index of multiplicity >= 2, all others simple
        let a = 0;
        let ma = m[a] as i32;
        match cfg.tau(a) {
            None => {
                if (1..l).all(|i| cfg.is_paired(i)) {
                    for i in (1..l).filter(|&i| cfg.tau(i) != Some(a)) {
                        let ti = cfg.tau(i).expect("paired");
                        out.push(Candidate::new(
                            "simple-free-top-pair",
                            vec![
                                yz("omega1", &[x(a, 2)]),
                                yz("omega2", &[(Atom::Ya(ti), 1), x(a, 2), x(i, 1)]),
                            ],
                        ));
                    }
                }
            }
            Some(_) if ma >= 4 => {
                if let Some(forms) = shift_forms(cfg, a, true) {
                    out.push(Candidate::new("simple-shift-pair", forms));
                }
            }
            Some(ta) => {
                let free: Vec<usize> = (1..l).filter(|&i| !cfg.is_paired(i)).collect();
                if let Some(&i0) = free.first() {
                    out.push(Candidate::new(
                        "simple-unpaired-pair",
                        vec![
                            yz("omega1", &[x(a, 1), x(i0, 1)]),
                            yz("omega2", &[(Atom::Ya(ta), 1), x(a, 2), x(i0, 1)]),
                        ],
                    ));
                } else {
                    for b in (1..l).filter(|&b| cfg.tau(b) != Some(a)) {
                        for c in (1..l).filter(|&c| c != b) {
                            out.push(Candidate::new(
                                "simple-secant-pair",
                                vec![
                                    yz("omega1", &[lines(a, b, 1), x(a, 2), x(b, 1)]),
                                    yz(
                                        "omega2",
                                        &[lines(a, c, 1), lines(b, c, 1), x(a, 2), x(b, 1), x(c, 1)],
                                    ),
                                ],
                            ));
                        }
                    }
                }
            }
        }
        return out;
    }

    // all multiplicities one
    let free = cfg.unpaired();
    let paired: Vec<usize> = (0..l).filter(|&i| cfg.is_paired(i)).collect();
    if free.is_empty() && l >= 4 {
        let (a, b, c, d) = (0, 1, 2, 3);
        let den = [x(a, 1), x(b, 1), x(c, 1), x(d, 1)];
        let with = |name: &str, p: (usize, usize), q: (usize, usize)| {
            let mut f = den.to_vec();
            f.push(lines(p.0, p.1, 1));
            f.push(lines(q.0, q.1, 1));
            yz(name, &f)
        };
        out.push(Candidate::new(
            "all-simple-pair",
            vec![with("omega1", (a, b), (c, d)), with("omega2", (a, c), (b, d))],
        ));
    }
    if free.len() == 1 && paired.len() >= 2 {
        let u = free[0];
        let (a, b) = (paired[0], paired[1]);
        let single = yz("omega1", &[lines(a, b, 1), x(u, 1), x(a, 1), x(b, 1)]);
        if let Some(&c) = paired.get(2) {
            let other = yz("omega2", &[lines(a, c, 1), x(u, 1), x(a, 1), x(c, 1)]);
            out.push(Candidate::new("one-unpaired-pair", vec![single.clone(), other]));
        }
        out.push(Candidate::new("one-unpaired-single", vec![single]));
    }
    out
}

fn run(ledger: &OrderLedger, cands: Vec<Candidate>) -> (Vec<Certificate>, Vec<String>) {
    let mut certificates: Vec<Certificate> = Vec::new();
    let mut rejected = Vec::new();
    for cand in cands {
        // one certificate per rule and level is enough
        let arity = cand.forms.len();
        if certificates.iter().any(|c| c.rule == cand.rule && c.forms.len() == arity) {
            continue;
        }
        if let Some(c) = certify(ledger, cand, &mut rejected) {
            certificates.push(c);
        }
    }
    (certificates, rejected)
}

/// Replays the case analysis for `cfg`, certifying every proposed form with
/// [`check_form`].
pub fn hyperbolicity_verdict(cfg: &Configuration) -> HyperbolicityVerdict {
    let ledger = build_ledger(cfg);
    let cands = match cfg.kind {
        CurveKind::F => diagonal_candidates(cfg),
        CurveKind::Fc => {
            let mut c = shift_candidates(cfg);
            c.extend(unpaired_candidates(cfg));
            c.extend(secant_candidates(cfg));
            c
        }
    };
    let (certificates, rejected) = run(&ledger, cands);
    let level = certificates.iter().map(|c| c.level).max().unwrap_or(Hyperbolicity::None);
    HyperbolicityVerdict {
        config: cfg.clone(),
        level,
        certificates,
        rejected,
    }
}

/// The level reached using only the unpaired indices.
pub fn unpaired_route_verdict(cfg: &Configuration) -> Hyperbolicity {
    let (certificates, _) = run(&build_ledger(cfg), unpaired_candidates(cfg));
    certificates.iter().map(|c| c.level).max().unwrap_or(Hyperbolicity::None)
}

/// The expected level read off the case statements alone, without forms.
pub fn statement_verdict(cfg: &Configuration) -> Hyperbolicity {
    let (l, m) = (cfg.l(), &cfg.m);
    let level = |alg: bool, brody: bool| match (alg, brody) {
        (_, true) => Hyperbolicity::Brody,
        (true, false) => Hyperbolicity::Algebraic,
        _ => Hyperbolicity::None,
    };
    match cfg.kind {
        CurveKind::F => {
            let alg = l >= 3 || (l == 2 && m[1] >= 2);
            let brody = l >= 4 || (l == 3 && m[0] > 1) || (l == 2 && m[1] >= 2 && m[0] >= 3);
            level(alg, brody)
        }
        CurveKind::Fc => {
            let gaps = (0..l).filter_map(|i| cfg.tau(i).map(|j| m[i].abs_diff(m[j])));
            let max_gap = if cfg.all_paired() { gaps.max().unwrap_or(0) } else { 0 };
            let shift = (max_gap >= 2, max_gap >= 3);

            let free = cfg.unpaired();
            let unpaired = if l >= 2 {
                let any = |p: &dyn Fn(usize) -> bool| free.iter().any(|&i| p(i));
                let simple = free.iter().filter(|&&i| m[i] == 1).count();
                let pairs_with_sum3 = free.iter().any(|&i| m[i] == 2) && simple >= 1;
                let alg = any(&|i| m[i] >= 2) || simple >= 2;
                let brody = any(&|i| m[i] >= 3)
                    || any(&|i| m[i] == 2 && (0..l).any(|k| k != i && m[k] >= 2))
                    || pairs_with_sum3
                    || (l >= 3 && simple >= 2);
                (alg, brody)
            } else {
                (false, false)
            };

            let secant = if cfg.n() >= 4 && l >= 2 {
                let triple_simple = l == 3 && m.iter().all(|&x| x == 1);
                let alg = m[1] >= 2 || (l >= 3 && !(triple_simple && cfg.is_three_cycle()));
                let brody = (m[1] >= 2 && !(l == 2 && m[0] == 2 && m[1] == 2))
                    || (l >= 3 && m[1] == 1 && !triple_simple);
                (alg, brody)
            } else {
                (false, false)
            };

            level(
                shift.0 || unpaired.0 || secant.0,
                shift.1 || unpaired.1 || secant.1,
            )
        }
    }
}
