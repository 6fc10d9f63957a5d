//! Four-way classification of a polynomial: uniqueness (UP) and strong
//! uniqueness (SUP) for rational and for meromorphic functions.
//!
//! Three routes feed the verdict, in order of precedence:
//! a single critical point (everything fails), the coefficient-gap route
//! on the normalized polynomial (with index-gcd witnesses), and the
//! separated route driven by critical multiplicities and affine rigidity.
//! The implication lattice then fills in what follows.

mod audit;
mod corollary;
mod witness;

use std::fmt;

use crate::criteria::{
    affine_symmetry, critical_structure, divisor_symmetry, exceptional_flags, index_data, linear_factor_scan, normalize,
    shape_gap, CriticalStructure, CurveKind, IndexData, LinearFactorScan, Rigidity,
};
use crate::error::{Error, Result};
use crate::curve::Irreducibility;
use crate::poly::{check_degree_cap, RationalPoly, DEFAULT_DEGREE_CAP};
use crate::scalar::{format_rational, Rational};

pub use audit::{consistency_audit, consistency_audit_with_cap, recognise_corollary_shape, AuditReport, CorollaryShape};
pub use corollary::{corollary_classify, CorollaryRow};
pub use witness::{
    constraint_polynomial, verify_rotation_about, witness_search, ExceptionCase, ExceptionCertificate,
    SearchMode, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    UpRational,
    SupRational,
    UpMeromorphic,
    SupMeromorphic,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::UpRational,
        Property::SupRational,
        Property::UpMeromorphic,
        Property::SupMeromorphic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::UpRational => "up_rational",
            Property::SupRational => "sup_rational",
            Property::UpMeromorphic => "up_meromorphic",
            Property::SupMeromorphic => "sup_meromorphic",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    pub fn is_strong(self) -> bool {
        matches!(self, Property::SupRational | Property::SupMeromorphic)
    }

    pub fn is_meromorphic(self) -> bool {
        matches!(self, Property::UpMeromorphic | Property::SupMeromorphic)
    }

    /// The same class with uniqueness in place of strong uniqueness.
    fn weak(self) -> Property {
        match self {
            Property::SupRational => Property::UpRational,
            Property::SupMeromorphic => Property::UpMeromorphic,
            p => p,
        }
    }

    fn rational(self) -> Property {
        match self {
            Property::UpMeromorphic => Property::UpRational,
            Property::SupMeromorphic => Property::SupRational,
            p => p,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    OutOfScope,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::OutOfScope => "out_of_scope",
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decision {
    pub answer: Answer,
    /// The rule that settled it, or empty while undecided.
    pub rule: String,
    /// Index into [`Verdict::witnesses`] justifying a `No`.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RuleStep {
    pub rule: String,
    pub inputs: String,
    pub conclusion: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    decisions: [Decision; 4],
    pub rule_trace: Vec<RuleStep>,
    pub witnesses: Vec<Witness>,
    /// Routes that disagreed; always empty unless something is wrong.
    pub conflicts: Vec<String>,
    pub out_of_scope_reason: Option<String>,
}

impl Verdict {
    pub fn decision(&self, p: Property) -> &Decision {
        &self.decisions[p.index()]
    }

    pub fn answer(&self, p: Property) -> Answer {
        self.decisions[p.index()].answer
    }

    pub fn up_rational(&self) -> Answer {
        self.answer(Property::UpRational)
    }

    pub fn sup_rational(&self) -> Answer {
        self.answer(Property::SupRational)
    }

    pub fn up_meromorphic(&self) -> Answer {
        self.answer(Property::UpMeromorphic)
    }

    pub fn sup_meromorphic(&self) -> Answer {
        self.answer(Property::SupMeromorphic)
    }

    pub fn answers(&self) -> [Answer; 4] {
        Property::ALL.map(|p| self.answer(p))
    }

    /// The witness behind a negative answer.
    pub fn justification(&self, p: Property) -> Option<&Witness> {
        self.decision(p).witness.map(|i| &self.witnesses[i])
    }

    /// Violations of the implication lattice (sup implies up,
    /// meromorphic implies rational).
    pub fn lattice_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in Property::ALL {
            let a = self.answer(p);
            for (q, why) in [(p.weak(), "sup implies up"), (p.rational(), "meromorphic implies rational")] {
                if q != p && a == Answer::Yes && self.answer(q) == Answer::No {
                    out.push(format!("{} yes but {} no ({why})", p.name(), q.name()));
                }
            }
        }
        out
    }
}

struct Builder {
    decisions: [Decision; 4],
    trace: Vec<RuleStep>,
    witnesses: Vec<Witness>,
    conflicts: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        let undecided = || Decision {
            answer: Answer::OutOfScope,
            rule: String::new(),
            witness: None,
        };
        Builder {
            decisions: [undecided(), undecided(), undecided(), undecided()],
            trace: Vec::new(),
            witnesses: Vec::new(),
            conflicts: Vec::new(),
        }
    }

    fn step(&mut self, rule: &str, inputs: impl Into<String>, conclusion: impl Into<String>) {
        self.trace.push(RuleStep {
            rule: rule.to_string(),
            inputs: inputs.into(),
            conclusion: conclusion.into(),
        });
    }

    fn witness(&mut self, w: Witness) -> usize {
        if let Some(i) = self.witnesses.iter().position(|x| *x == w) {
            return i;
        }
        self.witnesses.push(w);
        self.witnesses.len() - 1
    }

    /// Records a conclusion; an earlier one takes precedence and a
    /// disagreement is kept as a conflict.
    fn propose(&mut self, p: Property, answer: Answer, rule: &str, witness: Option<usize>) {
        let d = &mut self.decisions[p.index()];
        if d.answer == Answer::OutOfScope {
            *d = Decision {
                answer,
                rule: rule.to_string(),
                witness,
            };
        } else if d.answer != answer {
            self.conflicts.push(format!(
                "{}: {} says {answer}, {} says {}",
                p.name(),
                rule,
                d.rule,
                d.answer
            ));
        } else if d.witness.is_none() && witness.is_some() {
            d.witness = witness;
        }
    }

    /// Propagates along sup => up and meromorphic => rational until stable.
    fn close(&mut self) {
        loop {
            let mut changed = false;
            for p in Property::ALL {
                for q in [p.weak(), p.rational()] {
                    if q == p {
                        continue;
                    }
                    let (dp, dq) = (self.decisions[p.index()].clone(), self.decisions[q.index()].clone());
                    // p yes => q yes; q no => p no
                    if dp.answer == Answer::Yes && dq.answer == Answer::OutOfScope {
                        self.propose(q, Answer::Yes, &format!("implication from {}", p.name()), None);
                        changed = true;
                    }
                    if dq.answer == Answer::No && dp.answer == Answer::OutOfScope {
                        self.propose(p, Answer::No, &format!("implication from {}", q.name()), dq.witness);
                        changed = true;
                    }
                    if dp.answer == Answer::Yes && dq.answer == Answer::No {
                        let c = format!("{} yes contradicts {} no", p.name(), q.name());
                        if !self.conflicts.contains(&c) {
                            self.conflicts.push(c);
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn finish(self, out_of_scope_reason: Option<String>) -> Verdict {
        Verdict {
            decisions: self.decisions,
            rule_trace: self.trace,
            witnesses: self.witnesses,
            conflicts: self.conflicts,
            out_of_scope_reason,
        }
    }
}

pub fn classify(p: &RationalPoly) -> Result<Verdict> {
    classify_with_cap(p, DEFAULT_DEGREE_CAP)
}

pub fn classify_with_cap(p: &RationalPoly, cap: usize) -> Result<Verdict> {
    check_degree_cap(p, cap)?;
    let n = p.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::InvalidInput(format!("classification needs degree at least 2, got {n}")));
    }
    let mut b = Builder::new();
    let cs = critical_structure(p);
    let m = &cs.multiplicities;

    if cs.l == 1 {
        single_critical_point(p, &cs, &mut b);
        return Ok(b.finish(None));
    }

    let norm = normalize(p);
    let idx = index_data(&norm.p0);
    let centre = norm.shift.clone();
    b.step(
        "normalize",
        format!("shift {}", format_rational(&centre)),
        format!(
            "P0 = {}; I = {:?}, gcd_I = {}, J = {:?}, gcd_J = {}",
            norm.p0, idx.i_set, idx.gcd_i, idx.j_set, idx.gcd_j
        ),
    );
    index_witnesses(&idx, &centre, &mut b);
    coefficient_gap(&norm.p0, &idx, &mut b);
    if cs.separated {
        separated(p, &cs, &mut b);
    } else {
        b.step("separation", format!("m = {m:?}"), "two critical points share a critical value");
    }
    b.close();
    let reason = b
        .decisions
        .iter()
        .any(|d| d.answer == Answer::OutOfScope)
        .then(|| {
            "the separation condition fails and the coefficient gap is below the threshold, \
             so no decision rule applies"
                .to_string()
        });
    Ok(b.finish(reason))
}

fn single_critical_point(p: &RationalPoly, cs: &CriticalStructure, b: &mut Builder) {
    let n = cs.n;
    let root = cs.derivative_factors[0].factor.monic();
    let alpha = -root.coeff(0);
    let w = b.witness(Witness::rotation(n, alpha.clone(), 0));
    b.step(
        "single-critical-point",
        format!("P' = const (X - {})^{}", format_rational(&alpha), n - 1),
        format!("P(z(X - a) + a) = P(X) for z^{n} = 1; all four properties fail"),
    );
    for prop in Property::ALL {
        b.propose(prop, Answer::No, "single-critical-point", Some(w));
    }
    debug_assert!(b.witnesses[w].verify(p));
}

/// Rotations about the centre of `P` read off the exponent sets of `P0`.
fn index_witnesses(idx: &IndexData, centre: &Rational, b: &mut Builder) {
    if idx.gcd_i > 1 {
        let w = b.witness(Witness::rotation(idx.gcd_i, centre.clone(), 0));
        b.step(
            "index-gcd",
            format!("gcd_I = {}", idx.gcd_i),
            "P is invariant under a rotation about its centre: not UP, hence not SUP",
        );
        for prop in Property::ALL {
            b.propose(prop, Answer::No, "index-gcd", Some(w));
        }
    }
    if idx.gcd_j > 1 {
        let r = idx.gcd_j;
        let w = b.witness(Witness::rotation(r, centre.clone(), idx.l_min));
        b.step(
            "index-gcd",
            format!("gcd_J = {r}, l_min = {}", idx.l_min),
            format!("P(z(X - mu) + mu) = z^{} P(X) for z^{r} = 1: not SUP", idx.l_min % r),
        );
        b.propose(Property::SupRational, Answer::No, "index-gcd", Some(w));
        b.propose(Property::SupMeromorphic, Answer::No, "index-gcd", Some(w));
        if idx.l_min.is_multiple_of(r) {
            b.propose(Property::UpRational, Answer::No, "index-gcd", Some(w));
            b.propose(Property::UpMeromorphic, Answer::No, "index-gcd", Some(w));
        }
    }
}

/// Strong uniqueness from the gap `n - m` of the normalized polynomial.
fn coefficient_gap(p0: &RationalPoly, idx: &IndexData, b: &mut Builder) {
    let Some(gap) = shape_gap(p0).filter(|&k| k >= 3) else {
        return;
    };
    let sup = idx.gcd_i == 1 && idx.gcd_j == 1;
    let scans = [CurveKind::F, CurveKind::Fc].map(|k| match linear_factor_scan(p0, k) {
        LinearFactorScan::Factors(v) => format!("{} linear factor(s)", v.len()),
        LinearFactorScan::NoFactor => "no linear factor".to_string(),
        LinearFactorScan::Inapplicable => "scan inapplicable".to_string(),
    });
    b.step(
        "coefficient-gap",
        format!("n - m = {gap}, gcd_I = {}, gcd_J = {}; F: {}, F_c: {}", idx.gcd_i, idx.gcd_j, scans[0], scans[1]),
        format!(
            "SUP for rational functions{}: {}",
            if gap >= 4 { " and meromorphic functions" } else { "" },
            Answer::from_bool(sup)
        ),
    );
    let justify = |b: &Builder, prop: Property| (!sup).then(|| b.decisions[prop.index()].witness).flatten();
    let w = justify(b, Property::SupRational);
    b.propose(Property::SupRational, Answer::from_bool(sup), "coefficient-gap", w);
    if gap >= 4 {
        let w = justify(b, Property::SupMeromorphic);
        b.propose(Property::SupMeromorphic, Answer::from_bool(sup), "coefficient-gap", w);
    }
}

/// The multiplicity table for separated polynomials.
fn separated(p: &RationalPoly, cs: &CriticalStructure, b: &mut Builder) {
    let (n, l, m) = (cs.n, cs.l, &cs.multiplicities);
    let min = *m.last().expect("l >= 2");
    let flags = exceptional_flags(cs);
    let set_rigidity = affine_symmetry(p);
    let rigidity = divisor_symmetry(p);
    let rigid = rigidity.is_rigid();

    let up_rat = l >= 3 || (l == 2 && min >= 2);
    let up_mer = (l >= 3 && !flags.quartic_structural) || (l == 2 && min >= 2 && !flags.quintic_case);
    let sup_rat = rigid && ((l == 2 && min >= 2) || (l >= 3 && !flags.quartic_w_case));
    let sup_mer = rigid && up_mer;

    let inputs = format!("n = {n}, l = {l}, m = {m:?}");
    b.step("separated-multiplicities", inputs.clone(), format!("UP rational {}", Answer::from_bool(up_rat)));
    b.step(
        "separated-multiplicities",
        inputs.clone(),
        format!("UP meromorphic {}", Answer::from_bool(up_mer)),
    );
    b.step(
        "rigidity-not-needed",
        "affine rigidity",
        "rational UP is decided without rigidity; the meromorphic UP rule lists rigidity as a hypothesis \
         but the same table is applied, since separation with l >= 2 excludes rotations with c = 1",
    );
    let describe = |r: &Rigidity| match r {
        Rigidity::Rigid => "rigid".to_string(),
        Rigidity::Symmetric(s) => format!("not rigid: {}", s.description()),
        Rigidity::Degenerate => "at most one distinct root: not rigid".to_string(),
    };
    b.step("affine-rigidity", "zero set of P", describe(&set_rigidity));
    b.step("affine-rigidity", "zeros of P with multiplicity (decides)", describe(&rigidity));

    let exception = |b: &mut Builder, case: ExceptionCase| {
        let cert = ExceptionCertificate::build(case, cs);
        b.step(
            case.id(),
            format!("n = {n}, m = {m:?}"),
            format!(
                "{} of degree {} with multiple points {:?}: genus {}, {}",
                cert.curve,
                cert.degree,
                cert.multiplicities,
                cert.genus.map_or("unknown".to_string(), |g| g.to_string()),
                if cert.irreducibility == Irreducibility::Certified { "irreducible" } else { "irreducibility unknown" }
            ),
        );
        b.witness(Witness::GenusException(cert))
    };

    let up_rat_w = (!up_rat).then(|| exception(b, ExceptionCase::TwoCriticalOneSimple));
    b.propose(Property::UpRational, Answer::from_bool(up_rat), "separated-multiplicities", up_rat_w);

    let up_mer_w = if up_mer {
        None
    } else if let Some(w) = up_rat_w {
        Some(w)
    } else if flags.quintic_case {
        Some(exception(b, ExceptionCase::QuinticDoubleDouble))
    } else {
        Some(exception(b, ExceptionCase::SmoothCubic))
    };
    b.propose(Property::UpMeromorphic, Answer::from_bool(up_mer), "separated-multiplicities", up_mer_w);

    // rigidity only needs a witness where the table alone would say yes
    let table_sup_rat = (l == 2 && min >= 2) || (l >= 3 && !flags.quartic_w_case);
    let symmetry_w = if !rigid && (table_sup_rat || up_mer) {
        symmetry_witness(p, &rigidity, b)
    } else {
        None
    };
    let sup_rat_w = if sup_rat {
        None
    } else if let Some(w) = up_rat_w {
        Some(w)
    } else if !table_sup_rat {
        Some(exception(b, ExceptionCase::WCase))
    } else {
        symmetry_w
    };
    b.propose(Property::SupRational, Answer::from_bool(sup_rat), "separated-multiplicities", sup_rat_w);
    let sup_mer_w = if sup_mer { None } else { up_mer_w.or(symmetry_w) };
    b.propose(Property::SupMeromorphic, Answer::from_bool(sup_mer), "separated-multiplicities", sup_mer_w);
}

/// A verified map behind a symmetric divisor: the rotation about the
/// centroid, otherwise whatever the oracle finds.
fn symmetry_witness(p: &RationalPoly, rigidity: &Rigidity, b: &mut Builder) -> Option<usize> {
    let n = p.degree().expect("nonzero");
    if let Rigidity::Symmetric(s) = rigidity {
        let w = Witness::rotation(s.rotation_order, s.centroid.clone(), n);
        if w.verify(p) {
            return Some(b.witness(w));
        }
    }
    if let Some(w) = witness_search(p, SearchMode::AnyC, n) {
        return Some(b.witness(w));
    }
    b.conflicts
        .push("zero set is not rigid but no affine map carries P to a multiple of itself".to_string());
    None
}
