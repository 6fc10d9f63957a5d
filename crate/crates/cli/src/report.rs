//! Report structures. Field order is declaration order and every rational
//! is a `"p/q"` string, so reports are byte-stable. The schema lives in
//! `schema/report.schema.json`.

use serde::Serialize;
use supoly::classifier::{AuditReport, Property, Verdict, Witness};
use supoly::criteria::CriticalStructure;
use supoly::curve::{Irreducibility, SingularCensus};
use supoly::order::{Certificate, GapCertificate, HyperbolicityVerdict};
use supoly::scalar::format_rational;
use supoly::RationalPoly;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Header {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
}

impl Header {
    pub fn new(command: &'static str) -> Self {
        Header {
            schema_version: SCHEMA_VERSION,
            tool: "supoly",
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
        }
    }
}

#[derive(Serialize)]
pub struct PolyEcho {
    pub canonical: String,
    pub degree: Option<usize>,
    /// `coefficients[k]` is the coefficient of `X^k`.
    pub coefficients: Vec<String>,
}

impl PolyEcho {
    pub fn new(p: &RationalPoly) -> Self {
        PolyEcho {
            canonical: p.to_string(),
            degree: p.degree(),
            coefficients: p.coeffs().iter().map(format_rational).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct Answers {
    pub up_rational: &'static str,
    pub sup_rational: &'static str,
    pub up_meromorphic: &'static str,
    pub sup_meromorphic: &'static str,
}

impl Answers {
    pub fn of(v: &Verdict) -> Self {
        Answers {
            up_rational: v.up_rational().as_str(),
            sup_rational: v.sup_rational().as_str(),
            up_meromorphic: v.up_meromorphic().as_str(),
            sup_meromorphic: v.sup_meromorphic().as_str(),
        }
    }
}

#[derive(Serialize)]
pub struct DecisionOut {
    pub property: &'static str,
    pub answer: &'static str,
    pub rule: String,
    pub witness: Option<usize>,
}

#[derive(Serialize)]
pub struct StepOut {
    pub rule: String,
    pub inputs: String,
    pub conclusion: String,
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub kind: &'static str,
    pub identity: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<ExceptionOut>,
}

#[derive(Serialize)]
pub struct ExceptionOut {
    pub case: &'static str,
    pub curve: &'static str,
    pub degree: usize,
    pub multiple_points: Vec<usize>,
    pub irreducible: bool,
    pub genus: Option<i64>,
    pub expected_genus: i64,
}

impl WitnessOut {
    pub fn new(w: &Witness, p: &RationalPoly) -> Self {
        let mut out = WitnessOut {
            kind: w.kind(),
            identity: w.identity(),
            verified: w.verify(p),
            order: None,
            center: None,
            c_exponent: None,
            beta: None,
            gamma: None,
            c: None,
            exception: None,
        };
        match w {
            Witness::Scaling { order, center } => {
                out.order = Some(*order);
                out.center = Some(format_rational(center));
                out.c_exponent = Some(0);
            }
            Witness::ScalingWithC { order, center, c_exponent } => {
                out.order = Some(*order);
                out.center = Some(format_rational(center));
                out.c_exponent = Some(*c_exponent);
            }
            Witness::Affine { beta, gamma, c } => {
                out.beta = Some(format_rational(beta));
                out.gamma = Some(format_rational(gamma));
                out.c = Some(format_rational(c));
            }
            Witness::GenusException(e) => {
                out.exception = Some(ExceptionOut {
                    case: e.case.id(),
                    curve: e.curve,
                    degree: e.degree,
                    multiple_points: e.multiplicities.clone(),
                    irreducible: e.irreducibility == Irreducibility::Certified,
                    genus: e.genus,
                    expected_genus: e.expected_genus,
                });
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct CriticalOut {
    pub n: usize,
    pub l: usize,
    pub multiplicities: Vec<usize>,
    pub separated: bool,
    pub critical_value_polynomial: String,
}

impl CriticalOut {
    pub fn new(cs: &CriticalStructure) -> Self {
        CriticalOut {
            n: cs.n,
            l: cs.l,
            multiplicities: cs.multiplicities.clone(),
            separated: cs.separated,
            critical_value_polynomial: cs.q.to_string().replace('X', "T"),
        }
    }
}

#[derive(Serialize)]
pub struct CensusOut {
    pub degree: usize,
    pub points: Vec<CensusPointOut>,
    pub irreducible: bool,
    pub genus: Option<i64>,
}

#[derive(Serialize)]
pub struct CensusPointOut {
    pub label: String,
    pub multiplicity: usize,
    pub ordinary: bool,
}

impl CensusOut {
    pub fn new(c: &SingularCensus, irreducibility: Irreducibility, genus: Option<i64>) -> Self {
        CensusOut {
            degree: c.degree,
            points: c
                .entries
                .iter()
                .map(|e| CensusPointOut {
                    label: e.label.to_string(),
                    multiplicity: e.multiplicity,
                    ordinary: e.ordinary,
                })
                .collect(),
            irreducible: irreducibility == Irreducibility::Certified,
            genus,
        }
    }
}

#[derive(Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct GapOut {
    pub gap: usize,
    pub level: String,
    pub forms: Vec<String>,
    pub checks: Vec<CheckOut>,
}

impl GapOut {
    pub fn new(g: &GapCertificate) -> Self {
        GapOut {
            gap: g.gap,
            level: g.level.to_string(),
            forms: g.forms.iter().map(|f| f.to_string()).collect(),
            checks: g
                .checks
                .iter()
                .map(|(name, passed)| CheckOut { name: name.clone(), passed: *passed })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct FormOut {
    pub form: String,
    pub regular: bool,
    /// One inequality per marked point, `ord >= a k + b`.
    pub ledger: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct CertificateOut {
    pub rule: &'static str,
    pub level: String,
    pub independence_degree: Option<u32>,
    pub needs_expansion_check: bool,
    pub forms: Vec<FormOut>,
}

impl CertificateOut {
    pub fn new(c: &Certificate) -> Self {
        CertificateOut {
            rule: c.rule,
            level: c.level.to_string(),
            independence_degree: c.independence_degree,
            needs_expansion_check: c.needs_expansion_check,
            forms: c
                .forms
                .iter()
                .map(|f| FormOut {
                    form: f.form.to_string(),
                    regular: f.regular,
                    ledger: f.points.iter().map(|p| p.to_string()).collect(),
                    reason: f.reason.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct OrderOut {
    pub configuration: String,
    pub level: String,
    pub expected_level: String,
    pub certificates: Vec<CertificateOut>,
    pub rejected: Vec<String>,
}

impl OrderOut {
    pub fn new(v: &HyperbolicityVerdict, expected: String) -> Self {
        OrderOut {
            configuration: v.config.to_string(),
            level: v.level.to_string(),
            expected_level: expected,
            certificates: v.certificates.iter().map(CertificateOut::new).collect(),
            rejected: v.rejected.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct Certificates {
    pub critical: CriticalOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_gap: Option<GapOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_calculus: Option<OrderOut>,
}

#[derive(Serialize)]
pub struct AuditOut {
    pub passed: bool,
    pub checks: Vec<AuditCheckOut>,
}

#[derive(Serialize)]
pub struct AuditCheckOut {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl AuditOut {
    pub fn new(a: &AuditReport) -> Self {
        AuditOut {
            passed: a.passed(),
            checks: a
                .checks
                .iter()
                .map(|c| AuditCheckOut {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub header: Header,
    pub input: PolyEcho,
    pub verdict: Answers,
    pub decisions: Vec<DecisionOut>,
    pub rule_trace: Vec<StepOut>,
    pub witnesses: Vec<WitnessOut>,
    pub certificates: Certificates,
    pub audit: AuditOut,
    pub conflicts: Vec<String>,
    pub out_of_scope_reason: Option<String>,
    pub assumptions: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub fn decisions(v: &Verdict) -> Vec<DecisionOut> {
    Property::ALL
        .iter()
        .map(|&p| {
            let d = v.decision(p);
            DecisionOut {
                property: p.name(),
                answer: d.answer.as_str(),
                rule: d.rule.clone(),
                witness: d.witness,
            }
        })
        .collect()
}

pub fn trace(v: &Verdict) -> Vec<StepOut> {
    v.rule_trace
        .iter()
        .map(|s| StepOut {
            rule: s.rule.clone(),
            inputs: s.inputs.clone(),
            conclusion: s.conclusion.clone(),
        })
        .collect()
}

/// Standing assumptions behind every classification.
pub const ASSUMPTIONS: [&str; 5] = [
    "coefficients are rational; roots of unity are handled modulo cyclotomic polynomials",
    "multiple-point censuses of the curves are the known statements for separated polynomials",
    "irreducibility certificates exclude linear components, each of which already defeats uniqueness",
    "affine rigidity is read on the zeros of P counted with multiplicity",
    "inputs outside every decision rule are reported out of scope, never extrapolated",
];

#[derive(Serialize)]
pub struct ErrorReport {
    #[serde(flatten)]
    pub header: Header,
    pub input: String,
    pub error: ErrorOut,
}

#[derive(Serialize)]
pub struct ErrorOut {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Vec<&'static str>>,
}

#[derive(Serialize)]
pub struct IdentityOut {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct CurveReport {
    #[serde(flatten)]
    pub header: Header,
    pub input: PolyEcho,
    pub curve: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    pub defining_form: String,
    pub degree: u32,
    pub identities: Vec<IdentityOut>,
    pub identities_hold: bool,
    pub critical: CriticalOut,
    /// One-based pairs `i -> j` with `P(a_i) = c P(a_j)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<String>>,
    pub census: Option<CensusOut>,
    pub census_note: Option<String>,
}

#[derive(Serialize)]
pub struct FormsReport {
    #[serde(flatten)]
    pub header: Header,
    pub order_calculus: OrderOut,
    pub unpaired_route_level: String,
}

#[derive(Serialize)]
pub struct WitnessReport {
    #[serde(flatten)]
    pub header: Header,
    pub input: PolyEcho,
    pub mode: &'static str,
    pub bound: usize,
    pub constraint_polynomial: String,
    pub witness: Option<WitnessOut>,
}

#[derive(Serialize)]
pub struct CorollaryReport {
    #[serde(flatten)]
    pub header: Header,
    pub alpha: String,
    pub n: usize,
    pub m: usize,
    pub a: String,
    pub b: String,
    pub polynomial: String,
    pub row: Answers,
    pub classified: Answers,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct CriterionOut {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub tolerance: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
pub struct SelftestReport {
    #[serde(flatten)]
    pub header: Header,
    pub seed: u64,
    pub property_cases: usize,
    pub criteria: Vec<CriterionOut>,
    pub passed: bool,
}
