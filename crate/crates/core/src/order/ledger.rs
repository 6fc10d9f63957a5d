use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::{Atom, Configuration, Form, Wr};
use crate::criteria::CurveKind;
use crate::curve::PointLabel;
use crate::error::{Error, Result};

/// Lower bound `coeff * k + constant` for the order of an atom along a
/// branch through a marked point, `k >= 1` the branch parameter. `exact`
/// marks bounds that are equalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderExpr {
    pub coeff: i64,
    pub constant: i64,
    pub exact: bool,
}

impl OrderExpr {
    const ZERO: OrderExpr = OrderExpr { coeff: 0, constant: 0, exact: true };
    const NONNEGATIVE: OrderExpr = OrderExpr { coeff: 0, constant: 0, exact: false };

    fn exact(coeff: i64, constant: i64) -> Self {
        OrderExpr { coeff, constant, exact: true }
    }

    fn at_least(coeff: i64, constant: i64) -> Self {
        OrderExpr { coeff, constant, exact: false }
    }

    pub fn eval(&self, k: i64) -> i64 {
        self.coeff * k + self.constant
    }
}

impl fmt::Display for OrderExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.exact { "=" } else { ">=" };
        match (self.coeff, self.constant) {
            (0, c) => write!(f, "{rel} {c}"),
            (a, 0) => write!(f, "{rel} {a}k"),
            (a, c) if c < 0 => write!(f, "{rel} {a}k - {}", -c),
            (a, c) => write!(f, "{rel} {a}k + {c}"),
        }
    }
}

/// A marked point with the orders of `X - a_i Z` and `Y - a_j Z` along a
/// branch, both multiples of the branch parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoint {
    pub i: usize,
    pub j: usize,
    pub t: i64,
    pub s: i64,
}

impl MarkedPoint {
    pub fn label(&self, kind: CurveKind) -> PointLabel {
        match kind {
            CurveKind::F => PointLabel::Diag(self.i + 1),
            CurveKind::Fc => PointLabel::Pair(self.i + 1, self.j + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrderLedger {
    pub config: Configuration,
    pub points: Vec<MarkedPoint>,
}

/// On `C` the point `(a_i, a_i, 1)` has `ord(X - a_i) = ord(Y - a_i) = t`.
/// On `C_c` the local equation `(X - a_i)^(m_i + 1) ~ (Y - a_j)^(m_j + 1)`
/// forces `(m_i + 1) t = (m_j + 1) s`, so with `g = gcd(m_i + 1, m_j + 1)`
/// we get `t = k (m_j + 1)/g` and `s = k (m_i + 1)/g`.
pub fn build_ledger(config: &Configuration) -> OrderLedger {
    let points = match config.kind {
        CurveKind::F => (0..config.l())
            .map(|i| MarkedPoint { i, j: i, t: 1, s: 1 })
            .collect(),
        CurveKind::Fc => (0..config.l())
            .filter_map(|i| config.tau(i).map(|j| (i, j)))
            .map(|(i, j)| {
                let (a, b) = (config.m[i] as i64 + 1, config.m[j] as i64 + 1);
                let g = a.gcd(&b);
                MarkedPoint { i, j, t: b / g, s: a / g }
            })
            .collect(),
    };
    OrderLedger {
        config: config.clone(),
        points,
    }
}

impl OrderLedger {
    pub fn atom_order(&self, p: &MarkedPoint, atom: Atom) -> OrderExpr {
        match (self.config.kind, atom) {
            (_, Atom::Xa(a)) if a == p.i => OrderExpr::exact(p.t, 0),
            (_, Atom::Ya(b)) if b == p.j => OrderExpr::exact(p.s, 0),
            (_, Atom::Xa(_)) | (_, Atom::Ya(_)) => OrderExpr::ZERO,
            (_, Atom::X) | (_, Atom::Y) => OrderExpr::NONNEGATIVE,
            (CurveKind::F, Atom::XminusY) => OrderExpr::at_least(p.t, 0),
            (CurveKind::Fc, Atom::XminusY) => OrderExpr::ZERO,
            (_, Atom::L(a, b)) if a == p.i || b == p.i => OrderExpr::at_least(p.t.min(p.s), 0),
            (_, Atom::L(..)) => OrderExpr::NONNEGATIVE,
        }
    }

    /// On `C_c`, `W(Y,Z) = -dY` and `W(X,Z) = -dX` in the chart `Z = 1`.
    /// On `C` only non-negativity is used.
    pub fn wronskian_order(&self, p: &MarkedPoint, w: Wr) -> OrderExpr {
        match (self.config.kind, w) {
            (CurveKind::F, _) => OrderExpr::NONNEGATIVE,
            (CurveKind::Fc, Wr::YZ) => OrderExpr::exact(p.s, -1),
            (CurveKind::Fc, Wr::XZ) => OrderExpr::exact(p.t, -1),
        }
    }

    fn validate(&self, form: &Form) -> Result<()> {
        let l = self.config.l();
        for &atom in form.exps.keys() {
            let ok = match atom {
                Atom::Xa(i) | Atom::Ya(i) => i < l,
                Atom::L(a, b) => {
                    self.config.kind == CurveKind::Fc
                        && a != b
                        && self.config.is_paired(a)
                        && self.config.is_paired(b)
                }
                Atom::XminusY | Atom::X | Atom::Y => true,
            };
            if !ok {
                return Err(Error::InvalidInput(format!(
                    "atom {atom} is not defined for {}",
                    self.config
                )));
            }
        }
        form.materialize().map(|_| ())
    }

    /// Exponents of the polynomial `R` with `form = R * gamma` on the curve.
    pub fn gamma_factor(&self, form: &Form) -> BTreeMap<Atom, i32> {
        let mut exps = form.exps.clone();
        for (i, &m) in self.config.m.iter().enumerate() {
            let atom = match form.wronskian {
                Wr::YZ => Atom::Xa(i),
                Wr::XZ => Atom::Ya(i),
            };
            *exps.entry(atom).or_insert(0) += m as i32;
        }
        // on C the partials carry an extra 1/(X - Y)
        if self.config.kind == CurveKind::F {
            *exps.entry(Atom::XminusY).or_insert(0) -= 1;
        }
        exps.retain(|_, e| *e != 0);
        exps
    }
}

/// The order of a form at one marked point, as a chain of atom orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointBound {
    pub label: PointLabel,
    pub chain: Vec<(Atom, i32, OrderExpr)>,
    pub wronskian: OrderExpr,
    /// Total lower bound `coeff * k + constant`.
    pub coeff: i64,
    pub constant: i64,
    pub nonnegative: bool,
}

impl PointBound {
    /// Replays the chain with `k` and actual orders `bound + slack(atom)` for
    /// the inexact atoms.
    pub fn replay(&self, k: i64, slack: &mut dyn FnMut(Atom) -> i64) -> i64 {
        let mut total = self.wronskian.eval(k);
        for &(atom, e, ord) in &self.chain {
            let extra = if ord.exact { 0 } else { slack(atom) };
            total += e as i64 * (ord.eval(k) + extra);
        }
        total
    }
}

impl fmt::Display for PointBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ord >= {}k", self.label, self.coeff)?;
        match self.constant {
            0 => {}
            c if c < 0 => write!(f, " - {}", -c)?,
            c => write!(f, " + {c}")?,
        }
        write!(f, " ({})", if self.nonnegative { "ok" } else { "negative" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormVerdict {
    pub form: Form,
    pub gamma_factor: BTreeMap<Atom, i32>,
    pub points: Vec<PointBound>,
    pub regular: bool,
    pub reason: Option<String>,
}

impl fmt::Display for FormVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.form)?;
        for p in &self.points {
            writeln!(f, "  {p}")?;
        }
        match &self.reason {
            None => write!(f, "  regular"),
            Some(r) => write!(f, "  unknown: {r}"),
        }
    }
}

/// Decides regularity of `form` on the curve described by the ledger.
///
/// Away from marked points the curve is smooth and `form = R gamma`; the
/// form is regular there when `R` has no denominator, except `X - Y` on
/// `C`, which vanishes on the curve only at marked points. At each marked
/// point the lower bound must be non-negative for every `k >= 1`.
pub fn check_form(ledger: &OrderLedger, form: &Form) -> Result<FormVerdict> {
    ledger.validate(form)?;
    let kind = ledger.config.kind;
    let gamma_factor = ledger.gamma_factor(form);
    let mut reason = gamma_factor
        .iter()
        .find(|&(&a, &e)| e < 0 && !(kind == CurveKind::F && a == Atom::XminusY))
        .map(|(a, _)| format!("possible pole along {a} at smooth points"));

    let mut points = Vec::new();
    for p in &ledger.points {
        let mut chain = Vec::new();
        let wronskian = ledger.wronskian_order(p, form.wronskian);
        let (mut coeff, mut constant) = (wronskian.coeff, wronskian.constant);
        for (&atom, &e) in &form.exps {
            let ord = ledger.atom_order(p, atom);
            if e < 0 && !ord.exact {
                reason.get_or_insert_with(|| {
                    format!("{atom} in the denominator has no upper order bound at {}", p.label(kind))
                });
            }
            coeff += e as i64 * ord.coeff;
            constant += e as i64 * ord.constant;
            chain.push((atom, e, ord));
        }
        let nonnegative = coeff >= 0 && coeff + constant >= 0;
        if !nonnegative {
            reason.get_or_insert_with(|| format!("negative order bound at {}", p.label(kind)));
        }
        points.push(PointBound {
            label: p.label(kind),
            chain,
            wronskian,
            coeff,
            constant,
            nonnegative,
        });
    }
    Ok(FormVerdict {
        form: form.clone(),
        gamma_factor,
        points,
        regular: reason.is_none(),
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paired_orders_follow_multiplicities() {
        let cfg = Configuration::paired(vec![3, 1], vec![Some(1), None]).unwrap();
        let ledger = build_ledger(&cfg);
        let p = &ledger.points[0];
        // 4 t = 2 s
        assert_eq!((p.t, p.s), (1, 2));
        let cfg = Configuration::paired(vec![3, 2], vec![Some(1), Some(0)]).unwrap();
        let ledger = build_ledger(&cfg);
        assert_eq!((ledger.points[0].t, ledger.points[0].s), (3, 4));
        assert_eq!((ledger.points[1].t, ledger.points[1].s), (4, 3));
    }

    #[test]
    fn omega0_fails_at_the_double_point() {
        let cfg = Configuration::diagonal(vec![2, 1]).unwrap();
        let ledger = build_ledger(&cfg);
        let form = Form::new(
            "omega0",
            Wr::YZ,
            &[(Atom::XminusY, 1), (Atom::Xa(0), -2), (Atom::Xa(1), -1)],
        );
        let v = check_form(&ledger, &form).unwrap();
        assert!(!v.regular);
        assert_eq!((v.points[0].coeff, v.points[0].constant), (-1, 0));
        assert!(v.points[1].nonnegative);
    }

    #[test]
    fn denominators_need_exact_orders() {
        let cfg = Configuration::diagonal(vec![1, 1, 1]).unwrap();
        let ledger = build_ledger(&cfg);
        let form = Form::new(
            "bad",
            Wr::YZ,
            &[(Atom::XminusY, -1), (Atom::Xa(0), 1), (Atom::Xa(1), -1), (Atom::Xa(2), -1)],
        );
        let v = check_form(&ledger, &form).unwrap();
        assert!(!v.regular);
        assert!(v.reason.unwrap().contains("upper order bound"));
    }

    #[test]
    fn smooth_points_reject_uncancelled_poles() {
        let cfg = Configuration::paired(vec![1, 1], vec![None, None]).unwrap();
        let ledger = build_ledger(&cfg);
        let form = Form::new("eta", Wr::YZ, &[(Atom::Xa(0), -2)]);
        let v = check_form(&ledger, &form).unwrap();
        assert!(!v.regular);
        assert_eq!(v.gamma_factor.get(&Atom::Xa(0)), Some(&-1));
    }

    #[test]
    fn malformed_forms_are_errors() {
        let cfg = Configuration::diagonal(vec![2, 1]).unwrap();
        let ledger = build_ledger(&cfg);
        let wrong_degree = Form::new("w", Wr::YZ, &[(Atom::Xa(0), -1)]);
        assert!(check_form(&ledger, &wrong_degree).is_err());
        let no_line = Form::new("l", Wr::YZ, &[(Atom::L(0, 1), 1), (Atom::Xa(0), -3)]);
        assert!(check_form(&ledger, &no_line).is_err());
    }
}
