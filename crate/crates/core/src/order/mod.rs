//! Symbolic order calculus for Wronskian-type 1-forms on `C` and `C_c`.
//!
//! A form is a product of linear atoms with integer exponents times one
//! Wronskian. Regularity is decided at two kinds of points:
//!
//! * marked points: the diagonal points `(a_i, a_i, 1)` of `C`, and the
//!   paired points `(a_i, a_tau(i), 1)` of `C_c`. Orders of the atoms along
//!   any local branch are expressed through one positive integer unknown,
//!   and the order of the form is a lower bound linear in it;
//! * every other point of the curve, which is smooth. There the form is
//!   rewritten through `gamma = W(Y,Z)/F_X = W(Z,X)/F_Y`, which is regular
//!   at smooth points, and the remaining factor must be polynomial.

mod dispatch;
mod enumerate;
mod gap;
mod ledger;

pub use dispatch::{
    hyperbolicity_verdict, statement_verdict, unpaired_route_verdict, Certificate,
    HyperbolicityVerdict,
};
pub use enumerate::{configurations_up_to, pairings_up_to_isomorphism};
pub use gap::{gap_route, recentred_expansion_check, GapCertificate, RecentredExpansion};
pub use ledger::{build_ledger, check_form, FormVerdict, OrderExpr, OrderLedger, PointBound};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::criteria::CurveKind;
use crate::curve::{make_wronskian_form, Pair, RationalForm, WronskianForm};
use crate::error::{Error, Result};
use crate::poly::{HomogPoly, Var};
use crate::scalar::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperbolicity {
    None,
    Algebraic,
    Brody,
}

impl fmt::Display for Hyperbolicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hyperbolicity::None => "none",
            Hyperbolicity::Algebraic => "algebraic",
            Hyperbolicity::Brody => "brody",
        })
    }
}

/// Abstract data of `P` seen by the order calculus: the multiplicities of
/// the critical points and, for `C_c`, the pairing `tau` (zero-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub kind: CurveKind,
    /// Sorted in non-increasing order.
    pub m: Vec<usize>,
    /// `tau[i] = Some(j)` when `(a_i, a_j, 1)` lies on `C_c`; empty for `F`.
    pub tau: Vec<Option<usize>>,
}

impl Configuration {
    pub fn new(kind: CurveKind, m: Vec<usize>, tau: Vec<Option<usize>>) -> Result<Self> {
        if m.is_empty() || m.contains(&0) {
            return Err(Error::InvalidInput("multiplicities must be positive".into()));
        }
        if m.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("multiplicities must be non-increasing".into()));
        }
        let tau = match kind {
            CurveKind::F if tau.iter().any(Option::is_some) => {
                return Err(Error::InvalidInput("a pairing only applies to F_c".into()))
            }
            CurveKind::F => Vec::new(),
            CurveKind::Fc => {
                let mut tau = tau;
                if tau.len() > m.len() {
                    return Err(Error::InvalidInput("pairing longer than l".into()));
                }
                tau.resize(m.len(), None);
                crate::curve::validate_pairing(&tau)?;
                tau
            }
        };
        Ok(Configuration { kind, m, tau })
    }

    pub fn diagonal(m: Vec<usize>) -> Result<Self> {
        Configuration::new(CurveKind::F, m, Vec::new())
    }

    pub fn paired(m: Vec<usize>, tau: Vec<Option<usize>>) -> Result<Self> {
        Configuration::new(CurveKind::Fc, m, tau)
    }

    pub fn l(&self) -> usize {
        self.m.len()
    }

    pub fn n(&self) -> usize {
        1 + self.m.iter().sum::<usize>()
    }

    pub fn tau(&self, i: usize) -> Option<usize> {
        self.tau.get(i).copied().flatten()
    }

    pub fn is_paired(&self, i: usize) -> bool {
        self.tau(i).is_some()
    }

    pub fn unpaired(&self) -> Vec<usize> {
        (0..self.l()).filter(|&i| !self.is_paired(i)).collect()
    }

    pub fn all_paired(&self) -> bool {
        self.kind == CurveKind::Fc && (0..self.l()).all(|i| self.is_paired(i))
    }

    /// `l = 3`, every index paired: necessarily a 3-cycle.
    pub fn is_three_cycle(&self) -> bool {
        self.l() == 3 && self.all_paired()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            CurveKind::F => "F",
            CurveKind::Fc => "F_c",
        };
        write!(f, "{kind} m={:?}", self.m)?;
        if self.kind == CurveKind::Fc {
            let tau: Vec<String> = self
                .tau
                .iter()
                .enumerate()
                .filter_map(|(i, t)| t.map(|j| format!("{}->{}", i + 1, j + 1)))
                .collect();
            write!(f, " tau={{{}}}", tau.join(", "))?;
        }
        Ok(())
    }
}

/// Linear factors a form is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// `X - a_i Z`
    Xa(usize),
    /// `Y - a_j Z`
    Ya(usize),
    /// `X - Y`
    XminusY,
    /// The line through the paired points of `i` and `j`.
    L(usize, usize),
    /// The coordinate `X` used as a multiplier.
    X,
    /// The coordinate `Y` used as a multiplier.
    Y,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Xa(i) => write!(f, "(X-a{}Z)", i + 1),
            Atom::Ya(j) => write!(f, "(Y-a{}Z)", j + 1),
            Atom::XminusY => write!(f, "(X-Y)"),
            Atom::L(i, j) => write!(f, "L{}{}", i + 1, j + 1),
            Atom::X => write!(f, "X"),
            Atom::Y => write!(f, "Y"),
        }
    }
}

/// The Wronskian carried by a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Wr {
    /// `W(Y, Z)`
    YZ,
    /// `W(X, Z)`
    XZ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub name: String,
    pub wronskian: Wr,
    pub exps: BTreeMap<Atom, i32>,
}

impl Form {
    pub fn new(name: impl Into<String>, wronskian: Wr, factors: &[(Atom, i32)]) -> Self {
        let mut exps = BTreeMap::new();
        for &(a, e) in factors {
            *exps.entry(a).or_insert(0) += e;
        }
        exps.retain(|_, e| *e != 0);
        Form {
            name: name.into(),
            wronskian,
            exps,
        }
    }

    pub fn exponent(&self, a: Atom) -> i32 {
        self.exps.get(&a).copied().unwrap_or(0)
    }

    /// Numerator degree minus denominator degree of the coefficient.
    pub fn weight(&self) -> i32 {
        self.exps.values().sum()
    }

    /// Builds a concrete stand-in with distinct rational critical points
    /// `a_i = i + 1` and checks the degree bookkeeping on it.
    pub fn materialize(&self) -> Result<WronskianForm> {
        let x = HomogPoly::var(Var::X);
        let y = HomogPoly::var(Var::Y);
        let z = HomogPoly::var(Var::Z);
        let a = |i: usize| int(i as i64 + 1);
        let linear = |atom: Atom| -> RationalForm {
            match atom {
                Atom::Xa(i) => &x - &z.scale(&a(i)),
                Atom::Ya(j) => &y - &z.scale(&a(j)),
                Atom::XminusY => &x - &y,
                Atom::L(i, j) => &(&y - &x) + &z.scale(&int((i + j) as i64)),
                Atom::X => x.clone(),
                Atom::Y => y.clone(),
            }
        };
        let mut num = HomogPoly::constant(Rational::one());
        let mut den = HomogPoly::constant(Rational::one());
        for (&atom, &e) in &self.exps {
            let f = linear(atom).pow(e.unsigned_abs());
            if e > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        let pair = match self.wronskian {
            Wr::YZ => Pair::YZ,
            Wr::XZ => {
                // W(X,Z) = -W(Z,X)
                num = num.scale(&int(-1));
                Pair::ZX
            }
        };
        make_wronskian_form(num, den, pair)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = match self.wronskian {
            Wr::YZ => "W(Y,Z)",
            Wr::XZ => "W(X,Z)",
        };
        let mut num = vec![w.to_string()];
        let mut den = Vec::new();
        for (a, &e) in &self.exps {
            let s = if e.abs() == 1 { a.to_string() } else { format!("{a}^{}", e.abs()) };
            if e > 0 {
                num.push(s);
            } else {
                den.push(s);
            }
        }
        write!(f, "{}: {}", self.name, num.join(" "))?;
        if !den.is_empty() {
            write!(f, " / {}", den.join(" "))?;
        }
        Ok(())
    }
}
