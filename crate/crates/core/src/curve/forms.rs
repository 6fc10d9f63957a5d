use std::fmt;

use num_traits::Zero;

use super::RationalForm;
use crate::error::{Error, Result};
use crate::poly::{gcd, HomogPoly, Poly, RationalPoly, Var};
use crate::scalar::{int, Rational};

/// The Wronskian `W(u, v) = u dv - v du` of two coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    XY,
    YZ,
    ZX,
}

impl Pair {
    /// The partial derivative matching this Wronskian in
    /// `W(X,Y)/F_Z = W(Y,Z)/F_X = W(Z,X)/F_Y`.
    pub fn partial_var(self) -> Var {
        match self {
            Pair::XY => Var::Z,
            Pair::YZ => Var::X,
            Pair::ZX => Var::Y,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::XY => "W(X,Y)",
            Pair::YZ => "W(Y,Z)",
            Pair::ZX => "W(Z,X)",
        })
    }
}

/// `(numerator / denominator) * W(pair)` with `deg denominator = deg numerator + 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct WronskianForm {
    pub numerator: RationalForm,
    pub denominator: RationalForm,
    pub pair: Pair,
}

pub fn make_wronskian_form(
    numerator: RationalForm,
    denominator: RationalForm,
    pair: Pair,
) -> Result<WronskianForm> {
    if denominator.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if denominator.degree() != numerator.degree() + 2 {
        return Err(Error::FormDegree {
            numerator: numerator.degree() as usize,
            denominator: denominator.degree() as usize,
        });
    }
    Ok(WronskianForm {
        numerator,
        denominator,
        pair,
    })
}

impl fmt::Display for WronskianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}] * {}", self.numerator, self.denominator, self.pair)
    }
}

/// `true` when the two forms agree on every component of `[curve = 0]`,
/// checked as `a_num b_den dF_a - b_num a_den dF_b = 0 mod curve`.
pub fn same_form_on_curve(a: &WronskianForm, b: &WronskianForm, curve: &RationalForm) -> bool {
    let da = curve.partial(a.pair.partial_var());
    let db = curve.partial(b.pair.partial_var());
    let lhs = &(&a.numerator * &b.denominator) * &da;
    let rhs = &(&b.numerator * &a.denominator) * &db;
    let diff = &lhs - &rhs;
    diff.is_zero() || diff.is_divisible_by(curve)
}

fn restrict_to_infinity(f: &RationalForm) -> RationalPoly {
    // binary form f(X, Y, 0) on the chart Y = 1, indexed by the power of X
    let mut coeffs = vec![Rational::zero(); f.degree() as usize + 1];
    for (&(i, _, k), c) in f.terms() {
        if k == 0 {
            coeffs[i as usize] = c.clone();
        }
    }
    Poly::new(coeffs)
}

/// `true` when `d1(X, Y, 0)` and `d2(X, Y, 0)` have no common zero
/// `[X : Y] != [0 : 0]`, so poles on `[Z = 0]` are excluded.
pub fn boundary_disjoint(d1: &RationalForm, d2: &RationalForm) -> bool {
    let (b1, b2) = (restrict_to_infinity(d1), restrict_to_infinity(d2));
    if b1.is_zero() || b2.is_zero() {
        return false;
    }
    // a common zero at [1 : 0] means neither reaches its top X-degree
    let top1 = b1.degree() == Some(d1.degree() as usize);
    let top2 = b2.degree() == Some(d2.degree() as usize);
    if !top1 && !top2 {
        return false;
    }
    gcd(&b1, &b2).degree() == Some(0)
}

fn monomials(degree: u32) -> Vec<RationalForm> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push(HomogPoly::from_terms(
                degree,
                [((i, j, degree - i - j), int(1))],
            ));
        }
    }
    out
}

/// Regular 1-forms on `C_{m,n} = [X^n + Y^m Z^(n-m) + Z^n = 0]`.
///
/// Builds `eta = W(Z,X) / (Y^(m-1) Z)`, checks that it agrees with
/// `m W(X,Y) / (k Y^m + n Z^m)` on the curve (`k = n - m`) and that the
/// two denominators meet only at `[1:0:0]`, off the curve. Returns the
/// forms `Q eta` for the monomials `Q` of degree `m - 2`; their number,
/// `m(m-1)/2`, bounds the genus from below.
pub fn mixed_fermat_forms(m: usize, n: usize) -> Result<Vec<WronskianForm>> {
    if !(n > m && m >= 2 && n - m >= 2) {
        return Err(Error::InvalidInput(format!(
            "example family needs n > m >= 2 and n - m >= 2, got m = {m}, n = {n}"
        )));
    }
    let k = (n - m) as u32;
    let (m32, n32) = (m as u32, n as u32);
    let one = || int(1);
    let curve = HomogPoly::from_terms(
        n32,
        [((n32, 0, 0), one()), ((0, m32, k), one()), ((0, 0, n32), one())],
    );
    let y = HomogPoly::var(Var::Y);
    let z = HomogPoly::var(Var::Z);
    let eta_den = &y.pow(m32 - 1) * &z;
    let alt_den = HomogPoly::from_terms(
        m32,
        [((0, m32, 0), int(k as i64)), ((0, 0, m32), int(n as i64))],
    );
    let mut basis = Vec::new();
    for q in monomials(m32 - 2) {
        let form = make_wronskian_form(q.clone(), eta_den.clone(), Pair::ZX)?;
        let other = make_wronskian_form(q.scale(&int(m as i64)), alt_den.clone(), Pair::XY)?;
        if !same_form_on_curve(&form, &other, &curve) {
            return Err(Error::Internal("eta representations disagree on C_{m,n}".into()));
        }
        basis.push(form);
    }
    // [1:0:0] is the only common zero of Y^(m-1) Z and k Y^m + n Z^m
    if curve.eval(&int(1), &int(0), &int(0)).is_zero() {
        return Err(Error::Internal("[1:0:0] lies on C_{m,n}".into()));
    }
    Ok(basis)
}
