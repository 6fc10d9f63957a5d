//! The plane curves `C = [F = 0]` and `C_c = [F_c = 0]` attached to `P`.

mod census;
mod forms;

pub use census::{
    bezout_irreducibility, genus_ordinary, singular_census, CensusEntry, Irreducibility,
    validate_pairing, PointLabel, SingularCensus,
};
pub use forms::{
    boundary_disjoint, mixed_fermat_forms, make_wronskian_form, same_form_on_curve, Pair,
    WronskianForm,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, HomogPoly, Poly, RationalPoly, Var};
use crate::scalar::{int, Rational};

pub type RationalForm = HomogPoly<Rational>;

#[derive(Clone, Debug, PartialEq)]
pub enum CurveType {
    F,
    Fc(Rational),
}

#[derive(Clone, Debug)]
pub struct CurveData {
    pub defining: RationalForm,
    pub degree: u32,
    pub kind: CurveType,
    /// `dF/dX`, `dF/dY`, `dF/dZ`.
    pub partials: [RationalForm; 3],
    /// The polynomial the curve was built from.
    pub p: RationalPoly,
}

impl CurveData {
    fn new(defining: RationalForm, kind: CurveType, p: &RationalPoly) -> Self {
        let partials = [Var::X, Var::Y, Var::Z].map(|v| defining.partial(v));
        CurveData {
            degree: defining.degree(),
            defining,
            kind,
            partials,
            p: p.clone(),
        }
    }

    pub fn partial(&self, v: Var) -> &RationalForm {
        match v {
            Var::X => &self.partials[0],
            Var::Y => &self.partials[1],
            Var::Z => &self.partials[2],
        }
    }

    /// `true` when `g` vanishes identically on the curve, i.e. `F | g`.
    pub fn vanishes_on_curve(&self, g: &RationalForm) -> bool {
        g.is_zero() || g.is_divisible_by(&self.defining)
    }
}

fn n_of(p: &RationalPoly) -> Result<usize> {
    match p.degree() {
        Some(n) if n >= 2 => Ok(n),
        Some(n) => Err(Error::DegreeTooSmall(n)),
        None => Err(Error::InvalidInput("zero polynomial".into())),
    }
}

/// `P` homogenized in the given variable to degree `deg P`.
pub fn homogenized(p: &RationalPoly, v: Var) -> RationalForm {
    let n = p.degree().unwrap_or(0) as u32;
    HomogPoly::from_univariate(p, v, n).expect("degree fits")
}

/// `P'(X, Z)` or `P'(Y, Z)`, of degree `n - 1`.
pub fn derivative_form(p: &RationalPoly, v: Var) -> RationalForm {
    let n = p.degree().unwrap_or(1) as u32;
    HomogPoly::from_univariate(&p.derivative(), v, n.saturating_sub(1)).expect("degree fits")
}

/// `F = Z^n (P(X/Z) - P(Y/Z)) / (X - Y)`, of degree `n - 1`.
pub fn build_f(p: &RationalPoly) -> Result<CurveData> {
    let n = n_of(p)?;
    // (P(X) - P(Y))/(X - Y) = sum_k a_k sum_{j<k} X^(k-1-j) Y^j
    let mut rows: Vec<RationalPoly> = vec![Poly::zero(); n];
    for (k, a) in p.terms() {
        for j in 0..k {
            rows[k - 1 - j] = &rows[k - 1 - j] + &Poly::monomial(a.clone(), j);
        }
    }
    let bi: BiPoly<Rational> = Poly::new(rows);
    let f = HomogPoly::homogenize(&bi, (n - 1) as u32)?;
    Ok(CurveData::new(f, CurveType::F, p))
}

/// `F_c`, the homogenization of `P(X) - c P(Y)` to degree `n`.
pub fn build_fc(p: &RationalPoly, c: &Rational) -> Result<CurveData> {
    n_of(p)?;
    if c.is_zero() || c.is_one() {
        return Err(Error::InvalidInput(format!("c must differ from 0 and 1, got {c}")));
    }
    let f = &homogenized(p, Var::X) - &homogenized(p, Var::Y).scale(c);
    Ok(CurveData::new(f, CurveType::Fc(c.clone()), p))
}

/// Outcome of the symbolic identity checks; every residual must be zero.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub checks: Vec<(&'static str, RationalForm)>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Checks the Euler identity, the `X`/`Y` partial identities and the shape
/// `(n - m) a_m Z^(n-m-1) (...)` of the `Z` partial.
pub fn verify_partial_identities(cd: &CurveData) -> IdentityReport {
    let p = &cd.p;
    let n = p.degree().unwrap();
    let (x, y, z) = (
        HomogPoly::var(Var::X),
        HomogPoly::var(Var::Y),
        HomogPoly::var(Var::Z),
    );
    let f = &cd.defining;
    let [fx, fy, fz] = &cd.partials;
    let mut checks = Vec::new();

    let euler = &(&(&(&x * fx) + &(&y * fy)) + &(&z * fz)) - &f.scale(&int(cd.degree as i64));
    checks.push(("euler", euler));

    let dpx = derivative_form(p, Var::X);
    let dpy = derivative_form(p, Var::Y);
    let x_minus_y = &x - &y;
    match &cd.kind {
        CurveType::F => {
            checks.push(("partial_x", &(&(&x_minus_y * fx) - &dpx) + f));
            checks.push(("partial_y", &(&(&x_minus_y * fy) + &dpy) - f));
        }
        CurveType::Fc(c) => {
            checks.push(("partial_x", fx - &dpx));
            checks.push(("partial_y", fy + &dpy.scale(c)));
        }
    }

    if let Some(gap) = crate::criteria::shape_gap(p) {
        let m = n - gap;
        let a_m = p.coeff(m);
        let zpow = z.pow((gap - 1) as u32);
        let expected_head = match &cd.kind {
            // complete homogeneous sum X^(m-1) + X^(m-2) Y + ... + Y^(m-1)
            CurveType::F => HomogPoly::from_terms(
                m.saturating_sub(1) as u32,
                (0..m).map(|j| (((m - 1 - j) as u32, j as u32, 0), Rational::one())),
            ),
            CurveType::Fc(c) => HomogPoly::from_terms(
                m as u32,
                [((m as u32, 0, 0), Rational::one()), ((0, m as u32, 0), -c.clone())],
            ),
        }
        .scale(&(int(gap as i64) * a_m));
        let residual = match fz.exact_divide(&zpow) {
            Ok(quotient) => {
                // the part of the quotient free of Z must be the expected head
                let head = HomogPoly::from_terms(
                    quotient.degree(),
                    quotient
                        .terms()
                        .filter(|(mono, _)| mono.2 == 0)
                        .map(|(mono, c)| (*mono, c.clone())),
                );
                &head - &expected_head
            }
            Err(_) => fz.clone(),
        };
        checks.push(("partial_z_shape", residual));
    }
    IdentityReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(c: &[i64]) -> RationalPoly {
        Poly::from_i64s(c)
    }

    fn h(terms: &[((u32, u32, u32), i64)]) -> RationalForm {
        let d = terms[0].0 .0 + terms[0].0 .1 + terms[0].0 .2;
        HomogPoly::from_terms(d, terms.iter().map(|&(m, c)| (m, int(c))))
    }

    #[test]
    fn build_f_examples() {
        let cd = build_f(&q(&[0, 0, 0, 1])).unwrap();
        assert_eq!(cd.defining, h(&[((2, 0, 0), 1), ((1, 1, 0), 1), ((0, 2, 0), 1)]));
        assert_eq!(cd.degree, 2);

        let cd = build_f(&q(&[0, -3, 0, 1])).unwrap();
        assert_eq!(
            cd.defining,
            h(&[((2, 0, 0), 1), ((1, 1, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), -3)])
        );
    }

    #[test]
    fn f_on_the_diagonal_is_the_derivative() {
        let p = q(&[2, -1, 0, 4, 0, -3, 1]);
        let cd = build_f(&p).unwrap();
        let diag = cd
            .defining
            .substitute(&HomogPoly::var(Var::X), &HomogPoly::var(Var::X), &HomogPoly::var(Var::Z));
        assert_eq!(diag, derivative_form(&p, Var::X));
    }

    #[test]
    fn build_fc_examples() {
        let cd = build_fc(&q(&[0, 0, 1]), &int(-1)).unwrap();
        assert_eq!(cd.defining, h(&[((2, 0, 0), 1), ((0, 2, 0), 1)]));

        let cd = build_fc(&q(&[1, 0, 0, 1]), &int(2)).unwrap();
        assert_eq!(cd.defining, h(&[((3, 0, 0), 1), ((0, 3, 0), -2), ((0, 0, 3), -1)]));

        assert!(build_fc(&q(&[1, 0, 0, 1]), &int(1)).is_err());
        assert!(build_fc(&q(&[1, 0, 0, 1]), &int(0)).is_err());
    }

    #[test]
    fn fc_on_the_diagonal() {
        let p = q(&[1, 3, 0, 0, 1]);
        let c = rat(-2, 3);
        let cd = build_fc(&p, &c).unwrap();
        for t in -3..=3 {
            let t = int(t);
            assert_eq!(
                cd.defining.eval(&t, &t, &int(1)),
                (int(1) - c.clone()) * p.eval(&t)
            );
        }
    }

    #[test]
    fn identities_hold() {
        let cd = build_f(&q(&[0, -3, 0, 1])).unwrap();
        let r = verify_partial_identities(&cd);
        assert!(r.holds(), "{:?}", r.failures());

        let p = q(&[1, 0, 0, 1, 0, 1]);
        let cd = build_fc(&p, &int(2)).unwrap();
        let r = verify_partial_identities(&cd);
        assert!(r.holds(), "{:?}", r.failures());
        // F_X = 5 X^4 + 3 X^2 Z^2
        assert_eq!(cd.partials[0], h(&[((4, 0, 0), 5), ((2, 0, 2), 3)]));

        let cd = build_f(&Poly::from_terms([(7, int(2)), (3, rat(1, 2)), (0, int(-5))])).unwrap();
        assert!(verify_partial_identities(&cd).holds());
    }

    #[test]
    fn corrupted_curve_fails_identities() {
        let mut cd = build_f(&q(&[0, -3, 0, 1])).unwrap();
        cd.defining = &cd.defining + &h(&[((0, 0, 2), 1)]);
        let r = verify_partial_identities(&cd);
        assert!(!r.holds());
        assert!(r.failures().contains(&"euler"));
    }
}
