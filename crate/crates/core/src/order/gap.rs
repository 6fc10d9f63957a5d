use num_traits::{One, Zero};

use super::Hyperbolicity;
use crate::criteria::{critical_structure, shape_gap};
use crate::curve::{
    boundary_disjoint, derivative_form, make_wronskian_form, same_form_on_curve, CurveData,
    CurveType, Pair, RationalForm, WronskianForm,
};
use crate::error::{Error, Result};
use crate::poly::{HomogPoly, Poly, RationalPoly, Var};
use crate::scalar::{int, Rational};

/// Forms `L W(X,Y) / (k a_m Z^e)` for a polynomial with a coefficient gap
/// `k = n - m`, with the checks that certify them.
#[derive(Clone, Debug)]
pub struct GapCertificate {
    pub gap: usize,
    pub level: Hyperbolicity,
    pub forms: Vec<WronskianForm>,
    pub checks: Vec<(String, bool)>,
}

impl GapCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// `form = R gamma` rewritten with `W(Y,Z)` and with `W(Z,X)` over the
/// derivative forms `P'(X,Z)` and `P'(Y,Z)`.
fn partner_forms(cd: &CurveData, r: &RationalForm) -> Result<(WronskianForm, WronskianForm)> {
    let x_minus_y = &HomogPoly::var(Var::X) - &HomogPoly::var(Var::Y);
    let dpx = derivative_form(&cd.p, Var::X);
    let dpy = derivative_form(&cd.p, Var::Y);
    let (num_x, num_y) = match &cd.kind {
        // (X - Y) F_X = P'(X,Z) - F and (X - Y) F_Y = F - P'(Y,Z)
        CurveType::F => {
            let g = r * &x_minus_y;
            (g.clone(), -&g)
        }
        // F_X = P'(X,Z) and F_Y = -c P'(Y,Z)
        CurveType::Fc(c) => (r.clone(), r.scale(&(-c.clone()).recip())),
    };
    Ok((
        make_wronskian_form(num_x, dpx, Pair::YZ)?,
        make_wronskian_form(num_y, dpy, Pair::ZX)?,
    ))
}

fn certify_multiplier(
    cd: &CurveData,
    scale: &Rational,
    multiplier: &RationalForm,
    z_power: u32,
    label: &str,
    checks: &mut Vec<(String, bool)>,
) -> Result<WronskianForm> {
    let z = HomogPoly::var(Var::Z);
    let den = z.pow(z_power).scale(scale);
    let form = make_wronskian_form(multiplier.clone(), den.clone(), Pair::XY)?;
    // form = R gamma with R = multiplier F_Z / den
    let r = match (multiplier * cd.partial(Var::Z)).exact_divide(&den) {
        Ok(r) => r,
        Err(_) => {
            checks.push((format!("{label}: Z^{z_power} divides F_Z"), false));
            return Ok(form);
        }
    };
    checks.push((format!("{label}: Z^{z_power} divides F_Z"), true));
    let (bx, by) = partner_forms(cd, &r)?;
    checks.push((format!("{label}: agrees with the W(Y,Z) form"), same_form_on_curve(&form, &bx, &cd.defining)));
    checks.push((format!("{label}: agrees with the W(Z,X) form"), same_form_on_curve(&form, &by, &cd.defining)));
    Ok(form)
}

/// The coefficient-gap route: with `k = n - m >= 3` the form
/// `W(X,Y)/(k a_m Z^2)` has no poles on the curve, and with `k >= 4` so do
/// `X W(X,Y)/(k a_m Z^3)`, `Y W(X,Y)/(k a_m Z^3)`, `Z W(X,Y)/(k a_m Z^3)`.
/// Poles can only lie on `Z = 0`, where one of `P'(X,0)`, `P'(Y,0)` is
/// nonzero. Returns `None` when the gap is below three.
pub fn gap_route(cd: &CurveData) -> Result<Option<GapCertificate>> {
    let p = &cd.p;
    let Some(gap) = shape_gap(p).filter(|&k| k >= 3) else {
        return Ok(None);
    };
    let n = p.degree().expect("nonzero");
    let scale = int(gap as i64) * p.coeff(n - gap);
    let mut checks = Vec::new();
    let boundary = boundary_disjoint(&derivative_form(p, Var::X), &derivative_form(p, Var::Y));
    checks.push(("P'(X,0) and P'(Y,0) share no zero".to_string(), boundary));

    let one = HomogPoly::constant(Rational::one());
    let mut forms = vec![certify_multiplier(cd, &scale, &one, 2, "theta", &mut checks)?];
    let algebraic_ok = checks.iter().all(|(_, ok)| *ok);
    let mut level = if algebraic_ok { Hyperbolicity::Algebraic } else { Hyperbolicity::None };
    if gap >= 4 {
        forms.clear();
        let mut brody_checks = Vec::new();
        for (v, label) in [(Var::X, "X theta'"), (Var::Y, "Y theta'"), (Var::Z, "Z theta'")] {
            forms.push(certify_multiplier(cd, &scale, &HomogPoly::var(v), 3, label, &mut brody_checks)?);
        }
        if algebraic_ok && brody_checks.iter().all(|(_, ok)| *ok) {
            level = Hyperbolicity::Brody;
        }
        checks.extend(brody_checks);
    }
    Ok(Some(GapCertificate { gap, level, forms, checks }))
}

/// Expansion of `P` around its critical point of largest multiplicity for
/// the two configurations `m = (m_1, 1, 1)` and `m = (m_1, 2)`, where
/// `n = m_1 + 3` and `P(X + a_1) - P(a_1) = b_0 X^(m_1+1) + b_1 X^(m_1+2) + a X^(m_1+3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecentredExpansion {
    pub alpha1: Rational,
    pub m1: usize,
    pub b0: Rational,
    pub b1: Rational,
    pub lead: Rational,
    /// No nontrivial root of unity `z` has `Q(z X) = Q(X)` for the recentred `Q`.
    pub rotation_free: bool,
}

pub fn recentred_expansion_check(p: &RationalPoly) -> Result<RecentredExpansion> {
    let cs = critical_structure(p);
    let m = &cs.multiplicities;
    let shape_ok = match m.as_slice() {
        [m1, 1, 1] => *m1 >= 2,
        [m1, 2] => *m1 >= 3,
        _ => false,
    };
    if !shape_ok {
        return Err(Error::Refused(format!(
            "recentred expansion needs m = (m1, 1, 1) or (m1, 2), got {m:?}"
        )));
    }
    let m1 = m[0];
    let top = cs
        .derivative_factors
        .iter()
        .find(|f| f.multiplicity == m1)
        .ok_or_else(|| Error::Internal("no factor of top multiplicity".into()))?;
    if top.factor.degree() != Some(1) {
        return Err(Error::Internal("top critical point is not rational".into()));
    }
    let f = top.factor.monic();
    let alpha1 = -f.coeff(0);
    let shifted = p.taylor_shift(&alpha1);
    let q = &shifted - &Poly::constant(shifted.coeff(0));
    let n = cs.n;
    let support: Vec<usize> = q.support();
    if support.iter().any(|&e| e <= m1 || e > n) || n != m1 + 3 {
        return Err(Error::Internal(format!("unexpected recentred support {support:?}")));
    }
    let (b0, b1, lead) = (q.coeff(m1 + 1), q.coeff(m1 + 2), q.coeff(m1 + 3));
    if b0.is_zero() {
        return Err(Error::Internal("recentred expansion lost its lowest term".into()));
    }
    let g = support.iter().fold(0, |acc, &e| num_integer::gcd(acc, e));
    Ok(RecentredExpansion {
        alpha1,
        m1,
        b0,
        b1,
        lead,
        rotation_free: g == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{build_f, build_fc};

    fn q(c: &[i64]) -> RationalPoly {
        Poly::from_i64s(c)
    }

    #[test]
    fn gap_examples() {
        // X^5 - 5X: gap 4 on both curves
        let p = q(&[0, -5, 0, 0, 0, 1]);
        let cert = gap_route(&build_f(&p).unwrap()).unwrap().unwrap();
        assert_eq!(cert.gap, 4);
        assert!(cert.holds(), "{:?}", cert.checks);
        assert_eq!(cert.level, Hyperbolicity::Brody);
        assert_eq!(cert.forms.len(), 3);

        let cert = gap_route(&build_fc(&p, &int(2)).unwrap()).unwrap().unwrap();
        assert!(cert.holds(), "{:?}", cert.checks);
        assert_eq!(cert.level, Hyperbolicity::Brody);

        // gap 3: algebraic only
        let p = q(&[1, 0, 1, 0, 0, 1]);
        let cert = gap_route(&build_f(&p).unwrap()).unwrap().unwrap();
        assert_eq!(cert.level, Hyperbolicity::Algebraic);
        assert!(cert.holds());

        // gap 2: route does not apply
        assert!(gap_route(&build_f(&q(&[1, 0, 0, 1, 0, 1])).unwrap()).unwrap().is_none());
    }

    #[test]
    fn expansion_shapes() {
        // X^5 + X^4: P' = X^3 (5X + 4), so m = (3, 1)
        assert!(recentred_expansion_check(&q(&[0, 0, 0, 0, 1, 1])).is_err());
        // X^3 (X - 1)^2 has P' = X^2 (X - 1)(5X - 3): m = (2, 1, 1)
        let p = &q(&[0, 0, 0, 1]) * &q(&[1, -2, 1]);
        let e = recentred_expansion_check(&p).unwrap();
        assert_eq!(e.alpha1, int(0));
        assert_eq!(e.m1, 2);
        assert_eq!((e.b0.clone(), e.b1.clone(), e.lead.clone()), (int(1), int(-2), int(1)));
        assert!(e.rotation_free);
        // X^5 + X^3 has P' = X^2 (5X^2 + 3): b1 = 0 with m1 even
        let e = recentred_expansion_check(&q(&[0, 0, 0, 1, 0, 1])).unwrap();
        assert!(e.b1.is_zero());
        assert!(e.rotation_free);
    }
}
