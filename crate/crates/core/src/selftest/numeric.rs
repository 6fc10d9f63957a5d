//! Floating-point oracle for the separation condition.

use num_complex::Complex64;

use crate::poly::RationalPoly;
use crate::scalar::rational_to_f64;

/// All complex roots by Durand-Kerner iteration.
pub fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius / 2.0).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                den = Complex64::new(1e-12, 0.0);
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Critical points grouped by proximity (approximations of a multiple
/// root scatter by roughly `eps^(1/m)`), with their critical values.
#[derive(Clone, Debug)]
pub struct NumericCritical {
    pub points: Vec<Complex64>,
    pub values: Vec<Complex64>,
    /// Smallest distance between two distinct cluster centres.
    pub min_gap: f64,
}

pub fn numeric_critical(p: &RationalPoly, cluster_radius: f64) -> NumericCritical {
    let coeffs: Vec<f64> = p.coeffs().iter().map(rational_to_f64).collect();
    let deriv: Vec<f64> = coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect();
    let roots = durand_kerner(&deriv);
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for r in roots {
        match clusters.iter_mut().find(|c| (c[0] - r).norm() < cluster_radius) {
            Some(c) => c.push(r),
            None => clusters.push(vec![r]),
        }
    }
    let points: Vec<Complex64> = clusters
        .iter()
        .map(|c| c.iter().sum::<Complex64>() / c.len() as f64)
        .collect();
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let values = points.iter().map(|&z| eval(z)).collect();
    let mut min_gap = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            min_gap = min_gap.min((points[i] - points[j]).norm());
        }
    }
    NumericCritical { points, values, min_gap }
}

/// Separation judged numerically with relative tolerance `tol`.
pub fn numerically_separated(nc: &NumericCritical, tol: f64) -> bool {
    let v = &nc.values;
    (0..v.len()).all(|i| {
        (i + 1..v.len()).all(|j| {
            let scale = 1.0f64.max(v[i].norm()).max(v[j].norm());
            (v[i] - v[j]).norm() > tol * scale
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn quadratic_roots() {
        let mut r = durand_kerner(&[-2.0, 0.0, 1.0]);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((r[0].re + 2f64.sqrt()).abs() < 1e-12 && (r[1].re - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn separation_examples() {
        // X^4 - 2X^2: critical values -1, 0, -1
        let nc = numeric_critical(&Poly::from_i64s(&[0, 0, -2, 0, 1]), 1e-3);
        assert_eq!(nc.points.len(), 3);
        assert!(!numerically_separated(&nc, 1e-9));
        // X^5 + X^3 + 1: P' = X^2 (5X^2 + 3)
        let nc = numeric_critical(&Poly::from_i64s(&[1, 0, 0, 1, 0, 1]), 1e-3);
        assert_eq!(nc.points.len(), 3);
        assert!(numerically_separated(&nc, 1e-9));
    }
}
