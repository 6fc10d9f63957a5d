use std::fmt;

use crate::criteria::{CriticalStructure, CurveKind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointLabel {
    /// `(a_i, a_i, 1)` on `C`.
    Diag(usize),
    /// `(a_i, a_tau(i), 1)` on `C_c`.
    Pair(usize, usize),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Diag(i) => write!(f, "diag({i})"),
            PointLabel::Pair(i, j) => write!(f, "pair({i}, {j})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub label: PointLabel,
    pub multiplicity: usize,
    pub ordinary: bool,
}

/// The complete list of multiple points of a curve of degree `degree`.
/// Labels are one-based indices into the multiplicity list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCensus {
    pub degree: usize,
    pub entries: Vec<CensusEntry>,
}

/// Checks that `tau` is an injective partial map without fixed points.
pub fn validate_pairing(tau: &[Option<usize>]) -> Result<()> {
    let mut seen = vec![false; tau.len()];
    for (i, t) in tau.iter().enumerate() {
        let Some(j) = *t else { continue };
        if j >= tau.len() || j == i || seen[j] {
            return Err(Error::InvalidInput(format!(
                "pairing must be injective with tau(i) != i; offending index {}",
                i + 1
            )));
        }
        seen[j] = true;
    }
    Ok(())
}

/// Multiple points of `C` (kind `F`) or `C_c` (kind `Fc`, with the pairing
/// `tau` given zero-based). The statements are taken as axioms and need the
/// separation condition.
pub fn singular_census(
    cs: &CriticalStructure,
    kind: CurveKind,
    tau: Option<&[Option<usize>]>,
) -> Result<SingularCensus> {
    if !cs.separated {
        return Err(Error::Refused(
            "singular census needs the separation condition".into(),
        ));
    }
    let m = &cs.multiplicities;
    let entries = match kind {
        CurveKind::F => m
            .iter()
            .enumerate()
            .filter(|(_, &mi)| mi >= 2)
            .map(|(i, &mi)| CensusEntry {
                label: PointLabel::Diag(i + 1),
                multiplicity: mi,
                ordinary: true,
            })
            .collect(),
        CurveKind::Fc => {
            let tau = tau.unwrap_or(&[]);
            if tau.len() > m.len() {
                return Err(Error::InvalidInput("pairing longer than l".into()));
            }
            validate_pairing(tau)?;
            tau.iter()
                .enumerate()
                .filter_map(|(i, t)| t.map(|j| (i, j)))
                .map(|(i, j)| CensusEntry {
                    label: PointLabel::Pair(i + 1, j + 1),
                    multiplicity: m[i].min(m[j]) + 1,
                    ordinary: m[i] == m[j],
                })
                .collect()
        }
    };
    let degree = match kind {
        CurveKind::F => cs.n - 1,
        CurveKind::Fc => cs.n,
    };
    Ok(SingularCensus { degree, entries })
}

/// Genus of an irreducible plane curve whose multiple points are all
/// ordinary: `(d-1)(d-2)/2 - sum m(m-1)/2`.
pub fn genus_ordinary(d: usize, census: &SingularCensus, irreducible: bool) -> Result<i64> {
    if !irreducible {
        return Err(Error::Refused("genus formula needs an irreducible curve".into()));
    }
    if census.entries.iter().any(|e| !e.ordinary) {
        return Err(Error::Refused("genus formula needs ordinary multiple points".into()));
    }
    let d = d as i64;
    let arithmetic = (d - 1) * (d - 2) / 2;
    let drop: i64 = census
        .entries
        .iter()
        .map(|e| {
            let m = e.multiplicity as i64;
            m * (m - 1) / 2
        })
        .sum();
    Ok(arithmetic - drop)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Certified,
    Unknown,
}

/// Bézout certificate. Suppose `F = H G` with `H` irreducible of degree
/// `d_H`. At an ordinary point of multiplicity `m_p` the branches split as
/// `h_p + g_p = m_p` and `I_p(H, G) = h_p g_p`; every common point of `H` and
/// `G` is a multiple point of `F`, so `sum h_p g_p = d_H d_G`. Also
/// `h_p < d_H` when `d_H >= 2`, `h_p <= 1` for a line, and `g_p <= d_G`.
/// When no split satisfies these, `F` is irreducible.
pub fn bezout_irreducibility(
    d: usize,
    census: &SingularCensus,
    linear_factors_excluded: bool,
) -> Irreducibility {
    if census.entries.iter().any(|e| !e.ordinary) || d == 0 {
        return Irreducibility::Unknown;
    }
    if d == 1 {
        return Irreducibility::Certified;
    }
    let mults: Vec<usize> = census.entries.iter().map(|e| e.multiplicity).collect();
    // with lines excluded, neither H nor the cofactor G can be a line
    let (first, last) = if linear_factors_excluded { (2, d.saturating_sub(2)) } else { (1, d - 1) };
    for d_h in first..=last {
        let d_g = d - d_h;
        let h_max = if d_h == 1 { 1 } else { d_h - 1 };
        if split_exists(&mults, h_max, d_g, d_h * d_g) {
            return Irreducibility::Unknown;
        }
    }
    Irreducibility::Certified
}

/// Is there a choice `h_p + g_p = m_p`, `h_p <= h_max`, `g_p <= g_max`, with
/// `sum h_p g_p == target`?
fn split_exists(mults: &[usize], h_max: usize, g_max: usize, target: usize) -> bool {
    // reachable sums, bounded by target
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for &m in mults {
        let mut next = vec![false; target + 1];
        for (s, _) in reachable.iter().enumerate().filter(|(_, r)| **r) {
            for h in 0..=m.min(h_max) {
                let g = m - h;
                if g > g_max {
                    continue;
                }
                let t = s + h * g;
                if t <= target {
                    next[t] = true;
                }
            }
        }
        reachable = next;
    }
    reachable[target]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use num_traits::Zero;

    fn structure(multiplicities: &[usize], separated: bool) -> CriticalStructure {
        CriticalStructure {
            n: multiplicities.iter().sum::<usize>() + 1,
            multiplicities: multiplicities.to_vec(),
            l: multiplicities.len(),
            q: Poly::zero(),
            separated,
            gap: None,
            derivative_factors: Vec::new(),
        }
    }

    fn census(d: usize, mults: &[usize]) -> SingularCensus {
        SingularCensus {
            degree: d,
            entries: mults
                .iter()
                .enumerate()
                .map(|(i, &m)| CensusEntry {
                    label: PointLabel::Diag(i + 1),
                    multiplicity: m,
                    ordinary: true,
                })
                .collect(),
        }
    }

    #[test]
    fn census_examples() {
        let c = singular_census(&structure(&[2, 1], true), CurveKind::F, None).unwrap();
        assert_eq!(
            c.entries,
            vec![CensusEntry { label: PointLabel::Diag(1), multiplicity: 2, ordinary: true }]
        );
        let c = singular_census(&structure(&[1, 1, 1], true), CurveKind::F, None).unwrap();
        assert!(c.entries.is_empty());
        assert_eq!(c.degree, 3);

        let cycle = [Some(1), Some(2), Some(0)];
        let c = singular_census(&structure(&[1, 1, 1], true), CurveKind::Fc, Some(&cycle)).unwrap();
        assert_eq!(c.entries.len(), 3);
        assert!(c.entries.iter().all(|e| e.multiplicity == 2 && e.ordinary));
        assert_eq!(c.degree, 4);
    }

    #[test]
    fn census_refusals() {
        assert!(singular_census(&structure(&[2, 1], false), CurveKind::F, None).is_err());
        let bad = [Some(0), None];
        assert!(singular_census(&structure(&[1, 1], true), CurveKind::Fc, Some(&bad)).is_err());
        let clash = [Some(2), Some(2), None];
        assert!(singular_census(&structure(&[1, 1, 1], true), CurveKind::Fc, Some(&clash)).is_err());
    }

    #[test]
    fn unequal_pair_is_not_ordinary() {
        let tau = [Some(1), None];
        let c = singular_census(&structure(&[3, 1], true), CurveKind::Fc, Some(&tau)).unwrap();
        assert_eq!(c.entries[0].multiplicity, 2);
        assert!(!c.entries[0].ordinary);
        assert!(genus_ordinary(5, &c, true).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_ordinary(3, &census(3, &[]), true).unwrap(), 1);
        assert_eq!(genus_ordinary(4, &census(4, &[2, 2]), true).unwrap(), 1);
        assert_eq!(genus_ordinary(4, &census(4, &[2, 2, 2]), true).unwrap(), 0);
        assert!(genus_ordinary(4, &census(4, &[]), false).is_err());
        for d in 2..12 {
            assert_eq!(genus_ordinary(d, &census(d, &[]), true).unwrap() as usize, (d - 1) * (d - 2) / 2);
        }
    }

    #[test]
    fn bezout_examples() {
        for m in 2..9 {
            assert_eq!(bezout_irreducibility(m + 1, &census(m + 1, &[m]), true), Irreducibility::Certified);
        }
        assert_eq!(bezout_irreducibility(3, &census(3, &[]), true), Irreducibility::Certified);
        assert_eq!(bezout_irreducibility(4, &census(4, &[2, 2]), true), Irreducibility::Certified);
        assert_eq!(bezout_irreducibility(4, &census(4, &[2, 2, 2]), true), Irreducibility::Certified);
    }

    #[test]
    fn bezout_leaves_genuine_splits_open() {
        // two conics meeting in four ordinary double points
        assert_eq!(bezout_irreducibility(4, &census(4, &[2, 2, 2, 2]), true), Irreducibility::Unknown);
        // a line and a conic meeting twice
        assert_eq!(bezout_irreducibility(3, &census(3, &[2, 2]), false), Irreducibility::Unknown);
        // a point of multiplicity d is a cone of lines
        assert_eq!(bezout_irreducibility(3, &census(3, &[3]), false), Irreducibility::Unknown);
    }

    #[test]
    fn smooth_curves_are_irreducible() {
        // the complete census of a smooth quartic is empty: two conics would meet
        assert_eq!(bezout_irreducibility(4, &census(4, &[]), false), Irreducibility::Certified);
    }
}
