use super::Configuration;
use crate::criteria::CurveKind;

/// A connected piece of the graph of a partial injection, recorded by the
/// multiplicities along it. A path ends at an index outside the domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Component {
    Path(Vec<usize>),
    /// Stored at its lexicographically least rotation.
    Cycle(Vec<usize>),
}

fn is_least_rotation(seq: &[usize]) -> bool {
    (1..seq.len()).all(|r| {
        let rotated = seq[r..].iter().chain(&seq[..r]);
        seq.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

/// Every colour sequence that fits in `counts` (indexed by colour).
fn sequences(counts: &mut Vec<usize>, colours: &[usize], seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if !seq.is_empty() {
        out.push(seq.clone());
    }
    for c in 0..colours.len() {
        if counts[c] == 0 {
            continue;
        }
        counts[c] -= 1;
        seq.push(colours[c]);
        sequences(counts, colours, seq, out);
        seq.pop();
        counts[c] += 1;
    }
}

fn components(counts: &[usize], colours: &[usize]) -> Vec<Component> {
    let mut seqs = Vec::new();
    sequences(&mut counts.to_vec(), colours, &mut Vec::new(), &mut seqs);
    let mut out: Vec<Component> = Vec::new();
    for s in seqs {
        if s.len() >= 2 && is_least_rotation(&s) {
            out.push(Component::Cycle(s.clone()));
        }
        out.push(Component::Path(s));
    }
    out.sort();
    out
}

fn take(counts: &mut [usize], colours: &[usize], comp: &Component, sign: isize) -> bool {
    let seq = match comp {
        Component::Path(s) | Component::Cycle(s) => s,
    };
    for &v in seq {
        let c = colours.iter().position(|&x| x == v).expect("known colour");
        if sign < 0 {
            if counts[c] == 0 {
                return false;
            }
            counts[c] -= 1;
        } else {
            counts[c] += 1;
        }
    }
    true
}

fn collect(
    counts: &mut Vec<usize>,
    colours: &[usize],
    pool: &[Component],
    start: usize,
    current: &mut Vec<Component>,
    out: &mut Vec<Vec<Component>>,
) {
    if counts.iter().all(|&c| c == 0) {
        out.push(current.clone());
        return;
    }
    for k in start..pool.len() {
        let comp = &pool[k];
        let mut trial = counts.clone();
        if !take(&mut trial, colours, comp, -1) {
            continue;
        }
        // components are taken in non-decreasing order, so each multiset once
        let saved = std::mem::replace(counts, trial);
        current.push(comp.clone());
        collect(counts, colours, pool, k, current, out);
        current.pop();
        *counts = saved;
    }
}

/// All pairings `tau` on the indices of the non-increasing list `m`, one per
/// isomorphism class of partial injections without fixed points preserving
/// multiplicities.
pub fn pairings_up_to_isomorphism(m: &[usize]) -> Vec<Vec<Option<usize>>> {
    let mut colours: Vec<usize> = m.to_vec();
    colours.dedup();
    let counts: Vec<usize> = colours
        .iter()
        .map(|c| m.iter().filter(|&&x| x == *c).count())
        .collect();
    let pool = components(&counts, &colours);
    let mut multisets = Vec::new();
    collect(&mut counts.clone(), &colours, &pool, 0, &mut Vec::new(), &mut multisets);

    multisets
        .into_iter()
        .map(|comps| {
            let mut next: Vec<usize> = colours
                .iter()
                .map(|c| m.iter().position(|x| x == c).expect("colour present"))
                .collect();
            let mut tau = vec![None; m.len()];
            for comp in &comps {
                let (seq, closed) = match comp {
                    Component::Path(s) => (s, false),
                    Component::Cycle(s) => (s, true),
                };
                let idx: Vec<usize> = seq
                    .iter()
                    .map(|v| {
                        let c = colours.iter().position(|x| x == v).expect("known colour");
                        next[c] += 1;
                        next[c] - 1
                    })
                    .collect();
                for w in idx.windows(2) {
                    tau[w[0]] = Some(w[1]);
                }
                if closed {
                    tau[*idx.last().unwrap()] = Some(idx[0]);
                }
            }
            tau
        })
        .collect()
}

fn partitions(total: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, part, prefix, out);
        prefix.pop();
    }
}

/// All configurations of the given kind with `2 <= n <= n_max`; for `F_c`
/// one pairing per isomorphism class.
pub fn configurations_up_to(n_max: usize, kind: CurveKind) -> Vec<Configuration> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut parts = Vec::new();
        partitions(n - 1, n - 1, &mut Vec::new(), &mut parts);
        for m in parts {
            match kind {
                CurveKind::F => out.push(Configuration::diagonal(m).expect("valid partition")),
                CurveKind::Fc => {
                    for tau in pairings_up_to_isomorphism(&m) {
                        out.push(Configuration::paired(m.clone(), tau).expect("valid pairing"));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn permutations(l: usize) -> Vec<Vec<usize>> {
        if l == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(l - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, l - 1);
                out.push(q);
            }
        }
        out
    }

    fn all_pairings(l: usize) -> Vec<Vec<Option<usize>>> {
        let mut out = vec![vec![]];
        for i in 0..l {
            let mut next = Vec::new();
            for t in &out {
                for choice in std::iter::once(None).chain((0..l).filter(|&j| j != i).map(Some)) {
                    if choice.is_some() && t.contains(&choice) {
                        continue;
                    }
                    let mut t2: Vec<Option<usize>> = t.clone();
                    t2.push(choice);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    fn canonical(m: &[usize], tau: &[Option<usize>], perms: &[Vec<usize>]) -> Vec<Option<usize>> {
        perms
            .iter()
            .filter(|p| (0..m.len()).all(|i| m[p[i]] == m[i]))
            .map(|p| {
                let mut image = vec![None; m.len()];
                for (i, t) in tau.iter().enumerate() {
                    image[p[i]] = t.map(|j| p[j]);
                }
                image
            })
            .min()
            .unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(pairings_up_to_isomorphism(&[1, 1]).len(), 3);
        assert_eq!(pairings_up_to_isomorphism(&[1, 1, 1]).len(), 5);
        assert_eq!(pairings_up_to_isomorphism(&[2, 1]).len(), 4);
        assert_eq!(pairings_up_to_isomorphism(&[3]).len(), 1);
    }

    #[test]
    fn matches_brute_force_orbits() {
        for m in [vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2, 1, 1], vec![3, 2, 1], vec![1; 5], vec![2, 1, 1, 1, 1]] {
            let perms = permutations(m.len());
            let brute: BTreeSet<_> = all_pairings(m.len())
                .iter()
                .map(|t| canonical(&m, t, &perms))
                .collect();
            let ours = pairings_up_to_isomorphism(&m);
            let ours_canon: BTreeSet<_> = ours.iter().map(|t| canonical(&m, t, &perms)).collect();
            assert_eq!(ours.len(), brute.len(), "m = {m:?}");
            assert_eq!(ours_canon, brute, "m = {m:?}");
        }
    }

    #[test]
    fn configuration_counts() {
        // partitions of 1..=4
        assert_eq!(configurations_up_to(5, CurveKind::F).len(), 1 + 2 + 3 + 5);
        assert!(configurations_up_to(12, CurveKind::Fc).iter().all(|c| c.n() <= 12));
    }
}
