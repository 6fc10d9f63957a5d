use proptest::prelude::*;
use supoly::criteria::CurveKind;
use supoly::order::{
    build_ledger, check_form, configurations_up_to, hyperbolicity_verdict, unpaired_route_verdict,
    Configuration,
};

fn small_paired() -> Vec<Configuration> {
    configurations_up_to(9, CurveKind::Fc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn certified_bounds_replay(idx in 0usize..10_000, k in 1i64..60, slack in proptest::collection::vec(0i64..6, 16)) {
        let configs = small_paired();
        let cfg = &configs[idx % configs.len()];
        let ledger = build_ledger(cfg);
        for cert in hyperbolicity_verdict(cfg).certificates {
            for v in &cert.forms {
                let again = check_form(&ledger, &v.form).unwrap();
                prop_assert!(again.regular);
                for p in &again.points {
                    let mut i = 0;
                    let mut next = |_| { i += 1; slack[i % slack.len()] };
                    let order = p.replay(k, &mut next);
                    prop_assert!(order >= p.coeff * k + p.constant);
                    prop_assert!(order >= 0, "{cfg}: {} at {}", v.form, p.label);
                }
            }
        }
    }

    #[test]
    fn adding_a_pair_never_helps_the_unpaired_route(idx in 0usize..10_000, pick in 0usize..64) {
        let configs = small_paired();
        let cfg = &configs[idx % configs.len()];
        let l = cfg.l();
        let free: Vec<usize> = cfg.unpaired();
        let targets: Vec<usize> = (0..l).filter(|j| !cfg.tau.contains(&Some(*j))).collect();
        let options: Vec<(usize, usize)> = free
            .iter()
            .flat_map(|&i| targets.iter().filter(move |&&j| j != i).map(move |&j| (i, j)))
            .collect();
        prop_assume!(!options.is_empty());
        let (i, j) = options[pick % options.len()];
        let mut tau = cfg.tau.clone();
        tau[i] = Some(j);
        let bigger = Configuration::paired(cfg.m.clone(), tau).unwrap();
        prop_assert!(unpaired_route_verdict(&bigger) <= unpaired_route_verdict(cfg));
    }

    #[test]
    fn relabelling_equal_multiplicities_keeps_the_level(idx in 0usize..10_000, seed in any::<u64>()) {
        let configs = small_paired();
        let cfg = &configs[idx % configs.len()];
        let l = cfg.l();
        // random permutation inside each block of equal multiplicity
        let mut perm: Vec<usize> = (0..l).collect();
        let mut state = seed;
        for a in 0..l {
            let block: Vec<usize> = (a..l).filter(|&b| cfg.m[b] == cfg.m[a]).collect();
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = block[(state >> 33) as usize % block.len()];
            perm.swap(a, b);
        }
        let mut tau = vec![None; l];
        for (i, t) in cfg.tau.iter().enumerate() {
            tau[perm[i]] = t.map(|j| perm[j]);
        }
        let relabelled = Configuration::paired(cfg.m.clone(), tau).unwrap();
        prop_assert_eq!(hyperbolicity_verdict(cfg).level, hyperbolicity_verdict(&relabelled).level);
    }
}
