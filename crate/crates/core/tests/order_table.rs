use supoly::criteria::CurveKind;
use supoly::order::{
    build_ledger, check_form, configurations_up_to, hyperbolicity_verdict, statement_verdict,
};

fn mismatches(kind: CurveKind) -> (usize, Vec<String>) {
    let configs = configurations_up_to(12, kind);
    let mut bad = Vec::new();
    for cfg in &configs {
        let v = hyperbolicity_verdict(cfg);
        let expected = statement_verdict(cfg);
        if v.level != expected {
            bad.push(format!("{cfg}: replay {} vs statements {expected}; rejected {:?}", v.level, v.rejected));
        }
    }
    (configs.len(), bad)
}

#[test]
fn diagonal_table_matches_statements() {
    let (count, bad) = mismatches(CurveKind::F);
    assert_eq!(count, (1..=11).map(partition_count).sum::<usize>());
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn paired_table_matches_statements() {
    let (count, bad) = mismatches(CurveKind::Fc);
    assert!(count > 1000);
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.iter().take(40).cloned().collect::<Vec<_>>().join("\n"));
}

#[test]
fn every_certificate_form_rechecks() {
    for kind in [CurveKind::F, CurveKind::Fc] {
        for cfg in configurations_up_to(9, kind) {
            let ledger = build_ledger(&cfg);
            for cert in hyperbolicity_verdict(&cfg).certificates {
                for v in &cert.forms {
                    let again = check_form(&ledger, &v.form).unwrap();
                    assert!(again.regular, "{cfg}: {}", v.form);
                    assert!(v.form.materialize().is_ok());
                }
            }
        }
    }
}

fn partition_count(n: usize) -> usize {
    fn p(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| p(n - k, k)).sum()
    }
    p(n, n)
}
