use std::io::Write;
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use supoly_cli::{exit, run_cli, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_cli(std::iter::once("supoly").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn batch_file(lines: &[&str]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    f
}

#[test]
fn classify_quartic_trinomial() {
    let o = run(&["classify", "X^4+X+1"]);
    assert_eq!(o.code, exit::OK);
    let v = json(&o);
    assert_eq!(v["verdict"]["sup_rational"], "yes");
    assert_eq!(v["verdict"]["sup_meromorphic"], "no");
    assert_eq!(v["input"]["canonical"], "X^4 + X + 1");
    assert_eq!(v["audit"]["passed"], true);
}

#[test]
fn classify_square_is_single_critical_point() {
    let o = run(&["classify", "X^2"]);
    assert_eq!(o.code, exit::OK);
    let v = json(&o);
    for key in ["up_rational", "sup_rational", "up_meromorphic", "sup_meromorphic"] {
        assert_eq!(v["verdict"][key], "no", "{key}");
    }
    assert_eq!(v["decisions"][0]["rule"], "single-critical-point");
    assert_eq!(v["certificates"]["critical"]["l"], 1);
    assert_eq!(v["witnesses"][0]["verified"], true);
}

#[test]
fn curve_fc_identities_and_census() {
    let o = run(&["curve", "X^3-3X", "--c", "2"]);
    assert_eq!(o.code, exit::OK);
    let v = json(&o);
    assert_eq!(v["curve"], "C_c");
    assert_eq!(v["c"], "2/1");
    assert_eq!(v["identities_hold"], true);
    assert_eq!(v["census"]["degree"], 3);
    assert_eq!(v["census"]["genus"], 1);
}

#[test]
fn curve_fc_with_pairing() {
    // critical values are 2 and -2, swapped by c = -1
    let v = json(&run(&["curve", "X^3-3X", "--c", "-1"]));
    assert_eq!(v["pairing"], serde_json::json!(["1 -> 2", "2 -> 1"]));
    assert_eq!(v["census"]["points"].as_array().unwrap().len(), 2);
    assert_eq!(v["census"]["genus"], Value::Null);
}

#[test]
fn syntax_error_reports_offset() {
    let o = run(&["classify", "X^^2"]);
    assert_eq!(o.code, exit::PARSE);
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "syntax");
    assert_eq!(v["error"]["offset"], 2);
}

#[test]
fn degree_cap_is_a_parse_error() {
    let o = run(&["--degree-cap", "4", "classify", "X^5+X+1"]);
    assert_eq!(o.code, exit::PARSE);
    assert_eq!(json(&o)["error"]["kind"], "degree_cap");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).code, exit::USAGE);
    assert_eq!(run(&["classify"]).code, exit::USAGE);
    assert_eq!(run(&["classify", "5"]).code, exit::USAGE);
    assert_eq!(run(&["forms", "--kind", "fc", "--m", "1,1", "--tau", "1:1"]).code, exit::USAGE);
    assert_eq!(run(&["--help"]).code, exit::OK);
    assert_eq!(run(&["--version"]).code, exit::OK);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["classify", "X^5-4X^4+6X^3-4X^2"][..],
        &["curve", "X^4+X+1"],
        &["witness", "(X-1)^7+2"],
        &["forms", "--kind", "fc", "--m", "2,1,1", "--tau", "1:2"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn text_is_a_rendering_of_the_json() {
    let j = json(&run(&["classify", "X^4-4X"]));
    let t = run(&["--text", "classify", "X^4-4X"]).stdout;
    assert_eq!(t, supoly_cli::text::render(&j));
    assert!(t.contains("case: quartic-w-orbit"));
}

#[test]
fn batch_preserves_order_and_reports_worst_code() {
    let polys = ["X^4+X+1", "X^^2", "X^5+X^3+1", "X^4+X^2+1", "X^2"];
    let f = batch_file(&["# header", "", polys[0], polys[1], polys[2], polys[3], polys[4]]);
    let o = run(&["classify", "--batch", f.path().to_str().unwrap()]);
    assert_eq!(o.code, exit::PARSE);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), polys.len());
    for (line, p) in lines.iter().zip(polys) {
        let single: Value = serde_json::from_str(&run(&["classify", p]).stdout).unwrap();
        let batched: Value = serde_json::from_str(line).unwrap();
        assert_eq!(single, batched, "{p}");
    }
}

#[test]
fn witness_and_corollary() {
    let v = json(&run(&["witness", "(X-1)^6+2", "--mode", "c1"]));
    assert_eq!(v["witness"]["beta"], "-1/1");
    assert_eq!(v["witness"]["verified"], true);
    let none = json(&run(&["witness", "X^5+X^3+1"]));
    assert_eq!(none["witness"], Value::Null);

    let o = run(&["corollary", "--alpha", "1/2", "--n", "4", "--m", "1", "--a", "1", "--b", "1"]);
    assert_eq!(o.code, exit::OK);
    let v = json(&o);
    assert_eq!(v["agrees"], true);
    assert_eq!(v["row"]["sup_rational"], "yes");
    assert_eq!(v["row"]["up_meromorphic"], "no");
    assert_eq!(run(&["corollary", "--n", "3", "--m", "3", "--a", "1", "--b", "1"]).code, exit::USAGE);
}

#[test]
fn forms_three_cycle() {
    let v = json(&run(&["forms", "--kind", "fc", "--m", "1,1,1", "--tau", "1:2,2:3,3:1"]));
    assert_eq!(v["order_calculus"]["level"], v["order_calculus"]["expected_level"]);
    let v = json(&run(&["forms", "--kind", "f", "--m", "2,1,1"]));
    assert_eq!(v["order_calculus"]["level"], "brody");
}

#[test]
fn config_file_sets_defaults() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "format = \"text\"\ndegree_cap = 3").unwrap();
    let path = f.path().to_str().unwrap();
    let o = run(&["--config", path, "classify", "X^3+X"]);
    assert!(o.stdout.starts_with("schema_version: 1\n"));
    assert_eq!(run(&["--config", path, "classify", "X^4+X"]).code, exit::PARSE);
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "colour = 1").unwrap();
    assert_eq!(run(&["--config", bad.path().to_str().unwrap(), "classify", "X^3"]).code, exit::USAGE);
}

/// Every key the schema requires is present, in declaration order.
#[test]
fn classify_report_matches_schema_keys() {
    let schema: Value =
        serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let v = json(&run(&["classify", "X^4+X+1"]));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut required: Vec<&str> = ["schema_version", "tool", "tool_version", "command"].to_vec();
    for r in schema["$defs"]["classify"]["required"].as_array().unwrap() {
        required.push(r.as_str().unwrap());
    }
    let positions: Vec<usize> = required
        .iter()
        .map(|r| keys.iter().position(|k| k == r).unwrap_or_else(|| panic!("missing {r}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{keys:?}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_supoly");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["classify", "X^4+X+1"]), Some(exit::OK));
    assert_eq!(status(&["classify", "X^^2"]), Some(exit::PARSE));
    assert_eq!(status(&["nope"]), Some(exit::USAGE));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Batch output equals the single-input reports, line by line.
    #[test]
    fn batch_equals_singles(coeffs in prop::collection::vec(prop::collection::vec(-3i64..=3, 3..7), 1..6)) {
        let polys: Vec<String> = coeffs
            .iter()
            .map(|c| {
                let terms: Vec<String> = c.iter().enumerate().map(|(k, a)| format!("({a})*X^{k}")).collect();
                format!("{} + X^{}", terms.join(" + "), c.len())
            })
            .collect();
        let refs: Vec<&str> = polys.iter().map(String::as_str).collect();
        let f = batch_file(&refs);
        let o = run(&["classify", "--batch", f.path().to_str().unwrap()]);
        let lines: Vec<&str> = o.stdout.lines().collect();
        prop_assert_eq!(lines.len(), polys.len());
        for (line, p) in lines.iter().zip(&polys) {
            let single = run(&["classify", p]);
            let batched: Value = serde_json::from_str(line).unwrap();
            prop_assert_eq!(json(&single), batched);
        }
    }
}
