//! The command line, driven in-process.

use saito::cli::{run_with, EXIT_FAILED, EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_OK};
use std::path::PathBuf;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn saito_with(args: &[&str], cap: Option<&str>) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(std::iter::once("saito").chain(args.iter().copied()), cap, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn saito(args: &[&str]) -> Run {
    saito_with(args, None)
}

/// Writes `text` to a fresh file in the temporary directory.
fn case_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("saito-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn help_and_version_succeed() {
    let r = saito(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("compute"));
    assert_eq!(saito(&["--version"]).code, EXIT_OK);
}

#[test]
fn usage_errors_are_input_errors() {
    assert_eq!(saito(&[]).code, EXIT_INPUT);
    assert_eq!(saito(&["compute"]).code, EXIT_INPUT);
    assert_eq!(saito(&["verify", "example-3-2", "--identity", "nope"]).code, EXIT_INPUT);
    assert_eq!(saito(&["compute", "example-3-2", "--order", "lex"]).code, EXIT_INPUT);
    let r = saito(&["compute", "example-3-2", "--invariant", "milnor"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("milnor"));
}

#[test]
fn selected_invariants_only() {
    let r = saito(&["compute", "example-3-2", "--invariant", "tau_BR", "--invariant", "gsv-xv", "--json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let inv = v["invariants"].as_object().unwrap();
    assert_eq!(inv.len(), 2);
    assert_eq!(inv["tau_BR"], 5);
    assert_eq!(inv["gsv_XV"], 5);
}

#[test]
fn json_is_deterministic() {
    let args = ["compute", "pq-family", "--param", "lambda=2,5/3", "--json"];
    let first = saito(&args);
    assert_eq!(first.code, EXIT_OK, "{}", first.err);
    for _ in 0..3 {
        assert_eq!(saito(&args).out, first.out);
    }
}

#[test]
fn emitted_cases_compute_like_builtins() {
    for (name, params) in [
        ("example-3-2", vec![]),
        ("pq-family", vec!["p=2", "q=5", "lambda=5"]),
        ("m-family", vec!["m=1"]),
    ] {
        let mut emit = vec!["case", "emit", name];
        emit.extend(&params);
        let text = saito(&emit);
        assert_eq!(text.code, EXIT_OK, "{}", text.err);
        let path = case_file(&format!("{name}.case"), &text.out);

        let mut builtin = vec!["verify", name, "--json"];
        for p in &params {
            builtin.extend(["--param", p]);
        }
        let from_builtin = saito(&builtin);
        let from_file = saito(&["verify", path.to_str().unwrap(), "--json"]);
        assert_eq!(from_builtin.code, EXIT_OK, "{}", from_builtin.err);
        assert_eq!(from_file.out, from_builtin.out, "{name}");
    }
}

#[test]
fn verify_passes_on_builtins() {
    for case in ["example-3-2", "pq-family", "m-family"] {
        let r = saito(&["verify", case]);
        assert_eq!(r.code, EXIT_OK, "{case}: {}", r.err);
        assert!(r.out.contains("theorem_a residual      0"), "{case}: {}", r.out);
    }
}

#[test]
fn failed_identities_exit_with_two() {
    let r = saito(&["verify", "m-family", "--param", "m=2", "--identity", "theorem-a", "--json"]);
    assert_eq!(r.code, EXIT_FAILED);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["identities"]["theorem_a"], -2);
    assert!(r.err.contains("tau_BR = 17"), "{}", r.err);
}

#[test]
fn orders_give_the_same_numbers() {
    let ds = saito(&["compute", "m-family", "--param", "m=2", "--json"]);
    let ls = saito(&["compute", "m-family", "--param", "m=2", "--order", "neglex", "--json"]);
    let (ds, ls): (serde_json::Value, serde_json::Value) =
        (serde_json::from_str(&ds.out).unwrap(), serde_json::from_str(&ls.out).unwrap());
    assert_eq!(ds["invariants"], ls["invariants"]);
    assert_eq!(ls["options"]["order"], "neglex");
}

#[test]
fn rf_cap_from_the_environment() {
    let r = saito_with(&["compute", "m-family", "--param", "m=2", "--invariant", "rf", "--json"], Some("1"));
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["invariants"]["rf"]["at_least"], 2);
    assert_eq!(r.code, EXIT_OK, "an open search is still a computed value");

    let r = saito_with(&["verify", "m-family", "--param", "m=2", "--identity", "cor-5-4"], Some("1"));
    assert_eq!(r.code, EXIT_FAILED);
    let r = saito_with(&["verify", "m-family", "--param", "m=2", "--identity", "cor-5-4"], Some("2"));
    assert_eq!(r.code, EXIT_OK, "{}", r.err);

    for bad in ["0", "two", "-1"] {
        assert_eq!(saito_with(&["compute", "example-3-2"], Some(bad)).code, EXIT_INPUT, "{bad}");
    }
}

#[test]
fn unmet_hypotheses_exit_with_one() {
    // omega = dx leaves X = {y = 0} non-invariant but not V = {x + y = 0}
    let path = case_file("not-invariant.case", "ring x, y;\nX: y;\nV: x + y;\nomega: coeffs(1, 0);\n");
    let r = saito(&["verify", path.to_str().unwrap(), "--identity", "theorem-a"]);
    assert_eq!(r.code, EXIT_HYPOTHESIS, "{}\n{}", r.out, r.err);
    assert!(r.err.contains("not invariant"), "{}", r.err);
}

#[test]
fn bad_input_exits_with_three() {
    assert_eq!(saito(&["compute", "no-such-case"]).code, EXIT_INPUT);
    assert_eq!(saito(&["compute", "m-family", "--param", "m=0"]).code, EXIT_INPUT);
    let path = case_file("broken.case", "ring x, y;\nX: x^2 +* y;\n");
    let r = saito(&["compute", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("2:"), "position in {}", r.err);
    assert_eq!(saito(&["case", "emit", "m-family", "k=1"]).code, EXIT_INPUT);
}

#[test]
fn family_table() {
    let r = saito(&["table", "m-family", "--m-min", "2", "--m-max", "3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("20") && r.out.contains("17") && r.out.contains("42") && r.out.contains("34"), "{}", r.out);
    assert_eq!(saito(&["table", "m-family", "--m-min", "3", "--m-max", "2"]).code, EXIT_INPUT);
}
