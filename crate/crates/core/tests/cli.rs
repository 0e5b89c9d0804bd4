use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use qsymkit::cli::{run, Elem, Outcome};
use qsymkit::families::counterexamples::four_posets;
use qsymkit::json::poset_to_json;
use qsymkit::posets::{chain, LabeledPoset, Poset};
use qsymkit::textfmt::{parse_qsym_text, parse_sym_text};

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("qsymkit_cli_{}_{}", name, std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn poset_file(dir: &Path, name: &str, p: &Poset) -> String {
    write(dir, name, &poset_to_json(&LabeledPoset::natural(p.clone())).to_string())
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("qsymkit").chain(args.iter().copied()))
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--json", "-"]);
    let o = cli(&a);
    assert!(o.stderr.is_empty(), "{}", o.stderr);
    (o.code, serde_json::from_str(&o.stdout).unwrap())
}

/// The element and its text both re-parse to the same function.
fn assert_roundtrip(report: &Value) {
    let v = &report["outputs"]["element"];
    let e = Elem::from_json(v).unwrap();
    assert_eq!(e.to_json(), *v);
    let degree = v["degree"].as_u64().map(|d| d as usize);
    let text = report["outputs"]["text"].as_str().unwrap();
    match e {
        Elem::Q(q) => assert_eq!(parse_qsym_text(text, degree).unwrap(), q),
        Elem::S(s) => assert_eq!(parse_sym_text(text, degree).unwrap(), s),
    }
}

#[test]
fn schur_33_in_p_has_minus_three() {
    let o = cli(&["expand", "--family", "schur", "--lambda", "3,3", "--basis", "p"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains(" - 3*p[2,2,2]/z"), "{}", o.stdout);
    let (_, r) = json_of(&["expand", "--family", "schur", "--lambda", "3,3", "--basis", "p"]);
    assert_roundtrip(&r);
}

#[test]
fn kp_of_a_chain_is_h4() {
    let d = scratch("chain");
    let f = poset_file(&d, "chain4.json", &chain(4));
    let (code, r) = json_of(&["expand", "--kp", &f, "--basis", "h"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["text"], "h[4]");
    let (code, r) = json_of(&["expand", "--kp", &f, "--basis", "Psi"]);
    assert_eq!(code, 0);
    assert_roundtrip(&r);
    // every composition of 4 with certificate 1
    assert_eq!(r["outputs"]["certificates"].as_array().unwrap().len(), 8);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn vertical_strip_example() {
    let d = scratch("vstrip");
    let g = write(&d, "g.json", r#"{"n":4,"edges":[[1,2],[3,1],[1,4],[3,2],[2,4]]}"#);
    let s = write(&d, "s.json", r#"{"edges":[[1,2],[1,4],[3,2]]}"#);
    let o = cli(&["expand", "--family", "llt-vstrip", "--graph", &g, "--edges", &s, "--shift", "--check"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("(1 + q^2)*Psi[2,2]/z"), "{}", o.stdout);
    assert!(o.stdout.contains("non-unimodal certificate at [2,2]"));
    let (_, r) = json_of(&["family", "llt-vstrip", "--graph", &g, "--edges", &s, "--shift"]);
    assert_eq!(r["outputs"]["non_unimodal"], serde_json::json!([2, 2]));
    assert_roundtrip(&r);
    let stray = write(&d, "t.json", r#"{"edges":[[2,1]]}"#);
    assert_eq!(cli(&["family", "llt-vstrip", "--graph", &g, "--edges", &stray]).code, 2);
}

#[test]
fn families_run_with_checks() {
    let d = scratch("families");
    let g = write(&d, "g.json", r#"{"n":4,"edges":[[1,2],[1,3],[4,2],[4,3]]}"#);
    for fam in ["chromatic", "llt", "bpoly", "tutte"] {
        let (code, r) = json_of(&["family", fam, "--graph", &g, "--check"]);
        assert_eq!(code, 0, "{} {}", fam, r);
        assert_roundtrip(&r);
    }
    let (code, r) = json_of(&["family", "chromatic", "--graph", &g, "--omega"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["element"]["basis"], "Psi");
    let (code, _) = json_of(&["family", "kbalanced", "--graph", &g, "--k", "2", "--check"]);
    assert_eq!(code, 0);
    let (code, r) = json_of(&["family", "matroid", "--uniform", "5,2", "--omega", "--check"]);
    assert_eq!(code, 0);
    assert!(r["checks"].as_array().unwrap().iter().any(|c| c["name"] == "uniform closed form"));
    for fam in ["eulerian", "cycle-eulerian"] {
        let (code, r) = json_of(&["family", fam, "--n", "4", "--check"]);
        assert_eq!(code, 0, "{}", fam);
        assert_roundtrip(&r);
    }
    let o = cli(&["family", "schur", "--lambda", "3,3", "--mu", "2,2,2"]);
    assert!(o.stdout.starts_with("roichman([3,3], [2,2,2]) = -3"), "{}", o.stdout);
    assert_eq!(cli(&["family", "nope"]).code, 2);
    assert_eq!(cli(&["family", "chromatic"]).code, 2);
}

#[test]
fn kp_variants() {
    let d = scratch("kp");
    let p = poset_file(&d, "v.json", &Poset::from_relations(3, &[(0, 1), (0, 2)]).unwrap());
    let (code, r) = json_of(&["kp", "--poset", &p, "--weights", "1,2,1"]);
    assert_eq!(code, 0);
    assert_roundtrip(&r);
    let e = write(&d, "e.json", r#"{"blocks":[[1,2],[3]]}"#);
    let (code, r) = json_of(&["kp", "--poset", &p, "--equiv", &e, "--route", "all"]);
    assert_eq!(code, 0);
    assert_roundtrip(&r);
    let rev = write(&d, "rev.json", r#"{"n":3,"covers":[[1,2],[1,3]],"labels":[3,2,1]}"#);
    let (code, _) = json_of(&["kp", "--poset", &rev, "--strict"]);
    assert_eq!(code, 0);
    assert_eq!(cli(&["kp", "--poset", &p, "--route", "sideways"]).code, 2);
    // a zero weight is allowed but warns
    let (code, r) = json_of(&["kp", "--poset", &p, "--weights", "1,0,2"]);
    assert_eq!(code, 0);
    assert!(r["outputs"]["warnings"].is_array());
}

#[test]
fn verify_suites() {
    for (suite, n) in [("cons", "6"), ("bases", "1"), ("unimodal", "6")] {
        let o = cli(&["verify", suite, "--n", n]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(o.stdout.contains("0 failed"));
    }
    let o = cli(&["verify", "counterexamples"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("PASS  2K_A + 3K_B + 2K_C = 7s[4] + 7s[3,1] + s[2,2] + 2s[2,1,1]"));
    let o = cli(&["verify", "everything"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("unknown suite"));
}

#[test]
fn parse_errors_name_line_and_column() {
    let d = scratch("parse");
    let bad = write(&d, "bad.json", "{\"n\": 3,\n \"covers\": [[1,2],\n}");
    let o = cli(&["kp", "--poset", &bad]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3 column 1"), "{}", o.stderr);
    let o = cli(&["kp", "--poset", &d.join("missing.json").to_string_lossy()]);
    assert_eq!(o.code, 2);
    let cyclic = write(&d, "cyc.json", r#"{"n":2,"covers":[[1,2],[2,1]]}"#);
    assert_eq!(cli(&["kp", "--poset", &cyclic]).code, 2);
}

#[test]
fn search_positivity_fixed_combinations() {
    let d = scratch("search");
    let files: Vec<String> =
        four_posets().iter().enumerate().map(|(i, p)| poset_file(&d, &format!("p{}.json", i), p)).collect();
    let mut args = vec!["search-positivity"];
    for f in &files {
        args.extend(["--poset", f.as_str()]);
    }
    let mut first = args.clone();
    first.extend(["--coeffs", "2,3,2,0"]);
    let (code, r) = json_of(&first);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["h_negative"], serde_json::json!([2, 2]));
    assert_eq!(r["outputs"]["schur_negative"], Value::Null);
    let mut second = args.clone();
    second.extend(["--coeffs", "1,3,1,3"]);
    let (code, r) = json_of(&second);
    assert_eq!(code, 1);
    assert!(r["checks"][0]["witness"].as_str().unwrap().contains("differ"));
    let c4 = poset_file(&d, "c4.json", &chain(4));
    let (code, r) = json_of(&["search-positivity", "--poset", &c4, "--poset", &c4, "--coeffs", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["h"], "3*h[4]");
    assert_eq!(r["outputs"]["h_negative"], Value::Null);
}

#[test]
fn seeded_search_is_reproducible() {
    let args = ["search-positivity", "--n", "4", "--trials", "20000", "--seed", "1"];
    let a = cli(&[&args[..], &["--json", "-"]].concat());
    let b = cli(&[&args[..], &["--json", "-"]].concat());
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(r["outputs"]["not_h_positive"]["h"], "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[2,1,1]");
    assert!(r.get("wall_time_s").is_none());
}

#[test]
fn reports_are_byte_identical_and_digest_inputs() {
    let args = ["expand", "--text", "Psi[2,1] - 1/2*Psi[1,2]", "--basis", "M", "--json", "-"];
    let a = cli(&args);
    assert_eq!(a.stdout, cli(&args).stdout);
    let r: Value = serde_json::from_str(&a.stdout).unwrap();
    let other = cli(&["expand", "--text", "Psi[2,1]", "--basis", "M", "--json", "-"]);
    let s: Value = serde_json::from_str(&other.stdout).unwrap();
    assert_ne!(r["inputs_digest"], s["inputs_digest"]);
    assert_roundtrip(&r);
    // timing is opt-in
    let t: Value =
        serde_json::from_str(&cli(&["verify", "bases", "--n", "1", "--timing", "--json", "-"]).stdout).unwrap();
    assert!(t["wall_time_s"].is_number());
}

#[test]
fn non_symmetric_to_symmetric_basis_is_an_input_error() {
    let o = cli(&["expand", "--text", "F[1,2]", "--basis", "s"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("not symmetric"));
}

#[test]
fn binary_exit_codes_and_threads() {
    let exe = env!("CARGO_BIN_EXE_qsymkit");
    let ok = Command::new(exe).args(["verify", "bases", "--n", "2"]).env("QSYMKIT_THREADS", "1").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("3 checks, 0 failed"));
    let bad = Command::new(exe).args(["verify", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let usage = Command::new(exe).args(["expand", "--basis"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let help = Command::new(exe).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("search-positivity"));
}
