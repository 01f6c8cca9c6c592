// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hecke_rpf::cli::run(std::iter::once("hecke-rpf").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hecke-rpf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn json_output_is_byte_deterministic() {
    let cases: [&[&str]; 4] = [
        &["--output", "json", "isps", "--p", "5", "--n", "2"],
        &["--output", "json", "rpf", "--p", "6", "--word", "1,3,5", "--weight", "2"],
        &["--output", "json", "cf", "--p", "4", "--word", "1,3"],
        &["--output", "json", "count", "--p", "7", "--max-n", "6"],
    ];
    for args in cases {
        let (c1, a, _) = run(args);
        let (c2, b, _) = run(args);
        assert_eq!((c1, c2), (0, 0), "{args:?}");
        assert_eq!(a, b, "{args:?}");
        serde_json::from_str::<Value>(&a).unwrap();
    }
}

#[test]
fn rotations_are_canonicalized_and_echoed() {
    let (code, out, _) = run(&["rpf", "--p", "3", "--word", "2,1", "--weight", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("word\t[1,2]\t"), "{out}");
    assert!(out.contains("verdict\tvalid"), "{out}");
}

#[test]
fn weight_two_family_prints_the_basis() {
    let (code, out, _) = run(&["rpf", "--p", "5", "--word", "2", "--weight", "2", "--mode", "ansatz"]);
    assert_eq!(code, 0);
    assert!(out.contains("family\t1 free tail direction"), "{out}");
    assert!(out.contains("direction\t(1)"), "{out}");
    let (_, out, _) = run(&["--output", "json", "rpf", "--p", "5", "--word", "2", "--weight", "2", "--mode", "ansatz"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["directions"].as_array().unwrap().len(), 1);
    assert_eq!(v["verdict"]["valid"], Value::Bool(true));
}

#[test]
fn verify_roundtrips_printed_functions() {
    let (_, printed, _) = run(&["--output", "json", "rpf", "--p", "6", "--word", "1,3,5", "--weight", "2"]);
    let path = scratch("good.json", &printed);
    let (code, out, _) = run(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid"), "{out}");

    // the bare RPF object is accepted too
    let v: Value = serde_json::from_str(&printed).unwrap();
    let path = scratch("bare.json", &v["rpf"].to_string());
    assert!(run(&["verify", "--file", path.to_str().unwrap()]).1.starts_with("valid"));
}

#[test]
fn verify_flags_an_edited_coefficient() {
    let (_, printed, _) = run(&["--output", "json", "rpf", "--p", "6", "--word", "1,3,5", "--weight", "2"]);
    let mut v: Value = serde_json::from_str(&printed).unwrap();
    let coeff = &mut v["rpf"]["pole_terms"][0]["coeff"]["u"]["num"][0];
    *coeff = Value::from(coeff.as_i64().unwrap() + 1);
    let path = scratch("edited.json", &v.to_string());
    let (code, out, _) = run(&["--output", "json", "verify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let verdict: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(verdict["valid"], Value::Bool(false), "{out}");
    assert!(verdict["relation"].is_string() && verdict["point"].is_string(), "{out}");
    assert_ne!(verdict["residual_decimal"], Value::from("0"), "{out}");
}

#[test]
fn exit_codes() {
    // usage errors
    let empty = scratch("empty.json", "");
    assert_eq!(run(&["verify", "--file", empty.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["verify", "--file", "/nonexistent/rpf.json"]).0, 2);
    assert_eq!(run(&["cf", "--p", "5"]).0, 2);
    assert_eq!(run(&["cf", "--p", "5", "--period", "2,x"]).0, 2);
    assert_eq!(run(&["count", "--p", "5", "--max-n", "0"]).0, 2);
    assert_eq!(run(&["rpf", "--p", "5", "--word", "2", "--weight", "5"]).0, 2);
    assert_eq!(run(&[]).0, 2);

    // domain errors
    let (code, _, err) = run(&["rpf", "--p", "5", "--word", "1", "--weight", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    assert_eq!(run(&["cf", "--p", "4", "--word", "1,1"]).0, 1);

    // success, including help
    assert_eq!(run(&["minpoly", "--p", "7"]).0, 0);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn latex_output_matches_the_closed_form() {
    let (code, out, _) = run(&["--output", "latex", "rpf", "--p", "4", "--word", "2", "--weight", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r"\frac{1}{(z^{2} - 1)}");
}
