use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use swfold_cli::{load_spec, run_with, OutputRecord};
use swfold_core::{Basis, KnotTable, LaurentPoly};

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn spec(name: &str) -> String {
    crate_dir().join("specs").join(name).display().to_string()
}

fn swfold(args: &[&str]) -> OutputRecord {
    let argv: Vec<String> = std::iter::once("swfold")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    run_with(&argv, None)
}

fn json_of(args: &[&str]) -> Value {
    let mut with_flag = args.to_vec();
    with_flag.push("--json");
    let out = swfold(&with_flag);
    assert_eq!(out.status, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn basis_of(payload: &Value) -> Basis {
    Basis::new(
        payload["basis"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string()),
    )
    .unwrap()
}

fn m12(s: &str) -> LaurentPoly {
    LaurentPoly::from_text(s, &Basis::new(["m1", "m2", "m3"]).unwrap()).unwrap()
}

fn validate(schema: &str, payload: &Value) {
    let path = crate_dir().join("schema").join(format!("{schema}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(payload).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

#[test]
fn sw3_prints_figure_eight_pair() {
    let out = swfold(&["sw3", &spec("fig8-pair.json")]);
    assert_eq!(out.status, 0);
    let line = out.stdout.lines().find(|l| l.starts_with("SW3 = ")).unwrap();
    assert_eq!(
        m12(line.trim_start_matches("SW3 = ")),
        m12("m1^-2*m2^-2 - 3*m2^-2 + m1^2*m2^-2 - 3*m1^-2 + 9 - 3*m1^2 + m1^-2*m2^2 - 3*m2^2 + m1^2*m2^2")
    );
}

#[test]
fn fold_prints_example_one() {
    let out = swfold(&["fold", &spec("fig8-pair.json"), "--chi", "4*m1", "--quiet"]);
    assert_eq!(out.status, 0);
    assert_eq!(
        m12(out.stdout.trim()),
        m12("2*m1^2*m2^-2 - 3*m2^-2 + 9 - 6*m1^2 + 2*m1^2*m2^2 - 3*m2^2")
    );
}

#[test]
fn bundle_both_methods_match() {
    let out = swfold(&["bundle", "--genus", "2", "--euler", "4", "--method", "both"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("direct: -2 + 2*t^2"));
    assert!(out.stdout.contains("closed: -2 + 2*t^2"));
    assert!(out.stdout.contains("MATCH (up to sign)"));

    let out = swfold(&["bundle", "--genus", "2", "--euler", "-3", "--method", "direct"]);
    assert_eq!(out.stdout, "circle bundle over genus 2 surface, euler number -3\ndirect: -2 + t + t^2\n");
}

#[test]
fn load_spec_examples() {
    let mut table = KnotTable::builtin().unwrap();
    let m = load_spec(Path::new(&spec("fig8-pair.json")), &mut table).unwrap();
    assert_eq!(m.b1, 3);
    assert!(m.fibered);
    let m = load_spec(Path::new(&spec("52-pair.json")), &mut table).unwrap();
    assert!(!m.fibered);
    let m = load_spec(Path::new(&spec("t3.json")), &mut table).unwrap();
    assert_eq!(m.sw3.to_text(), "1");
    let m = load_spec(Path::new(&spec("genus2-x-s1.json")), &mut table).unwrap();
    assert_eq!(m.sw3.to_text(), "t^-2 - 2 + t^2");
    assert_eq!(m.b1, 5);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["sw3", "specs/fig8-pair.json"],
        vec!["fold", "specs/fig8-pair.json", "--chi", "2*m1 + m2", "--json"],
        vec!["search", "specs/52-pair.json", "--box", "2"],
        vec!["knot", "list", "--json"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| a.strip_prefix("specs/").map_or_else(|| a.to_string(), spec))
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = swfold(&args);
        assert_eq!(first.status, 0);
        assert_eq!(swfold(&args), first);
    }
}

#[test]
fn binary_output_is_byte_identical() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_swfold"))
            .args(["search", &spec("fig8-pair.json"), "--box", "2", "--json"])
            .env_remove("SWFOLD_KNOT_TABLE")
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let in_process = swfold(&["search", &spec("fig8-pair.json"), "--box", "2", "--json"]);
    assert_eq!(String::from_utf8(a.stdout).unwrap(), in_process.stdout);
}

#[test]
fn json_polynomials_round_trip() {
    let payload = json_of(&["fold", &spec("fig8-pair.json"), "--chi", "4*m1"]);
    let basis = basis_of(&payload);
    for field in ["sw3", "sw4"] {
        let text = payload[field].as_str().unwrap();
        let p = LaurentPoly::from_text(text, &basis).unwrap();
        assert_eq!(p.to_text(), text);
    }
    assert_eq!(payload["case"], "folded");
    assert_eq!(payload["modulus"], 4);

    let payload = json_of(&["search", &spec("52-pair.json"), "--box", "2"]);
    let basis = basis_of(&payload);
    for e in payload["entries"].as_array().unwrap() {
        let text = e["sw4"].as_str().unwrap();
        assert_eq!(LaurentPoly::from_text(text, &basis).unwrap().to_text(), text);
    }
}

#[test]
fn search_row_count() {
    for (bound, rank) in [(1usize, 3u32), (2, 3), (5, 3)] {
        let payload = json_of(&["search", &spec("fig8-pair.json"), "--box", &bound.to_string()]);
        let expected = ((2 * bound + 1).pow(rank) - 1) / 2;
        assert_eq!(payload["entries"].as_array().unwrap().len(), expected);
        assert_eq!(payload["count"], expected);
    }
    let text = swfold(&["search", &spec("fig8-pair.json"), "--box", "1"]).stdout;
    let rows = text.lines().filter(|l| l.contains("*m")).count();
    assert_eq!(rows, 13);
}

#[test]
fn json_payloads_match_schemas() {
    let fig8 = spec("fig8-pair.json");
    validate("sw3", &json_of(&["sw3", &fig8]));
    validate("fold", &json_of(&["fold", &fig8, "--chi", "4*m1"]));
    validate("fold", &json_of(&["fold", &fig8, "--chi", "0"]));
    validate("bundle", &json_of(&["bundle", "--genus", "3", "--euler", "7"]));
    validate("bundle", &json_of(&["bundle", "--genus", "1", "--euler", "2", "--method", "closed"]));
    validate("obstruct", &json_of(&["obstruct", &fig8, "--chi", "m1"]));
    validate("obstruct", &json_of(&["obstruct", &fig8, "--chi", "-4*m2"]));
    validate("search", &json_of(&["search", &spec("52-pair.json"), "--box", "2"]));
    validate("knot", &json_of(&["knot", "list"]));
    validate("knot", &json_of(&["knot", "show", "5_2"]));
}

#[test]
fn product_case_for_zero_chi() {
    let payload = json_of(&["fold", &spec("fig8-pair.json"), "--chi", "0"]);
    assert_eq!(payload["case"], "product");
    assert_eq!(payload["sw4"], payload["sw3"]);
    let payload = json_of(&["obstruct", &spec("fig8-pair.json"), "--chi", "0"]);
    assert_eq!(payload["obstructed"], false);
}

#[test]
fn obstruct_verdicts() {
    let fig8 = spec("fig8-pair.json");
    for chi in ["4*m1", "-4*m1", "4*m2", "-4*m2"] {
        let payload = json_of(&["obstruct", &fig8, "--chi", chi]);
        assert_eq!(payload["obstructed"], true, "{chi}");
    }
    let payload = json_of(&["obstruct", &fig8, "--chi", "m1"]);
    assert_eq!(payload["obstructed"], false);
    assert_eq!(payload["unit_classes"].as_array().unwrap().len(), 2);
    let out = swfold(&["obstruct", &fig8, "--chi", "4*m1", "--quiet"]);
    assert_eq!(out.stdout, "OBSTRUCTED\n");
}

fn assert_error(out: &OutputRecord, status: i32, code: &str) {
    assert_eq!(out.status, status, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let first = out.stderr.lines().next().unwrap();
    assert!(first.starts_with(&format!("error[{code}]: ")), "{first}");
}

#[test]
fn error_paths() {
    let fig8 = spec("fig8-pair.json");
    assert_error(&swfold(&["frobnicate"]), 2, "E-USAGE");
    assert_error(&swfold(&["sw3"]), 2, "E-USAGE");
    assert_error(&swfold(&["fold", &fig8, "--chi", "4*m1 +"]), 2, "E-SYNTAX");
    assert_error(&swfold(&["fold", &fig8, "--chi", "4*z"]), 2, "E-NAME");
    assert_error(&swfold(&["fold", &fig8, "--chi", "m1^2"]), 2, "E-SYNTAX");
    assert_error(&swfold(&["sw3", "/nonexistent/spec.json"]), 2, "E-IO");
    assert_error(&swfold(&["bundle", "--genus", "0", "--euler", "2"]), 1, "E-DOMAIN");
    assert_error(&swfold(&["bundle", "--genus", "2", "--euler", "0"]), 1, "E-TORSION");
    assert_error(&swfold(&["search", &fig8, "--box", "0"]), 1, "E-DOMAIN");
    assert_error(&swfold(&["knot", "show", "7_4"]), 2, "E-LOOKUP");

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.display().to_string()
    };
    let bad = write("bad.json", r#"{"base": "t3", "sums": [{"knot": "4_1"}]}"#);
    let out = swfold(&["sw3", &bad]);
    assert_error(&out, 2, "E-SCHEMA");
    assert!(out.stderr.contains("sums[0]"));
    let bad = write("base.json", r#"{"base": "s3"}"#);
    assert_error(&swfold(&["sw3", &bad]), 2, "E-SCHEMA");
    let unknown = write("unknown.json", r#"{"base": "t3", "sums": [{"knot": "9_9", "meridian": "m1"}]}"#);
    assert_error(&swfold(&["sw3", &unknown]), 2, "E-LOOKUP");
    let meridian = write("meridian.json", r#"{"base": "t3", "sums": [{"knot": "3_1", "meridian": "m7"}]}"#);
    assert_error(&swfold(&["sw3", &meridian]), 2, "E-NAME");
    let thin = write("thin.json", r#"{"base": {"surface_x_s1": 0}}"#);
    assert_error(&swfold(&["sw3", &thin]), 1, "E-DOMAIN");
}

#[test]
fn knot_registration() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("knots.json");
    std::fs::write(
        &table,
        r#"[{"name": "6_1", "fibered": false, "seifert": [[-1, 1], [0, 2]]},
            {"name": "granny", "fibered": true, "alexander": "t^2 - 2*t + 3 - 2*t^-1 + t^-2"}]"#,
    )
    .unwrap();

    let argv = |args: &[&str]| -> Vec<String> {
        std::iter::once("swfold").chain(args.iter().copied()).map(String::from).collect()
    };
    let out = run_with(&argv(&["knot", "show", "6_1"]), Some(&table));
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert!(out.stdout.contains("alexander = -2*t^-1 + 5 - 2*t"));

    let out = run_with(&argv(&["knot", "register", table.to_str().unwrap()]), None);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert!(out.stdout.contains("granny: alexander = t^-2 - 2*t^-1 + 3 - 2*t + t^2"));

    let spec_file = dir.path().join("spec.json");
    std::fs::write(
        &spec_file,
        r#"{"base": "t3", "sums": [{"knot": "mine", "meridian": "m3"}],
            "knots": [{"name": "mine", "fibered": true, "alexander": "t - 1 + t^-1"}]}"#,
    )
    .unwrap();
    let out = run_with(&argv(&["sw3", spec_file.to_str().unwrap(), "--quiet"]), None);
    assert_eq!(out.stdout, "m3^-2 - 1 + m3^2\n");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "fibered": true, "seifert": [[1]]}"#).unwrap();
    let out = run_with(&argv(&["knot", "register", bad.to_str().unwrap()]), None);
    assert_error(&out, 1, "E-KNOT");
}
