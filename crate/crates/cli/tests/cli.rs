use std::process::{Command, Output};

use lefschetz_core::lefschetz::{PropertyReport, Verdict};
use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
        .args(args)
        .env_remove("LEFSCHETZ_SEED")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn ideal_file(dir: &TempDir, name: &str, vars: usize, characteristic: u64, gens: &[&str]) -> String {
    let path = dir.path().join(name);
    let body = serde_json::json!({ "vars": vars, "char": characteristic, "gens": gens });
    std::fs::write(&path, body.to_string()).unwrap();
    path.to_str().unwrap().to_owned()
}

const GOTZMANN: [&str; 7] = ["x1^2", "x1*x2", "x2^3", "x2^2*x3", "x1*x3^3", "x2*x3^3", "x3^4"];

/// `x^3, y^3, z^3` and `(x + y + z)^3` expanded.
const MM: [&str; 4] = [
    "x1^3",
    "x2^3",
    "x3^3",
    "x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 6*x1*x2*x3 + 3*x1*x3^2 + x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + x3^3",
];

#[test]
fn classify_reports_both_predicates() {
    let out = run(&["classify", "1,3,4,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("forces WLP      yes"));
    assert!(text.contains("forces SLP/MRP  no (h_3 = 3 > 2)"));

    let out = run(&["classify", "1,2,3,2,1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["forces_wlp"]["forces"], true);
    assert_eq!(v["forces_slp_mrp"]["forces"], true);
    assert_eq!(v["t_index"], 3);

    let v = json(&run(&["--json", "classify", "1,3,6,6"]));
    assert_eq!(v["forces_wlp"]["failure"]["index"], 3);
}

#[test]
fn classify_exit_codes() {
    let out = run(&["classify", "1,2,4"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an O-sequence"));
    assert_eq!(code(&run(&["classify", "2,1"])), 3);
    assert_eq!(code(&run(&["classify", "1,a,2"])), 2);
    assert_eq!(code(&run(&["classify", "1,-1"])), 2);
    assert_eq!(code(&run(&["classify"])), 2);
}

#[test]
fn lexseg_examples() {
    let gens = |seq: &str| {
        let out = run(&["lexseg", seq]);
        assert_eq!(code(&out), 0);
        let text = stdout(&out);
        assert!(text.contains("(matches)"));
        text.lines().next().unwrap().to_owned()
    };
    assert_eq!(gens("1,3,4,3"), "x1^2, x1*x2, x1*x3^2, x2^3, x2^2*x3^2, x2*x3^3, x3^4");
    assert_eq!(gens("1,1"), "x1^2");
    assert_eq!(gens("1,2,1"), "x1^2, x1*x2, x2^3");
    assert_eq!(code(&run(&["lexseg", "1,2,4"])), 3);
    assert_eq!(code(&run(&["lexseg", "1,2", "--char", "4"])), 2);
}

#[test]
fn lex_file_fails_mrp_under_last_variable() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("lex.json");
    let path = path.to_str().unwrap();
    assert_eq!(code(&run(&["lexseg", "1,3,4,3", "--output", path])), 0);
    for property in ["slp", "mrp"] {
        let out = run(&["test", "--ideal", path, "--property", property, "--strategy", "lastvar", "--json"]);
        assert_eq!(code(&out), 1);
        let report: PropertyReport = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report.verdict, Verdict::FailsObserved);
        assert!(report.certified);
    }
    let out = run(&["test", "--ideal", path, "--property", "wlp", "--strategy", "lastvar"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("holds (deterministic)"));
}

#[test]
fn gotzmann_and_mm_verdicts() {
    let dir = TempDir::new().unwrap();
    let gotzmann = ideal_file(&dir, "g.json", 3, 0, &GOTZMANN);
    assert_eq!(code(&run(&["test", "--ideal", &gotzmann, "--property", "slp", "--strategy", "random"])), 0);
    assert_eq!(code(&run(&["test", "--ideal", &gotzmann, "--property", "mrp"])), 0);

    let mm = ideal_file(&dir, "mm.json", 3, 0, &MM);
    let out = run(&["test", "--ideal", &mm, "--property", "slp", "--seed", "11"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("d=3 i=1: rank 2 < 3"));
    assert_eq!(code(&run(&["test", "--ideal", &mm, "--property", "mrp", "--seed", "11"])), 0);
}

#[test]
fn finite_field_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ci = ideal_file(&dir, "ci2.json", 2, 2, &["x1^2", "x2^2"]);
    // Every square of a linear form over F_2 is zero here, so sampling cannot decide.
    let out = run(&["test", "--ideal", &ci, "--property", "slp"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("finite-field caveat"));
    assert_eq!(code(&run(&["test", "--ideal", &ci, "--property", "slp", "--strategy", "exhaustive"])), 1);
    assert_eq!(code(&run(&["test", "--ideal", &ci, "--property", "mrp", "--strategy", "exhaustive"])), 0);

    let big = ideal_file(&dir, "big.json", 3, 7, &["x1^6", "x2^6", "x3^6"]);
    let out = run(&["test", "--ideal", &big, "--property", "mrp", "--strategy", "exhaustive", "--budget", "10"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn malformed_ideal_files() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("none.json");
    assert_eq!(code(&run(&["test", "--ideal", missing.to_str().unwrap(), "--property", "wlp"])), 2);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"vars\": 2").unwrap();
    assert_eq!(code(&run(&["test", "--ideal", garbage.to_str().unwrap(), "--property", "wlp"])), 2);

    for (name, gens) in [("inhom", vec!["x1 + x2^2", "x2^2"]), ("unknown", vec!["x1^2", "x3^2"]), ("syntax", vec!["x1^^2"])] {
        let path = ideal_file(&dir, name, 2, 0, &gens);
        assert_eq!(code(&run(&["test", "--ideal", &path, "--property", "wlp"])), 2, "{name}");
    }
    let not_artinian = ideal_file(&dir, "line.json", 2, 0, &["x1^2"]);
    assert_eq!(code(&run(&["test", "--ideal", &not_artinian, "--property", "wlp", "--degree-cap", "8"])), 2);

    let over_q = ideal_file(&dir, "q.json", 2, 0, &["x1^2", "x2^2"]);
    assert_eq!(code(&run(&["test", "--ideal", &over_q, "--property", "wlp", "--strategy", "exhaustive"])), 2);
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let gotzmann = ideal_file(&dir, "g.json", 3, 0, &GOTZMANN);
    let args = ["test", "--ideal", &gotzmann, "--property", "mrp", "--seed", "99", "--json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let report: PropertyReport = serde_json::from_slice(&a.stdout).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(again.trim_end(), stdout(&a).trim_end());
    assert_eq!(report.seed, Some(99));
    assert!(!report.entries.is_empty());
}

#[test]
fn seed_comes_from_env_unless_flag_given() {
    let dir = TempDir::new().unwrap();
    let path = ideal_file(&dir, "ci.json", 2, 0, &["x1^2", "x2^3"]);
    let seed_of = |extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_lefschetz"));
        cmd.args(["test", "--ideal", &path, "--property", "wlp", "--json"]).args(extra);
        cmd.env("LEFSCHETZ_SEED", "17");
        let out = cmd.output().unwrap();
        json(&out)["seed"].as_u64().unwrap()
    };
    assert_eq!(seed_of(&[]), 17);
    assert_eq!(seed_of(&["--seed", "5"]), 5);
    let out = run(&["test", "--ideal", &path, "--property", "wlp", "--json"]);
    assert_eq!(json(&out)["seed"], 0);
}

#[test]
fn hpbound_values() {
    let v = json(&run(&["hpbound", "1,3,4,3", "3", "2", "--json"]));
    assert_eq!(v["bound"], "1");
    assert_eq!(v["terms"], serde_json::json!(["0", "1"]));
    let v = json(&run(&["hpbound", "1,3,4,3", "2", "1", "--json"]));
    assert_eq!(v["bound"], "1");
    assert_eq!(code(&run(&["hpbound", "1,3,4,3", "1", "2"])), 2);
    assert_eq!(code(&run(&["hpbound", "1,3,7", "2", "1"])), 3);
}

#[test]
fn sweep_summaries() {
    let out = run(&["sweep", "--max-r", "2", "--max-e", "4", "--max-h", "4", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["forcing"], v["sequences"]);
    assert_eq!(v["mismatches"], 0);

    let out = run(&["sweep", "--max-r", "3", "--max-e", "4", "--max-h", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("sequences     140"));
    assert!(text.contains("mismatches    0"));

    assert_eq!(code(&run(&["sweep", "--max-r", "3", "--max-e", "4", "--max-h", "6", "--max-sequences", "20"])), 5);
}

#[test]
fn sweep_output_is_stable() {
    let args = ["sweep", "--max-r", "3", "--max-e", "3", "--max-h", "5", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
