use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn chevlab(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chevlab"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("CHEVLAB_THREADS", t),
        None => cmd.env_remove("CHEVLAB_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn steinberg_passes() {
    let out = chevlab(&["verify", "steinberg", "--type", "C2"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["result"][0]["commutator_relations"], 48);
}

#[test]
fn invalid_ring_fails_validation() {
    let out = chevlab(&["bruteforce", "--stmt", "T1", "--type", "A2", "--ring", "Z/1", "--ideal-i", "2", "--ideal-j", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Z/1"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(chevlab(&["verify", "levi", "--type", "E8"], None).status.code(), Some(2));
    assert_eq!(chevlab(&["factorize", "long-root", "--type", "A2"], None).status.code(), Some(2));
}

#[test]
fn g2_enumeration_is_out_of_scope() {
    let out = chevlab(&["bruteforce", "--stmt", "T1", "--type", "G2", "--ring", "Z/9", "--ideal-i", "3", "--ideal-j", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], Value::Null);
    assert_eq!(v["result"]["status"], "OutOfScope");
}

#[test]
fn factorization_lists_certificates() {
    let out = chevlab(&["factorize", "main-lemma", "--case", "C2Short"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let factors = v["result"]["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    assert!(factors.iter().all(|f| f["valid"] == true));
    assert_eq!(v["result"]["product_equals_target"], true);
}

#[test]
fn finite_factorization_needs_parameters() {
    let out = chevlab(&["factorize", "main-lemma", "--case", "A2", "--ring", "Z/9", "--xi", "3"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = chevlab(
        &["factorize", "main-lemma", "--case", "A2", "--ring", "Z/9", "--xi", "3", "--zeta", "-3", "--eta", "2"],
        None,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn campaign_is_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "c.json",
        r#"{"seed": 11, "tasks": [
            {"command": "verify-levi", "type": "A2", "ring": "Z/8", "ideal_i": 2, "ideal_j": 2, "samples": 200},
            {"command": "verify-main-lemma", "case": "A2", "ring": "Z/9", "ideal_i": 3, "ideal_j": 3},
            {"command": "dump-constants", "type": "A2"}
        ]}"#,
    );
    let a = chevlab(&["campaign", "run", &file], Some("1"));
    let b = chevlab(&["campaign", "run", &file], Some("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], 2);
    assert_eq!(v["informational"], 1);
    assert!(v["tasks"][0].get("elapsed_ms").is_none());
}

#[test]
fn campaign_validates_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "c.json",
        r#"{"tasks": [
            {"command": "verify-steinberg"},
            {"command": "verify-levi", "type": "A2", "ring": "Z/1", "ideal_i": 2, "ideal_j": 2, "samples": 10}
        ]}"#,
    );
    let out = chevlab(&["campaign", "run", &file], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("task 1"));
    let unknown = write(dir.path(), "u.json", r#"{"tasks": [{"command": "verify-everything"}]}"#);
    assert_eq!(chevlab(&["campaign", "run", &unknown], None).status.code(), Some(2));
}

#[test]
fn subcommand_matches_campaign_entry() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = chevlab(
        &["--seed", "4", "--report", report.to_str().unwrap(), "verify", "chevalley", "--type", "G2"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let single: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let file = write(dir.path(), "c.json", r#"{"seed": 4, "tasks": [{"command": "verify-chevalley", "type": "G2"}]}"#);
    let camp = json(&chevlab(&["campaign", "run", &file], None));
    assert_eq!(camp["tasks"][0], single);
}

#[test]
fn reference_campaign_round_trips() {
    let out = chevlab(&["campaign", "default"], None);
    assert_eq!(out.status.code(), Some(0));
    let c: chevlab_cli::Campaign = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(c, chevlab_cli::Campaign::reference());
    assert!(c.validate().is_ok());
}

#[test]
fn timings_are_opt_in() {
    let out = chevlab(&["--timings", "verify", "steinberg", "--type", "A2"], None);
    assert!(json(&out)["elapsed_ms"].is_u64());
}

#[test]
fn empty_campaign_passes() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "e.json", r#"{"tasks": []}"#);
    let out = chevlab(&["campaign", "run", &file], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tasks"].as_array().unwrap().len(), 0);
    assert_eq!(v["config"]["seed"], 1);
}

#[test]
fn flags_override_campaign_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("from_file.json");
    let file = write(
        dir.path(),
        "c.json",
        &format!(
            r#"{{"seed": 2, "output": {:?}, "tasks": [{{"command": "dump-constants", "type": "A2"}}]}}"#,
            target.to_str().unwrap()
        ),
    );
    let out = chevlab(&["campaign", "run", &file], None);
    assert!(out.stdout.is_empty());
    let from_file: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(from_file["tasks"][0]["seed"], 2);

    let flag_target = dir.path().join("from_flag.json");
    chevlab(&["--seed", "9", "--report", flag_target.to_str().unwrap(), "campaign", "run", &file], None);
    let from_flag: Value = serde_json::from_str(&std::fs::read_to_string(&flag_target).unwrap()).unwrap();
    assert_eq!(from_flag["config"]["seed"], 9);
    assert_eq!(from_flag["tasks"][0]["seed"], 9);
}
