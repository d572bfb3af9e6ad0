use std::path::Path;
use std::process::{Command, Output};

fn oddorient(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_oddorient"));
    cmd.args(args).env_remove("ODDORIENT_CACHE");
    if let Some(dir) = cache {
        cmd.env("ODDORIENT_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_writes_graph_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let out = oddorient(&["gen", "kneser:5,2", "-o", path.to_str().unwrap()], None);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 10);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 15);
    assert_eq!(doc["vertices"][0], serde_json::json!({"set": [1, 2]}));
}

#[test]
fn report_check_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("sg62.json");
    let out = oddorient(&["orient", "schrijver4", "--k", "2", "-o", report.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = oddorient(&["check", "alt", report.to_str().unwrap()], None);
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "coloring");

    let dot = dir.path().join("sg62.dot");
    let out = oddorient(&["export", "dot", report.to_str().unwrap(), "-o", dot.to_str().unwrap()], None);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph G {"));
    assert_eq!(text.matches(" -> ").count(), 18);
    assert_eq!(text.matches("fillcolor=").count(), 9);
}

#[test]
fn shortest_cycle_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("petersen.json");
    let out = oddorient(&["orient", "kneser-source", "--m", "1", "--k", "2", "-o", report.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(oddorient(&["check", "shortest", report.to_str().unwrap()], None).status.success());

    let c5 = dir.path().join("c5.json");
    let doc = serde_json::json!({
        "vertices": [{"int":0},{"int":1},{"int":2},{"int":3},{"int":4}],
        "edges": [[{"int":0},{"int":1}],[{"int":1},{"int":2}],[{"int":2},{"int":3}],[{"int":3},{"int":4}],[{"int":0},{"int":4}]],
        "arcs": [[{"int":0},{"int":1}],[{"int":1},{"int":2}],[{"int":2},{"int":3}],[{"int":3},{"int":4}],[{"int":4},{"int":0}]],
    });
    std::fs::write(&c5, doc.to_string()).unwrap();
    assert_eq!(oddorient(&["check", "shortest", c5.to_str().unwrap()], None).status.code(), Some(1));
    let out = oddorient(&["check", "alt", c5.to_str().unwrap()], None);
    assert!(stdout(&out).contains("\"coloring\""));
}

#[test]
fn hom_and_refute() {
    let out = oddorient(&["hom", "--from", "schrijver:6,2", "--to", "shift:4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"found\": true"));
    assert_eq!(oddorient(&["hom", "--from", "kneser:6,2", "--to", "shift:4", "--refute"], None).status.code(), Some(0));
    assert_eq!(oddorient(&["hom", "--from", "schrijver:6,2", "--to", "shift:4", "--refute"], None).status.code(), Some(1));
    let out = oddorient(&["hom", "--from", "clebsch", "--to", "shift:16", "--budget", "3"], None);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(oddorient(&["gen"], None).status.code(), Some(2));
    assert_eq!(oddorient(&["gen", "petersen:9"], None).status.code(), Some(2));
}

#[test]
fn suite_uses_cache_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let args = ["suite", "--filter", "shift4-*", "--jobs", "2", "--json", json.to_str().unwrap()];
    let first = oddorient(&args, Some(dir.path()));
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let second = oddorient(&args, Some(dir.path()));
    assert!(stdout(&second).contains("(cached)"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["records"].as_array().unwrap().len(), 2);
    assert!(report["records"].as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));
}
