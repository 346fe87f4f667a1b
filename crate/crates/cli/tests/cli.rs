use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rvx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rvx"))
        .args(args)
        .env_remove("RVX_CACHE")
        .output()
        .expect("spawn rvx")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "rvx failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&rvx(args))).unwrap()
}

fn golden(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn flatten(v: &Value, path: String, out: &mut Vec<String>) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => m.iter().for_each(|(k, v)| flatten(v, join(k), out)),
        Value::Array(a) if !a.is_empty() => a.iter().enumerate().for_each(|(i, v)| flatten(v, format!("{path}[{i}]"), out)),
        Value::Object(_) => out.push(format!("{path}: {{}}")),
        Value::Array(_) => out.push(format!("{path}: []")),
        Value::String(s) => out.push(format!("{path}: {s}")),
        other => out.push(format!("{path}: {other}")),
    }
}

#[test]
fn compute_complete_graph_matches_golden() {
    let v = json(&["compute", "--g6", "C~", "--k", "3", "--format", "json"]);
    assert_eq!(v["result"]["value"], 0);
    assert_eq!(v, golden("compute_k4_k3.json"));
}

#[test]
fn compute_path_matches_golden() {
    let v = json(&["compute", "--family", "path:4", "--k", "2", "--format", "json"]);
    assert_eq!(v["result"]["value"], 2);
    assert_eq!(v, golden("compute_p4_k2.json"));
}

#[test]
fn sweep_ng_four_matches_golden() {
    let v = json(&["sweep", "ng", "--n", "4", "--format", "json"]);
    assert_eq!(v["result"]["pairs_examined"], 1);
    assert_eq!(v["result"]["min_sum"], 2);
    assert_eq!(v, golden("sweep_ng_4.json"));
}

#[test]
fn reports_have_every_top_level_key() {
    let runs: [&[&str]; 5] = [
        &["compute", "--family", "cycle:5", "--k", "3", "--format", "json"],
        &["sdiam", "--family", "cycle:5", "--k", "3", "--format", "json"],
        &["verify", "--g6", "Ch", "--colors", "0,0,1,0", "--k", "2", "--format", "json"],
        &["family", "rose:2,3", "--format", "json"],
        &["sweep", "tsearch", "--n", "5", "--ell", "2", "--format", "json"],
    ];
    for args in runs {
        let v = json(args);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "input", "params", "result", "stats", "claims"], "{args:?}");
    }
}

#[test]
fn prop3_suite_confirmed_at_five() {
    let v = json(&["claims", "--suite", "prop3", "--n", "5", "--format", "json"]);
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 21);
    assert!(claims.iter().all(|c| c["status"] == "confirmed" && c["id"] == "prop3"));
    assert_eq!(v["result"]["refuted"], 0);
}

#[test]
fn strict_exit_code_follows_refutations() {
    let ok = rvx(&["claims", "--suite", "prop3", "--n", "5", "--strict"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = rvx(&["sweep", "ng", "--n", "4", "--strict"]);
    assert_eq!(bad.status.code(), Some(2));
    let lax = rvx(&["sweep", "ng", "--n", "4"]);
    assert_eq!(lax.status.code(), Some(0));
}

#[test]
fn text_is_flattened_json() {
    let runs: [&[&str]; 4] = [
        &["compute", "--family", "clique_chain:2", "--k", "3"],
        &["sweep", "ng", "--n", "5"],
        &["claims", "--suite", "lemma2"],
        &["verify", "--g6", "Dhc", "--colors", "0,0,0,0,0", "--k", "3"],
    ];
    for args in runs {
        let text = stdout(&rvx(args));
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let mut lines = Vec::new();
        flatten(&json(&with_json), String::new(), &mut lines);
        assert_eq!(text.lines().collect::<Vec<_>>(), lines, "{args:?}");
    }
}

#[test]
fn cache_makes_second_compute_free() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rvx.tsv");
    let cache = cache.to_str().unwrap();
    let args = ["compute", "--family", "path:6", "--k", "3", "--cache", cache, "--format", "json"];
    let first = json(&args);
    let second = json(&args);
    assert_eq!(first["result"]["cached"], false);
    assert!(first["stats"]["colorings_examined"].as_u64().unwrap() > 0);
    assert_eq!(second["result"]["cached"], true);
    assert_eq!(second["stats"]["colorings_examined"], 0);
    assert_eq!(second["result"]["value"], first["result"]["value"]);

    // isomorphic input shares the entry
    let relabeled = json(&["compute", "--g6", "E@Z?", "--k", "3", "--cache", cache, "--format", "json"]);
    assert_eq!(relabeled["result"]["cached"], true);

    let check = json(&["cache-check", "--cache", cache, "--fraction", "1", "--format", "json"]);
    assert_eq!(check["result"]["mismatches"], 0);
    assert_eq!(check["result"]["checked"], 1);
}

#[test]
fn cache_check_flags_tampered_entries() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rvx.tsv");
    std::fs::write(&cache, "CL\t3\t2\n").unwrap();
    let cache = cache.to_str().unwrap();
    let out = rvx(&["cache-check", "--cache", cache, "--fraction", "1", "--strict", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["mismatches"], 1);
    assert_eq!(v["claims"][0]["computed"], "1");
}

#[test]
fn max_colors_reports_above_limit() {
    let v = json(&["compute", "--family", "path:6", "--k", "3", "--max-colors", "1", "--format", "json"]);
    assert_eq!(v["result"]["above_limit"], true);
    assert_eq!(v["result"]["value"], Value::Null);
}

#[test]
fn certificates_cover_every_subset() {
    let v = json(&["compute", "--family", "cycle:5", "--k", "3", "--certificates", "--format", "json"]);
    assert_eq!(v["result"]["certificates"].as_array().unwrap().len(), 10);
}

#[test]
fn file_input_accepts_edge_lists_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p4.txt");
    std::fs::write(&file, "4\n0 1\n1 2\n2 3\n").unwrap();
    let v = json(&["compute", "--file", file.to_str().unwrap(), "--k", "2", "--format", "json"]);
    assert_eq!(v["result"]["value"], 2);

    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_rvx"))
        .args(["sdiam", "--file", "-", "--k", "3", "--format", "json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["sdiam"], 3);
}

#[test]
fn sweep_reads_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.g6");
    // P_5, a relabeling of it and its complement
    std::fs::write(&file, "DhC\nDM_\nDUw\n").unwrap();
    let v = json(&["sweep", "ng", "--n", "5", "--input", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(v["result"]["pairs_examined"], 1);
    assert_eq!(v["result"]["max_sum"], 4);
}

#[test]
fn family_emits_raw_graph() {
    assert_eq!(stdout(&rvx(&["family", "path:3"])), "Bg\n");
    assert_eq!(stdout(&rvx(&["family", "path:3", "--emit", "edges"])), "3\n0 1\n1 2\n");
}

#[test]
fn csv_tables() {
    let text = stdout(&rvx(&["sweep", "tsearch", "--n", "5", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,k,ell,t,lower_bound,upper_bound_proof,upper_bound_statement,graphs_examined,extremal");
    assert_eq!(lines.count(), 2);
    let kv = stdout(&rvx(&["compute", "--g6", "C~", "--k", "3", "--format", "csv"]));
    assert!(kv.starts_with("key,value\n"));
    assert!(kv.contains("\nresult.value,0\n"));
}

#[test]
fn errors_exit_one_with_a_single_line() {
    let cases: [(&[&str], &str); 7] = [
        (&["compute", "--g6", "??", "--k", "3"], "--g6"),
        (&["compute", "--g6", "C~"], "--k"),
        (&["compute", "--g6", "C~", "--family", "path:4", "--k", "2"], "--family"),
        (&["compute", "--g6", "C~", "--k", "9"], "k"),
        (&["claims", "--suite", "nope"], "nope"),
        (&["family", "moebius:3"], "moebius"),
        (&["frobnicate"], "frobnicate"),
    ];
    for (args, token) in cases {
        let out = rvx(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.contains(token), "{args:?}: {err}");
    }
}

#[test]
fn help_and_version_succeed() {
    assert!(rvx(&["--help"]).status.success());
    assert!(rvx(&["--version"]).status.success());
}
