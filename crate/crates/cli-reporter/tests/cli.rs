use std::process::{Command, Output};

use classifier::RuleReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cicy-gg")).args(args).env_remove("CICY_MODE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

#[test]
fn chi_examples() {
    assert_eq!(value(&["chi", "--threefold", "5", "--c1", "2", "--c2", "5"]), "10");
    assert_eq!(value(&["chi", "--threefold", "5", "--c1", "0", "--c2", "0"]), "0");
    assert_eq!(value(&["chi", "--threefold", "2,4", "--c1", "1", "--c2", "0"]), "6");
    assert_eq!(value(&["chi", "--threefold", "X8", "--c1", "1", "--c2", "0"]), "6");
    assert_eq!(value(&["chi", "--threefold", "5", "--c1", "1", "--c2", "3"]), "7/2");
}

#[test]
fn classify_examples() {
    let out = value(&["classify", "--threefold", "3,3", "--c1-max", "2", "--rank", "2"]);
    assert!(out.contains("admissible c2: 0 9 12 15 16 18"), "{out}");
    assert!(out.contains("unresolved: 16"), "{out}");
    let out = value(&["classify", "--threefold", "5", "--c1-max", "2", "--rank", "higher"]);
    assert!(out.contains("admissible c2: 0 5 10 15 20"), "{out}");
    let out = value(&["classify", "--threefold", "5", "--c1-max", "0", "--rank", "2"]);
    assert!(out.contains("admissible c2: 0\n"), "{out}");
}

#[test]
fn markdown_columns_align() {
    let out = value(&["classify", "--threefold", "2,4", "--format", "markdown"]);
    let tables: Vec<Vec<&str>> = out
        .split("\n\n")
        .map(|block| block.lines().filter(|l| l.starts_with('|')).collect::<Vec<_>>())
        .filter(|t| !t.is_empty())
        .collect();
    assert_eq!(tables.len(), 2);
    for t in tables {
        let bars = |l: &str| {
            let chars: Vec<char> = l.chars().collect();
            (0..chars.len()).filter(|&i| chars[i] == '|' && (i == 0 || chars[i - 1] != '\\')).collect::<Vec<_>>()
        };
        let first = bars(t[0]);
        assert!(t.iter().all(|l| bars(l) == first), "{t:?}");
    }
    assert!(out.contains("| 16 "));
}

#[test]
fn json_report_round_trips_and_out_file_matches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let printed = value(&["classify", "--threefold", "3,3", "--format", "json", "--out", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(printed, written);
    assert_eq!(RuleReport::from_json(&written).unwrap().to_json(), written);
    let parsed: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(parsed["admissible_c2"], serde_json::json!([0, 9, 12, 15, 16, 18]));
    assert_eq!(parsed["unresolved"], serde_json::json!([16]));
    let again = value(&["classify", "--threefold", "3,3", "--format", "json"]);
    assert_eq!(again, printed);
}

#[test]
fn query_examples() {
    assert_eq!(value(&["query", "pi", "--d", "14", "--r", "5"]), "15");
    assert_eq!(value(&["query", "hirzebruch-genus", "--e", "3", "--q", "0", "--class", "5,15"]), "26");
    assert_eq!(value(&["query", "liaison", "--total", "24", "--omega", "3", "--target", "2", "--cut", "3"]), "18");
    assert_eq!(value(&["query", "pi-one", "--d", "15", "--r", "5"]), "16");
    assert_eq!(value(&["query", "h0", "--threefold", "5", "--t", "2"]), "15");
    assert_eq!(value(&["query", "intersect", "--e", "1", "--class", "4,8", "--with", "2,5"]), "28");
    assert_eq!(value(&["query", "ci", "--degrees", "2,2", "--ambient", "3"]), "degree 4 genus 1 omega O(0)");
    assert_eq!(value(&["query", "genus", "--d", "5", "--r", "2"]), "6");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["query", "pi", "--d", "1", "--r", "5"]).status.code(), Some(2));
    assert_eq!(run(&["query", "liaison", "--total", "24", "--omega", "3", "--target", "3", "--cut", "3"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "--threefold", "5"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--threefold", "2,2,3"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--module", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn strict_mode_lists_the_five_threefolds() {
    let o = run(&["chi", "--threefold", "1,5", "--c1", "0", "--c2", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("5 | 2,4 | 3,3 | 2,2,3 | 2,2,2,2"), "{err}");
    let lax = Command::new(env!("CARGO_BIN_EXE_cicy-gg"))
        .args(["chi", "--threefold", "1,5", "--c1", "1", "--c2", "0"])
        .env("CICY_MODE", "lax")
        .output()
        .unwrap();
    assert_eq!(lax.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_cicy-gg"))
        .args(["chi", "--threefold", "5", "--c1", "1", "--c2", "0"])
        .env("CICY_MODE", "loose")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_all_and_module() {
    let o = run(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let checks = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count();
    assert!(checks >= 40, "{checks}");
    assert!(!out.lines().any(|l| l.starts_with("FAIL")));

    let out = stdout(&run(&["verify", "--module", "bounds"]));
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.contains("[bounds]") && l.contains("pi")), "{lines:?}");
}

#[test]
fn corrupted_registry_names_the_entry() {
    let dump = value(&["registry", "--dump"]);
    let mut entries: serde_json::Value = serde_json::from_str(&dump).unwrap();
    let victim = entries[3]["name"].as_str().unwrap().to_string();
    let c2 = entries[3]["c2"].as_i64().unwrap();
    entries[3]["c2"] = serde_json::json!(c2 + 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string_pretty(&entries).unwrap()).unwrap();

    let o = run(&["verify", "--all", "--registry", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let fail: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with("FAIL")).map(String::from).collect();
    assert_eq!(fail.len(), 1, "{fail:?}");
    assert!(fail[0].contains(&victim));
    assert!(String::from_utf8_lossy(&o.stderr).contains(&victim));

    let o = run(&["registry", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(&victim));
    assert_eq!(run(&["registry"]).status.code(), Some(0));
}
