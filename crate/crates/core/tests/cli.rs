use std::process::Command;

fn cyclic_plane(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-plane")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn differential_table_matches_golden_file() {
    let (code, out, _) = cyclic_plane(&["table", "--kind", "differential", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("../golden/n3_differential_table"));
}

#[test]
fn decomposition_json_has_three_triples() {
    let (code, out, _) = cyclic_plane(&["table", "--kind", "decomposition", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert!(entries.iter().all(|b| b["indices"].as_array().unwrap().len() == 3));
}

#[test]
fn structure_f_at_two_has_sixteen_entries() {
    let (_, out, _) = cyclic_plane(&["table", "--kind", "structure-f", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 16);
}

#[test]
fn verify_reports_boundary_rows_at_four() {
    let (code, out, _) = cyclic_plane(&["verify", "--n", "4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let status = |id: &str| {
        v[0]["entries"].as_array().unwrap().iter().find(|e| e["id"] == id).unwrap()["status"].clone()
    };
    assert_eq!(status("hopf.coaction_left_cyclic"), "recorded-false");
    assert_eq!(status("calc.nilpotent"), "recorded-true");
}

#[test]
fn verify_odd_primes_assert_nilpotency() {
    let (code, out, _) = cyclic_plane(&["verify", "--n", "5,7", "--only", "calc.nilpotent", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["entries"][0]["status"], "pass");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("cyclic-plane-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.tex");
    let (code, out, _) =
        cyclic_plane(&["table", "--kind", "action", "--n", "3", "--format", "latex", "--out", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let tex = std::fs::read_to_string(&path).unwrap();
    assert!(tex.starts_with("\\documentclass") && tex.trim_end().ends_with("\\end{document}"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = cyclic_plane(&["eval", "--n", "3", "x^"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"));
    assert_eq!(cyclic_plane(&["verify", "--n", "1..3"]).0, 2);
    assert_eq!(cyclic_plane(&["table", "--kind", "action", "--n", "3", "--format", "pdf"]).0, 2);
}
