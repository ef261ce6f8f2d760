use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preproj")).args(args).env_remove("PREPROJ_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_succeeds() {
    let o = run(&["info", "--quiver", "e6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12"));
}

#[test]
fn unknown_quiver_is_a_usage_error() {
    for q in ["a5", "d3", "e9", ""] {
        let o = run(&["info", "--quiver", q]);
        assert_eq!(o.status.code(), Some(2), "{q}");
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn products_json_has_theta0_f1() {
    let o = run(&["products", "--quiver", "e6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let entry = v["table"].as_array().unwrap().iter().find(|e| e["left"] == "theta0" && e["right"] == "f1").unwrap();
    let terms: Vec<(&str, &str)> =
        entry["result"].as_array().unwrap().iter().map(|t| (t["name"].as_str().unwrap(), t["coeff"].as_str().unwrap())).collect();
    assert_eq!(terms, [("h1", "-8/1"), ("h2", "-4/1")]);
    assert_eq!(v["m_alpha"]["data"], serde_json::json!([["-8/1", "-4/1"], ["-4/1", "-8/1"]]));
}

#[test]
fn json_is_one_line_per_quiver() {
    let o = run(&["hilbert", "-q", "d4,d5", "-f", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    for (line, q) in lines.iter().zip(["d4", "d5"]) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["quiver"], q);
        assert_eq!(v["closed_form_equal"], true);
    }
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--quiver", "d5,d6"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(!stdout(&ok).contains("FAIL"));
    // The printed E7 Hilbert column has misprints, so verify reports a failure.
    let bad = run(&["verify", "--quiver", "e7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL"));
}

#[test]
fn partial_verify_is_flagged() {
    let o = run(&["verify", "--quiver", "d6", "--max-degree", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["partial"], true);
    let hh = run(&["hh", "--quiver", "d6", "--max-degree", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&hh).trim()).unwrap();
    assert_eq!(v["max_degree"], 4);
}

#[test]
fn latex_output() {
    let o = run(&["hilbert", "--quiver", "d4", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\\begin"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = std::env::temp_dir().join(format!("preproj-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let with_env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_preproj")).args(args).env("PREPROJ_CACHE_DIR", &dir).output().unwrap()
    };
    let first = with_env(&["center", "-q", "d4", "-v"]);
    assert!(String::from_utf8_lossy(&first.stderr).contains("built"));
    let second = with_env(&["center", "-q", "d4", "-v"]);
    assert!(String::from_utf8_lossy(&second.stderr).contains("loaded from cache"));
    assert_eq!(first.stdout, second.stdout);
    let bypass = with_env(&["center", "-q", "d4", "-v", "--no-cache"]);
    assert!(String::from_utf8_lossy(&bypass.stderr).contains("built"));
    std::fs::remove_dir_all(&dir).unwrap();
}
