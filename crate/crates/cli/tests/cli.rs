//! CLI surface tests: exit codes, payload conventions, determinism, and the
//! document round trip.

use chern_bounds_cli::{execute, CommandResult};
use serde_json::Value;

fn run(args: &[&str]) -> CommandResult {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    execute(&argv)
}

#[test]
fn chi_plane_example() {
    let result = run(&["chi", "--rank", "2", "--ambient", "2", "--classes", "0,1"]);
    assert_eq!(result.exit_code, 0);
    assert_eq!(result.payload, "1\n");
}

#[test]
fn chi_symbolic_structure_sheaf() {
    let result = run(&["chi", "--rank", "1", "--ambient", "3", "--classes", "0,0,0", "--symbolic"]);
    assert_eq!(result.exit_code, 0);
    assert_eq!(result.payload, "1/6*t^3 + t^2 + 11/6*t + 1\n");
}

#[test]
fn delta_bounds_example() {
    let result = run(&["bounds", "delta", "--n", "3", "--c1", "0", "--json"]);
    assert_eq!(result.exit_code, 0);
    let payload: Value = serde_json::from_str(&result.payload).unwrap();
    assert_eq!(payload["domenica"], Value::from(-6));
    assert_eq!(payload["mattina"], Value::from(-6));
    // key order is stable
    assert!(result.payload.find("domenica").unwrap() < result.payload.find("mattina").unwrap());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["nonsense"],
        vec!["chern", "split", "--b"],
        vec!["chern", "split", "--b", "0,1", "--ambient", "2"], // not sorted
        vec!["bounds", "delta", "--n", "3"],
        vec!["catalog", "verify", "--name", "no_such_descriptor"],
        vec![],
    ] {
        let result = run(&args);
        assert_eq!(result.exit_code, 2, "args: {args:?}");
        assert!(result.diagnostics.contains("usage"), "args: {args:?}");
    }
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["catalog", "verify", "--name", "null_correlation", "--json"]);
    let b = run(&["catalog", "verify", "--name", "null_correlation", "--json"]);
    assert_eq!(a, b);
    assert_eq!(a.exit_code, 0);
}

#[test]
fn dump_then_check_round_trips_byte_for_byte() {
    let dumped = run(&["catalog", "dump", "--name", "wide_window_b2"]);
    assert_eq!(dumped.exit_code, 0);

    let dir = std::env::temp_dir().join("chern_bounds_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wide_window_b2.json");
    std::fs::write(&path, &dumped.payload).unwrap();

    let checked = run(&["catalog", "check", "--file", path.to_str().unwrap()]);
    assert_eq!(checked.exit_code, 0, "diagnostics: {}", checked.diagnostics);
    assert_eq!(checked.payload, dumped.payload);

    // a reformatted (but equivalent) document is flagged as non-canonical
    let reformatted = dumped.payload.replace(":", " :");
    let path2 = dir.join("reformatted.json");
    std::fs::write(&path2, &reformatted).unwrap();
    let checked = run(&["catalog", "check", "--file", path2.to_str().unwrap()]);
    assert_eq!(checked.exit_code, 1);
}

#[test]
fn violated_descriptor_exits_1() {
    // impossible data: reflexive, non-split rank 2 with c2 = 0 and splitting
    // [0,0] would contradict the strict c2 floor; its twist window has size
    // 1 against an allowance of 0
    let document = r#"{
  "descriptors": [
    {
      "name": "impossible",
      "ambient_dim": 3,
      "rank": 2,
      "chern": [0, 0, 0],
      "splitting": [0, 0],
      "gst": null,
      "h0_series": null,
      "flags": {
        "reflexive": true,
        "torsion_free": true,
        "split": false,
        "semistable": false,
        "stable": false
      },
      "provenance": "hand-made inconsistent data"
    }
  ]
}
"#;
    let dir = std::env::temp_dir().join("chern_bounds_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("impossible.json");
    std::fs::write(&path, document).unwrap();

    let result = run(&["catalog", "verify", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(result.exit_code, 1);
    let payload: Value = serde_json::from_str(&result.payload).unwrap();
    assert_eq!(payload["pass"], Value::Bool(false));
}

#[test]
fn sweep_agrees_with_brute_force() {
    let result = run(&["sweep", "nogap", "--n", "4", "--c1-range", "-8,8", "--json"]);
    assert_eq!(result.exit_code, 0);
    let payload: Value = serde_json::from_str(&result.payload).unwrap();
    let entries = payload["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 17);
    assert!(entries.iter().all(|e| e["agree"] == Value::Bool(true)));
}

#[test]
fn pqc_payload_shape() {
    let result = run(&[
        "bounds", "pqc", "--rank", "2", "--ambient", "3", "--c1", "0", "--c2", "1", "--b", "0,0",
        "--json",
    ]);
    assert_eq!(result.exit_code, 0);
    let payload: Value = serde_json::from_str(&result.payload).unwrap();
    assert_eq!(payload["per_index"], serde_json::json!([2, 5, 5, 0]));
    assert_eq!(payload["vanishing_threshold"], Value::from(9));
    assert_eq!(payload["chern_bounds"], serde_json::json!([32]));
    assert_eq!(payload["regularity"], Value::from(9));
    assert_eq!(payload["global_generation"], Value::from(12));
}

#[test]
fn big_integers_survive_json() {
    // twist by a large l drives classes past 2^53
    let result = run(&[
        "chern", "twist", "--rank", "3", "--ambient", "3", "--classes", "0,0,0", "--l",
        "3000000", "--json",
    ]);
    assert_eq!(result.exit_code, 0);
    let payload: Value = serde_json::from_str(&result.payload).unwrap();
    let classes = payload["classes"].as_array().unwrap();
    // c_3 = l^3 = 2.7e19 exceeds the plain range
    assert_eq!(classes[2]["format"], Value::from("bigint"));
    assert_eq!(classes[2]["value"], Value::from("27000000000000000000"));
}
