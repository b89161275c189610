//! Binary-level checks of the CLI contract: exit codes, format flags, file
//! output, and round-trip re-validation of emitted JSON against the library
//! invariants.

use std::fs;
use std::process::Command;

use serde_json::Value;

use adekit::rootsys::{DynkinDiagram, Family};

fn run(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let output = Command::new(env!("CARGO_BIN_EXE_adekit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        output.stdout,
        output.stderr,
    )
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["roots"]).0, 2);
    assert_eq!(run(&["roots", "Q5"]).0, 2);
    assert_eq!(run(&["lattice", "--m", "2", "--square", "-9", "--a", "7/5"]).0, 2);
    assert_eq!(run(&["glue", "/nonexistent/pipeline.json"]).0, 2);
    assert_eq!(run(&["index", "sphere", "--k", "-5", "--n", "3"]).0, 2);
}

#[test]
fn roots_json_revalidates_against_the_form() {
    let (code, stdout, _) = run(&["roots", "D5"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_slice(&stdout).unwrap();
    let diagram = DynkinDiagram::new(Family::D, 5).unwrap();
    let q = diagram.intersection_form();
    let roots = parsed["result"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 40);
    let mut decoded: Vec<Vec<i64>> = Vec::new();
    for root in roots {
        let coords: Vec<i64> = root
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().parse().unwrap())
            .collect();
        assert_eq!(q.evaluate(&coords), -2);
        decoded.push(coords);
    }
    let mut sorted = decoded.clone();
    sorted.sort();
    assert_eq!(decoded, sorted, "roots are emitted in sorted order");
}

#[test]
fn weights_json_revalidates_identities() {
    let (code, stdout, _) = run(&["weights", "E7"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_slice(&stdout).unwrap();
    for vw in parsed["result"]["vertex_weights"].as_array().unwrap() {
        let a: i64 = vw["a"].as_str().unwrap().parse().unwrap();
        let b: i64 = vw["b"].as_str().unwrap().parse().unwrap();
        assert_eq!(a + b, 2);
    }
    let edges = parsed["result"]["edge_weights"].as_array().unwrap();
    let mut directed = std::collections::BTreeMap::new();
    for ew in edges {
        let from: usize = ew["from"].as_str().unwrap().parse().unwrap();
        let to: usize = ew["to"].as_str().unwrap().parse().unwrap();
        let w: i64 = ew["w"].as_str().unwrap().parse().unwrap();
        directed.insert((from, to), w);
    }
    for (&(i, j), &w) in &directed {
        assert_eq!(w + directed[&(j, i)], 2);
    }
}

#[test]
fn tsv_format_has_header_and_rows() {
    let (code, stdout, _) = run(&["roots", "A2", "--format", "tsv"]);
    assert_eq!(code, 0);
    let text = String::from_utf8(stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t1\tt2");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "-1\t-1");

    let (code, stdout, _) = run(&["verify", "E6", "--format", "tsv"]);
    assert_eq!(code, 0);
    let text = String::from_utf8(stdout).unwrap();
    assert!(text.starts_with("key\tvalue\n"));
    assert!(text.contains("summary\t72 roots, all |f|=24"));
}

#[test]
fn out_flag_writes_identical_bytes() {
    let dir = std::env::temp_dir();
    let path = dir.join("adekit_contract_out.json");
    let (code, stdout, _) = run(&["f-table", "A3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let from_file = fs::read(&path).unwrap();
    fs::remove_file(&path).ok();
    let (_, from_stream, _) = run(&["f-table", "A3"]);
    assert_eq!(from_file, from_stream);
}

#[test]
fn glue_pipeline_through_the_binary() {
    let dir = std::env::temp_dir();
    let path = dir.join("adekit_contract_pipeline.json");
    let pipeline = serde_json::json!([
        { "kind": "arrow", "params": { "c": "1", "d": "0", "b_plus": 0, "parity": "even", "froyshov": "0" } },
        { "kind": "pairing", "params": { "dual_grading": "0", "dual_coefficient": "1" } },
        { "kind": "switch", "params": { "sw_fiber": "1", "b_plus_m1": 0, "b_plus_m2": 2 } },
        { "kind": "wall", "params": { "j": 1, "c": "3", "b_plus": 3 } },
        { "kind": "pullback", "params": { "degree": -1 } },
    ]);
    fs::write(&path, serde_json::to_string_pretty(&pipeline).unwrap()).unwrap();
    let (code, first, _) = run(&["glue", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["glue", path.to_str().unwrap()]);
    assert_eq!(first, second);
    fs::remove_file(&path).ok();
    let parsed: Value = serde_json::from_slice(&first).unwrap();
    // 1*1 from the pairing, +3 across one wall, negated by the pull-back.
    assert_eq!(parsed["result"]["result"], "-4");
    assert_eq!(parsed["result"]["stages"], "5");
    assert_eq!(parsed["result"]["audit"].as_array().unwrap().len(), 6);
}

#[test]
fn index_ade_matches_f_over_24() {
    let (code, stdout, _) = run(&["index", "ade", "D4", "--root", "1,2,1,1"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_slice(&stdout).unwrap();
    let f: i64 = parsed["result"]["f"].as_str().unwrap().parse().unwrap();
    assert_eq!(f, 24);
    assert_eq!(parsed["result"]["index"], "1");
}
