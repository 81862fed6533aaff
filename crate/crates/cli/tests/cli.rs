use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn liechain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liechain"))
        .args(args)
        .env_remove("LIECHAIN_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn len_and_depth_examples() {
    let o = liechain(&["len", "E8"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "20\n"));
    let o = liechain(&["depth", "SU(7)"]);
    assert_eq!(stdout(&o), "5\n");
    let o = liechain(&["depth", "SU(7) x Sp(8)"]);
    assert_eq!(stdout(&o), "[4, 8]\n");
    let o = liechain(&["dims", "E8"]);
    assert_eq!(stdout(&o), "dim 248 rank 8\n");
}

#[test]
fn json_output_parses() {
    let o = liechain(&["--json", "depth", "SU(2) x SU(3)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["depth"]["exact"], 4);
    assert_eq!(v["group"], "SU(2) x SU(3)");

    let o = liechain(&["--json", "cd", "SU(4) x Sp(8)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["cd"]["lower"].as_u64().unwrap() < v["cd"]["upper"].as_u64().unwrap());

    let o = liechain(&["--json", "maximals", "G2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complete"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn chain_json_matches_length() {
    let o = liechain(&["--json", "chain", "--max", "F4"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["length"], 11);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 12);
    assert_eq!(v["nodes"][11], "1");

    let o = liechain(&["chain", "--min", "SO(7)"]);
    assert_eq!(stdout(&o), "SO(7) > G2 > SU(2) > T > 1\nlength 4\n");
}

#[test]
fn verify_chain_files() {
    let mut good = tempfile::NamedTempFile::new().unwrap();
    writeln!(good, "# G2 descent\nG2\nSU(3)\nSU(2)\nT\n1").unwrap();
    let o = liechain(&["verify-chain", good.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("valid (length 4)\n"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "SU(3)\nT\n1").unwrap();
    let o = liechain(&["--json", "verify-chain", bad.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"]["verdict"], "invalid");
    assert_eq!(v["overall"]["step"], 0);
    assert_eq!(v["steps"][0], "no");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&liechain(&["len", "Sp(5)"])), 2);
    assert_eq!(code(&liechain(&["len", "SU(3) x"])), 2);
    assert_eq!(code(&liechain(&["chain", "G2"])), 2);
    assert_eq!(code(&liechain(&["check-theorems", "--suite", "nope"])), 2);
    assert_eq!(code(&liechain(&[])), 2);
}

#[test]
fn oracle_commands() {
    let o = liechain(&["oracle", "SU(4) x Sp(4)"]);
    assert_eq!(stdout(&o), "length 11 depth 5\n");
    let o = liechain(&["oracle", "E8"]);
    assert_eq!(code(&o), 1);
    let o = liechain(&["oracle", "--cross-validate", "SU(2)^5"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["oracle_depth"], 6);
    assert_eq!(v["pass"], true);
}

#[test]
fn passing_suites_exit_0() {
    for suite in ["general", "tables", "lendim", "ld"] {
        let o = liechain(&["check-theorems", "--suite", suite, "--max-dim", "30"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
    }
}

#[test]
fn max_degree_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_liechain"))
        .args(["--json", "check-theorems", "--suite", "complex"])
        .env("LIECHAIN_MAX_DEGREE", "5")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    // SU(2..5), Sp(4), plus five exceptional types
    assert_eq!(v["checked"], 10);
}
