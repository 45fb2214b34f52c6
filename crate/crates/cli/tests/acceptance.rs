//! One line per acceptance criterion, then a single assertion over all of them.

use std::process::Command;
use std::time::{Duration, Instant};

use qpbasis::fixtures;
use qpbasis_cli::verify::{self, Criterion, Settings, EXAMPLE_VALUE};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_qpbasis");

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// The paper value through the binary, with its wall-clock time.
fn criterion_1() -> Criterion {
    let start = Instant::now();
    let (code, stdout) = run_cli(&["generic-basis", "labardini", "1,0,-1", "--seed", "0"]);
    let elapsed = start.elapsed();
    let v: Value = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    let exact = v["fraction"] == EXAMPLE_VALUE && v["value"] == "x1*x3^-1 + x1^-1*x2^2*x3^-1 + x1^-1*x3";
    let fast = elapsed < Duration::from_secs(60);
    Criterion {
        id: 1,
        name: "worked example value",
        pass: code == 0 && exact && fast,
        detail: serde_json::json!({ "output": v, "seconds": elapsed.as_secs_f64() }),
    }
}

fn criterion_13() -> Criterion {
    let cases: [&[&str]; 3] = [
        &["generic-basis", "labardini", "1,0,-1", "--seed", "7"],
        &["generic-basis", "a3", "-1,1,-1", "--seed", "7", "--pretty"],
        &["verify", "independence", "--seed", "7"],
    ];
    let mut same = true;
    for args in cases {
        let a = run_cli(args);
        let b = run_cli(args);
        same &= a.0 == 0 && a == b && !a.1.is_empty();
    }
    Criterion { id: 13, name: "byte-identical repeated runs", pass: same, detail: Value::Null }
}

#[test]
fn acceptance() {
    let s = Settings::default();
    let all: Vec<_> = fixtures::NAMES.iter().map(|n| fixtures::by_name(n).unwrap()).collect();
    let core: Vec<_> = ["a2", "a3", "labardini"].iter().map(|n| fixtures::by_name(n).unwrap()).collect();
    let criteria = vec![
        criterion_1(),
        verify::submodule_census(&s),
        verify::adjacent_seeds(&s),
        verify::index_sum(&all),
        verify::involution(&core),
        verify::surjectivity(&all, &s),
        verify::e_invariant(&core, &s),
        verify::sign_coherence(&core, &s),
        verify::monomial_rule(&all, &s),
        verify::mutation_commutes(&s),
        verify::independence(&s),
        verify::jacobian_dims(),
        criterion_13(),
    ];
    for c in &criteria {
        println!("criterion {:>2}: {} - {}", c.id, if c.pass { "PASS" } else { "FAIL" }, c.name);
    }
    let failed: Vec<&Criterion> = criteria.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{}", serde_json::to_string_pretty(&failed).unwrap());
}
