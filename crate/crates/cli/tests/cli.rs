use std::path::PathBuf;
use std::process::Command;

use qpbasis::laurent::LaurentPoly;
use qpbasis::quiver::IceQuiver;
use qpbasis::seed::Seed;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_qpbasis");

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn matrix(q: &IceQuiver) -> Vec<Vec<i64>> {
    let n = q.n();
    let mut b = vec![vec![0; n]; n];
    for a in q.arrows() {
        b[a.source - 1][a.target - 1] += 1;
        b[a.target - 1][a.source - 1] -= 1;
    }
    b
}

/// Matrix mutation written out entrywise.
fn matrix_mutate(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let k = k - 1;
    let n = b.len();
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}

#[test]
fn mutate_quivers() {
    let a2: IceQuiver = serde_json::from_value(json(&["mutate", &fixture("a2"), "1"])).unwrap();
    assert_eq!(matrix(&a2), vec![vec![0, -1], vec![1, 0]]);
    let back: IceQuiver = serde_json::from_value(json(&["mutate", &fixture("a2"), "1 1"])).unwrap();
    assert_eq!(matrix(&back), vec![vec![0, 1], vec![-1, 0]]);
    let lab: IceQuiver = serde_json::from_value(json(&["mutate", &fixture("labardini"), "1 2 3"])).unwrap();
    let start: IceQuiver = serde_json::from_value(json(&["mutate", &fixture("labardini")])).unwrap();
    let mut b = matrix(&start);
    for k in 1..=3 {
        b = matrix_mutate(&b, k);
    }
    assert_eq!(matrix(&lab), b);
}

#[test]
fn seeds() {
    let s: Seed = serde_json::from_value(json(&["seed", &fixture("a2"), "1"])).unwrap();
    assert_eq!(s.vars[0], LaurentPoly::parse("x1^-1*x2 + x1^-1", 2).unwrap());
    assert_eq!(s.history, vec![1]);
    let s: Seed = serde_json::from_value(json(&["seed", &fixture("a2"), "1 2 1 2 1"])).unwrap();
    let mut vars: Vec<String> = s.vars.iter().map(|v| v.to_string()).collect();
    vars.sort();
    assert_eq!(vars, vec!["x1", "x2"]);
    let s: Seed = serde_json::from_value(json(&["seed", &fixture("a2"), ""])).unwrap();
    assert!(s.history.is_empty());
    assert_eq!(s.vars[1], LaurentPoly::var(2, 1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["mutate", &fixture("a2"), "3"]).0, 2);
    assert_eq!(run(&["seed", &fixture("a2-frozen"), "2"]).0, 2);
    assert_eq!(run(&["mutate", &fixture("a2"), "one"]).0, 1);
    assert_eq!(run(&["mutate", "/nonexistent/quiver.json", "1"]).0, 1);
    assert_eq!(run(&["generic-basis", "a2", "1,x"]).0, 1);
    assert_eq!(run(&["generic-basis", "nope", "1,0"]).0, 2);
    assert_eq!(run(&["generic-basis", "a2", "1,0,0"]).0, 2);
    assert_eq!(run(&["verify", "nope"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "invariants", "--fixtures", ""]).0, 0);
}

#[test]
fn generic_basis_values() {
    let v = json(&["generic-basis", "labardini", "1,0,-1"]);
    assert_eq!(v["fraction"], "(x1^2 + x2^2 + x3^2)/(x1*x3)");
    assert_eq!(v["stats"]["min_kernel_dim"], serde_json::json!([1, 0, 1]));
    let v = json(&["generic-basis", "labardini", "2,0,0"]);
    assert_eq!(v["value"], "x1^2");
    // the same value from the potential instead of the relation list
    let v = json(&["generic-basis", &fixture("labardini"), "[1, 0, -1]", "--bound", "8"]);
    assert_eq!(v["fraction"], "(x1^2 + x2^2 + x3^2)/(x1*x3)");
}

#[test]
fn golden_a2_shift() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/a2_minus1_minus1.json");
    let expected = std::fs::read_to_string(golden).unwrap();
    let (code, out, _) = run(&["generic-basis", "a2", "-1,-1", "--pretty"]);
    assert_eq!(code, 0);
    assert_eq!(out, expected);
    let other: Value = serde_json::from_str(&run(&["generic-basis", "a2", "-1,-1", "--seed", "12345"]).1).unwrap();
    let golden: Value = serde_json::from_str(&expected).unwrap();
    assert_eq!(other["value"], golden["value"]);
}

#[test]
fn listed_primes() {
    let v = json(&["generic-basis", "a2", "-1,0", "--primes", "11,13,17"]);
    assert_eq!(v["primes_used"], serde_json::json!([11, 13]));
    assert_eq!(run(&["generic-basis", "a2", "-1,0", "--primes", "11"]).0, 1);
    assert_eq!(run(&["generic-basis", "a2", "-1,0", "--primes", "12"]).0, 2);
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "paper-example"]);
    assert_eq!(v["pass"], true);
    let census = &v["criteria"][1]["detail"]["subrepresentations"]["2"];
    assert_eq!(census.as_array().unwrap().len(), 3);
    let v = json(&["verify", "independence"]);
    assert_eq!(v["criteria"][0]["detail"]["rank"], 9);
}
