use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

const CRITERIA: [(&str, &str); 11] = [
    ("c01-grassmannian-counts", "Gaussian binomials count subspaces"),
    ("c02-phi-square-identity", "cyclotomic square identity"),
    ("c03-binomial-identities", "binomial identities at roots of unity"),
    ("c04-qschur-frobenius", "q-Schur restriction congruences"),
    ("c05-hall-polynomials", "structure constants interpolate"),
    ("c06-concatenation-law", "concatenation law"),
    ("c07-serre-relations", "Serre relations"),
    ("c08-residue-congruences", "residue congruences"),
    ("c09-q-homomorphism", "Q is a homomorphism"),
    ("c10-free-algebra-dimensions", "free algebra dimensions"),
    ("c11-norm-growth", "norm growth"),
];

fn run_desk(out: &PathBuf) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_hallfrob"))
        .args(["verify", "--preset", "desk", "--out"])
        .arg(out)
        .status()
        .expect("binary runs")
        .code()
        .unwrap_or(-1)
}

#[test]
fn acceptance() {
    let dir = std::env::temp_dir().join(format!("hallfrob-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("first.json"), dir.join("second.json"));
    let code = run_desk(&a);
    run_desk(&b);
    let first = std::fs::read(&a).unwrap();
    let second = std::fs::read(&b).unwrap();
    let report: Value = serde_json::from_slice(&first).unwrap();
    let checks = report["checks"].as_array().unwrap();

    let mut failed = Vec::new();
    for (k, (name, label)) in CRITERIA.iter().enumerate() {
        let check = checks.iter().find(|c| c["name"] == *name).unwrap_or_else(|| panic!("missing {name}"));
        let ok = check["status"] == "pass";
        println!("criterion {:>2} {}: {label}", k + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            println!("    witness: {}", check["witness"]);
            failed.push(k + 1);
        }
    }
    let same = first == second;
    println!("criterion 12 {}: byte-identical reports", if same { "PASS" } else { "FAIL" });
    if !same {
        failed.push(12);
    }
    assert_eq!(code == 0, failed.is_empty(), "exit code {code} disagrees with the report");
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
