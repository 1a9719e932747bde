use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).arg("--quiet").output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = bmw(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), json)
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("bmw-cli-{}-{name}", std::process::id()))
}

fn names(r: &Value) -> Vec<String> {
    r["assertions"].as_array().unwrap().iter().map(|a| a["name"].as_str().unwrap().to_string()).collect()
}

#[test]
fn relations_n4_reproduce_the_reference_matrices() {
    let (code, r) = report(&["relations", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "relations");
    assert_eq!(r["mode"], "bmw");
    for label in ["e1", "e2", "e3", "t1", "t2", "t3", "sigma"] {
        assert!(names(&r).contains(&format!("n=4 matrix {label}")), "{label}");
    }
    assert!(r["assertions"].as_array().unwrap().iter().all(|a| a["status"] == "pass"));
    assert_eq!(r["artifacts"]["matrices"].as_array().unwrap().len(), 7);
}

#[test]
fn basis_n2_is_the_constant_one() {
    let (code, r) = report(&["basis", "--n", "2"]);
    assert_eq!(code, 0);
    let entries = r["artifacts"]["basis"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["matching"], serde_json::json!([[1, 2]]));
    assert_eq!(entries[0]["poly"], "1");
}

#[test]
fn duality_n6_passes() {
    let (code, r) = report(&["duality", "--n", "6", "--seed", "7"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["n"], 6);
}

#[test]
fn reports_are_byte_identical_for_the_same_config() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    for path in [&a, &b] {
        let out = bmw(&["trace", "t1 e2 t3^-1", "--n", "4", "--seed", "5", "--output", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let r: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(r["artifacts"]["word"], "t1 e2 t3^-1");
    for path in [a, b] {
        let _ = std::fs::remove_file(path);
    }
}

#[test]
fn brauer_subcommands_switch_mode() {
    let (code, r) = report(&["brauer", "relations", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["mode"], "brauer");
    let (code, r) = report(&["brauer", "affine", "--n", "4", "--seed", "2"]);
    assert_eq!(code, 0);
    assert!(r["assertions"][0]["detail"].as_str().unwrap().starts_with("50 random inputs"));
    let (code, _) = report(&["highest-monomial", "--mode", "brauer", "--n", "4"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_configurations_exit_nonzero_with_a_message() {
    for args in [
        &["relations", "--n", "5"][..],
        &["relations", "--n", "10"],
        &["relations", "--n", "14", "--max-n", "14"],
        &["basis", "--route", "sideways"],
        &["cyclic", "--mode", "brauer"],
        &["tl-collapse", "--c-prime", "q +"],
        &["trace", "t9"],
        &["no-such-command"],
    ] {
        let out = bmw(args);
        assert!(!out.status.success(), "{args:?}");
        assert_ne!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn c_prime_override_is_reported() {
    let (code, r) = report(&["tl-collapse", "--n", "4", "--c-prime", "q^2 + 1"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["artifacts"]["c_prime"], "q^2 + 1");
}
