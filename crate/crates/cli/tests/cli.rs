use std::process::{Command, Output};

use serde_json::Value;

fn coleuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coleuler")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = coleuler(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn poly_binomial_type_b() {
    let v = json(&["poly", "binomial", "-n", "4", "-r", "2"]);
    assert_eq!(strings(&v["coeffs"]), ["1", "80", "328", "208", "16"]);
}

#[test]
fn poly_binomial_minus_gamma() {
    let v = json(&["poly", "binomial-minus", "-n", "5", "-r", "2", "--gamma"]);
    assert_eq!(strings(&v["gamma"]["gammas"]), ["0", "31", "577", "361"]);
}

#[test]
fn poly_h_of_delta_gamma() {
    let out = coleuler(&["poly", "h", "--complex", "delta-gamma", "-n", "2", "-r", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,r,statistic,polynomial\n2,2,h,1;5;1\n");
}

#[test]
fn poly_gamma_lists() {
    let v = json(&["poly", "gamma", "-n", "3", "-r", "2"]);
    assert_eq!(strings(&v["minus"]), ["0", "7", "11"]);
}

#[test]
fn series_tphi_in_schur_basis() {
    let v = json(&["series", "tphi", "-N", "2", "--basis", "s"]);
    let t = v["terms"][2]["t"].as_array().unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t[0]["s"], serde_json::json!({"2": "1"}));
    assert_eq!(t[1]["s"], serde_json::json!({"2": "2", "1,1": "1"}));
    assert_eq!(t[2]["s"], serde_json::json!({"2": "1"}));
}

#[test]
fn series_psi_exstar() {
    let v = json(&["series", "psi", "-r", "2", "-N", "2", "--exstar"]);
    assert_eq!(strings(&v["exstar"][2]), ["0", "4", "1"]);
}

#[test]
fn series_phi_order_zero() {
    let v = json(&["series", "phi", "-N", "0"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["t"][0]["p"], serde_json::json!({"": "1"}));
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["enumerative", "geometric", "equivariant"] {
        let v = json(&["verify", suite, "--max-n", "3", "--max-r", "2", "-N", "3"]);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true), "{suite}");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "all", "--max-n", "3", "--max-r", "2", "-N", "3", "--format", "csv"];
    let first = coleuler(&args).stdout;
    let serial =
        Command::new(env!("CARGO_BIN_EXE_coleuler")).args(args).env("RAYON_NUM_THREADS", "1").output().unwrap().stdout;
    assert_eq!(first, serial);
    assert_eq!(first, coleuler(&args).stdout);
}

#[test]
fn complex_dump() {
    let v = json(&["complex", "gamma-nr", "-n", "3", "-r", "3"]);
    assert_eq!(v["complex"]["facets"].as_array().unwrap().len(), 54);
    let out = coleuler(&["complex", "barycentric", "-n", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
}

#[test]
fn usage_errors_exit_2() {
    let cases: [&[&str]; 5] = [
        &["poly", "nonsense", "-n", "2"],
        &["poly", "eulerian", "-n", "12", "-r", "4"],
        &["poly", "local-h", "--complex", "delta-gamma", "-n", "2"],
        &["series", "chi", "-N", "2"],
        &["series", "phi", "-N", "2", "--format", "csv"],
    ];
    for args in cases {
        assert_eq!(coleuler(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(coleuler(&["poly", "eulerian", "-n", "3", "-r", "2", "--budget", "10"]).status.code(), Some(2));
}
