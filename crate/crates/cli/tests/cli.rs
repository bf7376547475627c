use std::process::{Command, Output};

use fibideal::number_theory::{divisor_profile, lucas};
use fibideal::rings::alpha_pow;
use fibideal::{BigInt, LaurentPoly, QuadInt};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibideal"))
        .args(args)
        .env("FIBIDEAL_LOG", "quiet")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn big(v: &Value) -> BigInt {
    v.as_str().expect("decimal string").parse().unwrap()
}

#[test]
fn lambda_all_methods_agree() {
    let out = run(&["lambda", "--max", "4", "--method", "all", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,product,divisor,eval\n1,1,1,1\n2,4,4,4\n3,10,10,10\n4,29,29,29\n");
}

#[test]
fn lambda_csv_two_columns() {
    let out = run(&["lambda", "--max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,lambda\n1,1\n2,4\n3,10\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["lambda", "--max", "0"][..],
        &["lambda", "--max", "x"],
        &["lambda", "--max", "3", "--method", "magic"],
        &["cn", "--n", "0"],
        &["cn", "--n", "2", "--eval", "two"],
        &["verify", "--max", "5", "--suites", "theorem,nope"],
        &["verify"],
        &["frobnicate"],
        &[],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stdout.is_empty(), "args {args:?}");
    }
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("{\"a\": .., \"b\": ..}"));
}

#[test]
fn cn_coefficients_and_evaluations() {
    let rows = json_lines(&run(&["cn", "--n", "1"]));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["cn_coeffs"], serde_json::json!(["1", "-2", "1"]));
    assert!(rows[0].get("eval_alpha").is_none());

    let rows = json_lines(&run(&["cn", "--n", "2", "--eval", "minus_one"]));
    assert_eq!(rows[0]["eval_minus_one"], "4");

    let rows = json_lines(&run(&["cn", "--n", "2", "--eval", "alpha,i"]));
    assert_eq!(rows[0]["eval_alpha"], serde_json::json!({"a": "8", "b": "12"}));
    assert_eq!(rows[0]["eval_i"], serde_json::json!({"re": "2", "im": "0"}));
}

#[test]
fn cn_csv() {
    let out = run(&["cn", "--n", "2", "--eval", "alpha", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,lambda,cn_coeffs,eval_alpha_a,eval_alpha_b\n2,4,1;-1;0;-1;1,8,12\n");
}

#[test]
fn verify_summary() {
    let out = run(&["verify", "--max", "100", "--suites", "theorem,sigma"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "theorem: 100/100 PASS\nsigma: 100/100 PASS\n");

    let out = run(&["verify", "--max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "theorem: 1/1 PASS\ngf: 1/1 PASS\nlattice: 1/1 PASS\nsigma: 1/1 PASS\nshape: 1/1 PASS\n"
    );
}

#[test]
fn verify_gf_cap() {
    let out = run(&["verify", "--max", "40", "--suites", "gf", "--gf-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "gf: 12/12 PASS\n");
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [
        &["lambda", "--max", "80", "--method", "all"][..],
        &["verify", "--max", "60"],
    ] {
        let mut a = args.to_vec();
        a.extend(["--jobs", "1"]);
        let mut b = args.to_vec();
        b.extend(["--jobs", "3"]);
        let (x, y) = (run(&a), run(&b));
        assert_eq!(x.status.code(), Some(0));
        assert_eq!(x.stdout, y.stdout, "{args:?}");
        assert_eq!(x.stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn json_round_trip_reverifies_divisor_formula() {
    let rows = json_lines(&run(&["lambda", "--max", "60"]));
    assert_eq!(rows.len(), 60);
    for row in rows {
        let n = row["n"].as_u64().unwrap();
        let lambda = big(&row["lambda"]);
        let profile = divisor_profile(n);
        let from_divisors: BigInt = profile
            .support()
            .map(|(k, c)| if k == 0 { BigInt::from(c) } else { lucas(2 * k) * c })
            .sum();
        assert_eq!(lambda, from_divisors, "n = {n}");

        let coeffs: Vec<BigInt> = row["cn_coeffs"].as_array().unwrap().iter().map(big).collect();
        assert_eq!(coeffs.len() as u64, 2 * n + 1);
        let cn = LaurentPoly::from_dense(0, coeffs);
        let at_alpha = cn.eval(&QuadInt::alpha()).unwrap();
        assert_eq!(at_alpha, alpha_pow(n as i64).scale(&lambda), "n = {n}");
    }
}

#[test]
fn out_file_receives_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lambda.csv");
    let out = run(&["lambda", "--max", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,lambda\n1,1\n2,4\n3,10\n");

    let report = dir.path().join("report.json");
    let out = run(&["verify", "--max", "10", "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["suites"].as_array().unwrap().len(), 5);
    assert_eq!(parsed["suites"][0]["suite"], "theorem");

    let bad = dir.path().join("missing").join("x.csv");
    let out = run(&["lambda", "--max", "3", "--out", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_dump() {
    let rows = json_lines(&run(&["series", "--max", "4"]));
    let coeffs: Vec<BigInt> = rows.iter().map(|r| big(&r["coeff"])).collect();
    assert_eq!(coeffs, [1, 1, 4, 10, 29].map(BigInt::from));

    let rows = json_lines(&run(&["series", "--max", "2", "--kind", "kr"]));
    assert_eq!(rows[1]["coeff"], serde_json::json!({"min_exp": -1, "coeffs": ["1", "-2", "1"]}));

    let out = run(&["series", "--max", "3", "--kind", "kr", "--at", "one", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,coeff\n0,1\n1,0\n2,0\n3,0\n");
}

#[test]
fn log_level_controls_stderr_only() {
    let quiet = run(&["lambda", "--max", "5"]);
    assert!(quiet.stderr.is_empty());
    let loud = Command::new(env!("CARGO_BIN_EXE_fibideal"))
        .args(["lambda", "--max", "5"])
        .env("FIBIDEAL_LOG", "debug")
        .output()
        .unwrap();
    assert!(!loud.stderr.is_empty());
    assert_eq!(loud.stdout, quiet.stdout);
}
