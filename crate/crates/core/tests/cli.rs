use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_zeta-recur");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("ZETA_RECUR_EVAL_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

#[test]
fn even_table_examples() {
    let o = run(&["even", "--n", "2", "--digits", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[0], ["n", "coeff", "recursion_equals_euler", "decimal"]);
    assert_eq!(rows[1], ["1", "1/6", "true", "1.6449340668"]);
    assert_eq!(rows[2], ["2", "1/90", "true", "1.0823232337"]);

    let o = run(&["even", "--n", "1", "--digits", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,coeff,recursion_equals_euler,decimal\n1,1/6,true,1.6\n");

    let o = run(&["even", "--n", "50", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 51);
}

#[test]
fn bernoulli_examples() {
    let o = run(&["bernoulli", "--n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,bernoulli\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
    assert_eq!(stdout(&run(&["bernoulli", "--n", "0", "--format", "csv"])), "m,bernoulli\n0,1\n");
    let text = stdout(&run(&["bernoulli", "--n", "12", "--format", "csv"]));
    assert_eq!(text.lines().last(), Some("12,-691/2730"));
}

#[test]
fn verify_examples() {
    let v = json(&["verify", "eq2", "--s", "2", "--format", "json"]);
    assert_eq!(v["identity_id"], "EQ2");
    assert_eq!(v["passed"], true);
    assert!((v["lhs"].as_f64().unwrap() - 1.644934067).abs() < 1e-9);

    let o = run(&["verify", "closure", "--s", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["identity_id"], "EQ8_CLOSURE");
    assert!(v["residual"].as_f64().unwrap() < 1e-9);

    let o = run(&["verify", "odd", "--s", "3", "--tol", "1e-8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["lhs"].as_f64().unwrap() - 1.20205690).abs() < 1e-8);

    for (id, s) in [("eq5", None), ("eq7", Some("5")), ("eq9", Some("4")), ("s2", Some("2")), ("log2", Some("2")), ("eq10", Some("6"))] {
        let mut args = vec!["verify", id];
        if let Some(s) = s {
            args.extend(["--s", s]);
        }
        assert_eq!(run(&args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    // 1: a verification that cannot meet its tolerance.
    assert_eq!(run(&["verify", "eq2", "--s", "10", "--tol", "1e-14"]).status.code(), Some(1));
    let o = Command::new(BIN)
        .args(["verify", "eq2", "--s", "4"])
        .env("ZETA_RECUR_EVAL_BUDGET", "15")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("did not converge"));

    // 2: usage errors, each with a message on stderr.
    let usage: [&[&str]; 12] = [
        &["even", "--n", "0"],
        &["even", "--n", "1001"],
        &["even", "--digits", "0"],
        &["even", "--jobs", "0"],
        &["bernoulli", "--n", "2001"],
        &["verify", "odd", "--s", "4"],
        &["verify", "nope"],
        &["verify", "eq2", "--s", "1"],
        &["verify", "eq2", "--tol", "-1"],
        &["contour", "--radius", "0"],
        &["even", "--format", "xml"],
        &["frobnicate"],
    ];
    for args in usage {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = Command::new(BIN).args(["even", "--n", "2"]).env("ZETA_RECUR_EVAL_BUDGET", "ten").output().unwrap();
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert!(stdout(&run(&["--help"])).contains("--tol 1e-9"));
}

#[test]
fn output_is_byte_deterministic() {
    let cases: [&[&str]; 5] = [
        &["even", "--n", "30", "--digits", "40"],
        &["bernoulli", "--n", "40", "--format", "json"],
        &["verify", "eq9", "--s", "5", "--format", "csv"],
        &["verify", "eq5", "--format", "json"],
        &["contour", "--s", "4", "--radius", "20", "--format", "json"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let serial = run(&["even", "--n", "60", "--digits", "25", "--format", "json"]).stdout;
    for jobs in ["2", "3", "8"] {
        let parallel = run(&["even", "--n", "60", "--digits", "25", "--format", "json", "--jobs", jobs]).stdout;
        assert_eq!(serial, parallel, "jobs = {jobs}");
    }
}

#[test]
fn json_round_trips() {
    let cases: [&[&str]; 5] = [
        &["even", "--n", "12", "--digits", "15", "--format", "json"],
        &["bernoulli", "--n", "12", "--format", "json"],
        &["verify", "eq9", "--s", "3", "--format", "json"],
        &["verify", "eq7", "--s", "7", "--format", "json"],
        &["contour", "--s", "3", "--format", "json"],
    ];
    for args in cases {
        let raw = stdout(&run(args));
        let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
        let again: serde_json::Value = serde_json::from_str(&serde_json::to_string_pretty(&v).unwrap()).unwrap();
        assert_eq!(v, again, "{args:?}");
    }
}

#[test]
fn contour_report() {
    let v = json(&["contour", "--s", "2", "--radius", "30", "--format", "json"]);
    assert_eq!(v["converged"], true);
    assert_eq!(v["side_values"].as_array().unwrap().len(), 4);
    let o = run(&["contour", "--s", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() >= 2);
}
