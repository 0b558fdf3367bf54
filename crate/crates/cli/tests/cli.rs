use std::process::{Command, Output};

use qpos_core::{IntPoly, PositivityReport};

fn qpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpos")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    let o = qpos(&["compute", "C", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[\"1\"]\n1\n");

    let o = qpos(&["compute", "C", "1", "0"]);
    assert_eq!(stdout(&o), "[\"1\",\"1\",\"1\"]\n1 + q + q^2\n");

    let o = qpos(&["compute", "F", "--m", "1,1", "--n", "1,1", "--a", "1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let first = stdout(&o).lines().next().unwrap().to_string();
    let poly: IntPoly = serde_json::from_str(&first).unwrap();
    assert_eq!(poly, IntPoly::from_i64s(&[1, 2, 4, 3, 2, 1]));

    let o = qpos(&["compute", "gauss", "4", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["display"], "1 + q + 2q^2 + q^3 + q^4");
    assert_eq!(v["poly"], serde_json::json!(["1", "1", "2", "1", "1"]));
}

#[test]
fn compute_rejects_invalid_parameters() {
    for args in [
        &["compute", "C", "-1", "0"][..],
        &["compute", "C", "1"],
        &["compute", "B", "1", "2"],
        &["compute", "F", "--m", "1,1", "--n", "0,1", "--a", "0", "--b", "1"],
        &["compute", "F", "--m", "1,1", "--n", "1,1", "--a", "3", "--b", "1"],
        &["compute", "F", "--m", "1", "--n", "1,1", "--a", "0", "--b", "1"],
        &["compute", "F", "--m", "1,1", "--n", "1,1", "--a", "0"],
        &["compute", "Z", "1", "1"],
    ] {
        assert_eq!(qpos(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsafe_params_are_flagged() {
    let o = qpos(&["compute", "F", "--m", "1,1", "--n", "1,1", "--a", "5", "--b", "2", "--unsafe-params"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("out-of-theorem"));
}

#[test]
fn verify_examples() {
    let cases: [&[&str]; 6] = [
        &["verify", "double-expansion", "--N", "3", "--h", "4"],
        &["verify", "reciprocity", "--m", "1,1", "--n", "1,1", "--a", "1", "--b", "2"],
        &["verify", "deletion", "--m", "1,1,1", "--n", "1,1", "--a", "1", "--b", "2"],
        &["verify", "product-identity", "--m1", "2", "--m2", "1", "--k", "-1"],
        &["verify", "recombine", "--m", "2,1,1", "--n", "1,1", "--ell", "0", "--k", "1"],
        &["verify", "separation", "--m", "1,2,1", "--n", "1,2", "--k", "0"],
    ];
    for args in cases {
        let o = qpos(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("PASS"), "{args:?}");
    }
    let o = qpos(&["verify", "deletion", "--m", "1,1,1", "--n", "1,1", "--a", "1", "--b", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["identity"], "deletion");
}

#[test]
fn verify_invalid_input() {
    for args in [
        &["verify", "double-expansion", "--N", "3", "--h", "0"][..],
        &["verify", "double-expansion", "--N", "3"],
        &["verify", "deletion", "--m", "1,1", "--n", "1,1", "--a", "1", "--b", "2"],
        &["verify", "deletion", "--m", "1,1,1", "--n", "1,1", "--a", "1", "--b", "1"],
        &["verify", "recombine", "--m", "1,1", "--n", "1,1", "--ell", "0", "--k", "0"],
        &["verify", "no-such-identity"],
    ] {
        assert_eq!(qpos(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_jsonl_lines_round_trip() {
    let o = qpos(&["scan", "F", "--r", "2", "--s", "2", "--param-max", "2", "--checks", "positivity,reciprocity,degree-bound,q1-specialization"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let reports: Vec<PositivityReport> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // 2^2 m-vectors x 2^2 n-vectors x 3 values of a x 2 values of b
    assert_eq!(reports.len(), 96);
    for (line, r) in text.lines().zip(&reports) {
        assert_eq!(serde_json::to_string(r).unwrap(), line);
        assert_eq!(r.poly, r.instance.compute().unwrap());
        assert_eq!(r.checks_passed.len(), 4);
    }
    let params: Vec<String> = reports.iter().map(|r| r.instance.param_string()).collect();
    assert_eq!(params[0], "m=1,1;n=1,1;a=0;b=1");
    assert_eq!(params[1], "m=1,1;n=1,1;a=0;b=2");
    assert_eq!(params[95], "m=2,2;n=2,2;a=2;b=2");
    assert!(String::from_utf8_lossy(&o.stderr).contains("96 instances, 96 passed, 0 failed"));
}

#[test]
fn scan_csv_columns() {
    let o = qpos(&["scan", "C", "--max-sum", "2", "--checks", "positivity,oracle-equivalence,q1-specialization", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "family,params,degree,nonneg,value_at_one,checks_passed,checks_failed");
    assert_eq!(lines.next().unwrap(), "C,m=0;n=0,0,1,1,positivity;oracle-equivalence;q1-specialization,");
    assert_eq!(lines.count(), 5);
}

#[test]
fn scan_with_deletion_and_zero_m() {
    let o = qpos(&["scan", "F", "--r", "3", "--s", "2", "--param-max", "1", "--m-min", "0", "--checks", "positivity,deletion", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // 2^3 m-vectors x 1 n-vector x 3 values of a x 3 values of b
    assert!(text.ends_with("# 72 instances, 72 passed, 0 failed\n"), "{text}");
}

#[test]
fn scan_failures_exit_one() {
    let o = qpos(&["scan", "F", "--r", "2", "--s", "2", "--param-max", "1", "--a-max", "4", "--unsafe-params", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failed=positivity out-of-theorem"));
}

#[test]
fn scan_invalid_specs() {
    for args in [
        &["scan", "C"][..],
        &["scan", "C", "--max-sum", "3", "--checks", "reciprocity"],
        &["scan", "A", "--max-sum", "3", "--checks", "oracle-equivalence"],
        &["scan", "F", "--r", "2", "--param-max", "2"],
        &["scan", "F", "--r", "1", "--s", "2", "--param-max", "2"],
        &["scan", "F", "--r", "2", "--s", "2", "--param-max", "2", "--a-max", "5"],
        &["scan", "F", "--r", "2", "--s", "2", "--param-max", "2", "--checks", "bogus"],
        &["scan", "B", "--max-sum", "3"],
        &["scan", "Q", "--max-sum", "3"],
    ] {
        assert_eq!(qpos(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("qpos-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.jsonl");
    let o = qpos(&["scan", "B", "--param-max", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_output_is_deterministic() {
    let args = ["scan", "F", "--r", "3", "--s", "2", "--param-max", "2", "--checks", "positivity,deletion", "--format", "csv"];
    let a = qpos(&args);
    let b = qpos(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
