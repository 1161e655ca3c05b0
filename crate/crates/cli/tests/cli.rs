use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathturan"))
        .args(args)
        .env_remove("PATHTURAN_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn value_table_and_json() {
    let o = run(&["value", "--paths", "5,3", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("value    21"), "{text}");
    assert!(text.contains("achieving Bracket3(8,3)"), "{text}");

    let o = run(&["value", "--paths", "3,5", "--n", "8", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["value"], 21);
    assert_eq!(v["regime"], "exact-theorem");
    assert_eq!(v["forest"], serde_json::json!([5, 3]));
    let achieving: Vec<_> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["achieving"] == true)
        .collect();
    assert_eq!(achieving.len(), 1);
    assert_eq!(achieving[0]["term"]["kind"], "bracket3");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["value", "--paths", "3", "--n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["value", "--paths", "3,x", "--n", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["value", "--paths", "2", "--n", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["value", "--bogus"]).status.code(), Some(2));
    let o = run(&["contains", "--graph", "/does/not/exist.g6", "--paths", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read graph file"));
    let o = run(&["value", "--paths", "5,3", "--n", "8", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_graph6_lines() {
    let o = run(&[
        "construct",
        "--paths",
        "5,5",
        "--n",
        "10",
        "--format",
        "graph6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // K_9 ∪ K_1 is the only family at n = 10.
    assert_eq!(stdout(&o), "I~~~~~~??\n");

    let o = run(&[
        "construct",
        "--paths",
        "4",
        "--n",
        "7",
        "--format",
        "graph6",
    ]);
    assert_eq!(stdout(&o).lines().count(), 3);

    let o = run(&["construct", "--paths", "4", "--n", "6", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph "));
}

#[test]
fn contains_reads_graph6_file_and_stdin() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // K_9 ∪ K_1, then P_10.
    writeln!(file, "I~~~~~~??").unwrap();
    writeln!(file, "IhCGGC@?G").unwrap();
    let path = file.path().to_str().unwrap();
    let o = run(&["contains", "--graph", path, "--paths", "5,5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("graph 0: not contained"), "{text}");
    assert!(text.contains("graph 1: contained"), "{text}");

    let o = run(&["contains", "--graph", path, "--paths", "5,5", "--naive"]);
    assert!(stdout(&o).contains("graph 0: not contained"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_pathturan"))
        .args([
            "contains", "--graph", "-", "--paths", "3", "--format", "json",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n").unwrap();
    let o = child.wait_with_output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["contained"], true);
    assert_eq!(v[0]["certificate"][0].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_modes_and_budget() {
    let o = run(&["oracle", "--paths", "5,3", "--n", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["max_edges"], 21);
    assert_eq!(v["mode"], "enumerate");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);

    let o = run(&[
        "oracle", "--paths", "5,5", "--n", "10", "--mode", "bnb", "--format", "json",
    ]);
    assert_eq!(json(&o)["max_edges"], 36);

    let o = run(&["oracle", "--paths", "4", "--n", "7", "--format", "graph6"]);
    assert_eq!(stdout(&o).lines().count(), 3);

    let o = run(&[
        "oracle", "--paths", "4", "--n", "12", "--mode", "bnb", "--budget", "0s",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_pathturan"))
        .args(["oracle", "--paths", "4", "--n", "12", "--mode", "bnb"])
        .env("PATHTURAN_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        run(&["oracle", "--paths", "4", "--n", "10"]).status.code(),
        Some(3)
    );
    let o = run(&[
        "oracle",
        "--paths",
        "4",
        "--n",
        "8",
        "--mode",
        "bnb",
        "--connected",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "corollaries", "--n-max", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "verify",
        "--suite",
        "consistency",
        "--n-max",
        "80",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)[0]["pass"], true);
    let o = run(&["verify", "--suite", "observations", "--n-max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    // The remark fails at its threshold for (k, l) = (2, 6): exit 1.
    let o = run(&["verify", "--suite", "bk-remark"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("2\t6\t15\t60\t61"));
}

#[test]
fn probe_and_crosscheck() {
    let o = run(&["probe", "--paths", "5,3", "--n-from", "8", "--n-to", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle agrees (22)"));
    let o = run(&[
        "probe",
        "--paths",
        "5,5,3",
        "--n-from",
        "13",
        "--n-to",
        "20",
        "--oracle-budget",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["probe", "--paths", "5,3", "--n-from", "9", "--n-to", "8"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&[
        "crosscheck",
        "--samples",
        "100",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["checks"], 600);
}

#[test]
fn output_file_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    let o = run(&[
        "--threads",
        "1",
        "value",
        "--paths",
        "6,4",
        "--n",
        "20",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 20);
}
