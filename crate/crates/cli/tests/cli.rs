use std::process::{Command, Output};

fn tcnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcnet"))
        .args(args)
        .env_remove("TCNET_FACTORIAL_CAP")
        .env_remove("TCNET_ORACLE_MAX_SIZE")
        .output()
        .expect("run tcnet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn count_examples() {
    let o = tcnet(&["count", "--formula", "star", "--leaves", "3", "--retics", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "leaves,retics,formula,value,reason\n3,1,star,21,\"\"\n");

    let o = tcnet(&["count", "--formula", "trees", "--leaves", "4"]);
    assert!(stdout(&o).ends_with("4,0,trees,15,\"\"\n"));

    let o = tcnet(&["count", "--formula", "one-component", "--leaves", "2", "--retics", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().nth(1), Some("2,2,one-component,,\"k must be < leaves\""));
}

#[test]
fn count_json_keeps_big_values_as_strings() {
    let o = tcnet(&["--format", "json", "count", "--formula", "trees", "--leaves", "40"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let s = v[0]["value"].as_str().unwrap();
    assert_eq!(s.len(), 58);
    assert!(s.starts_with("10098473647378692709"));
}

#[test]
fn oracle_examples() {
    let o = tcnet(&["oracle", "--leaves", "2", "--retics", "1"]);
    assert_eq!(stdout(&o), "leaves,retics,count,normal_count,star_share,residual\n2,1,2,0,2,0\n");
    let o = tcnet(&["oracle", "--leaves", "3", "--retics", "0"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("3,0,3,3,-,-"));
}

#[test]
fn oracle_emits_one_line_per_network() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nets.jsonl");
    let o = tcnet(&["oracle", "--leaves", "3", "--retics", "1", "--emit", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 21);
    for line in text.lines() {
        let n = tcnet_core::Network::from_json(line).unwrap();
        assert!(n.is_tree_child().unwrap());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "--leaves", "2..4", "--retics", "0,1", "--threads", "3"];
    assert_eq!(tcnet(&args).stdout, tcnet(&args).stdout);
}

#[test]
fn asymptotic_examples() {
    let o = tcnet(&["asymptotic", "--kind", "tc", "--k", "1", "--l", "500,1000,2000"]);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 3);
    let dev: Vec<f64> = rows
        .iter()
        .map(|r| (r.split(',').nth(4).unwrap().parse::<f64>().unwrap() - 1.0).abs())
        .collect();
    assert!(dev[0] > dev[1] && dev[1] > dev[2]);

    let o = tcnet(&["asymptotic", "--kind", "node-labeled", "--k", "0", "--n", "4"]);
    assert_eq!(stdout(&o), "n,k,kind,log_value,value,note\n4,0,node-labeled,,0.00000000000000e0,\"even n\"\n");

    let o = tcnet(&["asymptotic", "--kind", "tc", "--k", "0", "--l", "10"]);
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    let log: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!(log.is_finite());
}

#[test]
fn compgraph_enumerates_and_reduces() {
    let o = tcnet(&["compgraph", "enumerate", "--m", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);

    let star = tcnet(&["compgraph", "star", "--k", "2"]);
    let g: serde_json::Value = serde_json::from_slice(&star.stdout).unwrap();
    let text = serde_json::to_string(&g[0]).unwrap();
    let o = tcnet(&["compgraph", "reduce", "--graph", &text]);
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r[0]["t"], 2);
    assert_eq!(r[0]["removed"], 0);

    let o = tcnet(&["compgraph", "star", "--k", "2", "--output", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn verify_exit_codes() {
    let o = tcnet(&["verify"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = tcnet(&["verify", "--suite", "exact"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[oracle] SKIPPED"));

    let o = tcnet(&["verify", "--suite", "exact", "--inject-fault"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL star count, two routes"));
}

#[test]
fn guard_and_usage_exit_codes() {
    let o = tcnet(&["oracle", "--leaves", "6", "--retics", "2"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit"));

    assert_eq!(code(&tcnet(&["count", "--formula", "star", "--leaves", "3"])), 2);
    assert_eq!(code(&tcnet(&["count", "--formula", "nope", "--leaves", "3"])), 2);
    assert_eq!(code(&tcnet(&["oracle", "--leaves", "4..2"])), 2);

    let o = tcnet(&["count", "--formula", "star", "--leaves", "30000", "--retics", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn env_overrides_guards() {
    let o = Command::new(env!("CARGO_BIN_EXE_tcnet"))
        .args(["oracle", "--leaves", "3", "--retics", "1"])
        .env("TCNET_ORACLE_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);

    let o = Command::new(env!("CARGO_BIN_EXE_tcnet"))
        .args(["count", "--formula", "star", "--leaves", "20", "--retics", "1"])
        .env("TCNET_FACTORIAL_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}
