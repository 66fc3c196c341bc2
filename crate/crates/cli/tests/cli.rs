use std::process::{Command, Output};

fn fcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn counts_the_four_fcps_of_the_smallest_four_dimensional_box() {
    let o = fcp(&["count", "fcp", "--box", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn class_counts() {
    let o = fcp(&["count", "class", "--class", "QTC", "--box", "2,2,2"]);
    assert_eq!(stdout(&o), "10\n");
    let o = fcp(&["count", "class", "--class", "sym", "--box", "2,2,2"]);
    assert_eq!(stdout(&o), "10\n");
}

#[test]
fn verify_suite_exits_zero() {
    let o = fcp(&["verify", "qtc-spp", "--n-max", "3", "--c-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS qtc-spp"));
    let o = fcp(&["verify", "tc-spp", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["suite"], "tc-spp");
    assert_eq!(v[0]["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn failing_check_exits_one() {
    let o = fcp(&["verify", "conjectures", "--class", "qspp", "--a-max", "5", "--c-max", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("qspp(5,1) computed=64 formula=60 table=60"));
}

#[test]
fn table_rows_match_the_embedded_values() {
    let o = fcp(&["table", "qspp", "--a-max", "3", "--c-max", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,c,value"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 15);
    assert!(rows.contains(&"3,3,272"));
    assert!(rows.contains(&"2,2,20"));
    let reference = fcp(&["table", "qspp", "--a-max", "3", "--c-max", "4", "--source", "table"]);
    assert_eq!(stdout(&reference), text);
    let formula = fcp(&["table", "qtcspp2", "--a-max", "5", "--c-max", "5", "--source", "formula"]);
    assert!(stdout(&formula).contains("5,5,8796\n"));
}

#[test]
fn path_round_trip() {
    let rows = "[[4,2,2,0],[3,2,2,0],[2,2,0,0],[2,2,0,0],[1,0,0,0],[0,0,0,0]]";
    let o = fcp(&["path", "to", "--box", "3,2,2", "--array", rows]);
    assert_eq!(stdout(&o), "(1,1,0) + [e3,e1,e3,e2,e1]\n");
    let o = fcp(&["path", "from", "--start", "1,1,0", "--steps", "3,1,3,2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected: serde_json::Value = serde_json::from_str(rows).unwrap();
    assert_eq!(v["fcp"], expected);
    assert_eq!(v["box"], serde_json::json!([3, 2, 2]));
}

#[test]
fn series_output_is_decimal_and_deterministic() {
    let a = fcp(&["series", "fcp", "--dim", "2", "--cap", "6"]);
    let b = fcp(&["--threads", "1", "series", "fcp", "--dim", "2", "--cap", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().any(|l| l == "1,1,1 3"));
    let m = fcp(&["series", "macmahon", "--box", "2,2,2"]);
    let total: u64 = stdout(&m).lines().map(|l| l.split(' ').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 20);
}

#[test]
fn usage_and_budget_errors() {
    assert_eq!(fcp(&["count", "fcp", "--box", "0,0,1"]).status.code(), Some(2));
    assert_eq!(fcp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fcp(&["count", "class", "--class", "NOPE", "--box", "2,2,2"]).status.code(), Some(2));
    let o = fcp(&["count", "class", "--class", "QSYM", "--box", "6,6,6", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn enumerate_lists_every_fcp() {
    let o = fcp(&["enumerate", "fcp", "--box", "2,2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 11);
    assert_eq!(v["fcps"].as_array().unwrap().len(), 11);
}
