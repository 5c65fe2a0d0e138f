use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_power-spectra")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_power-spectra")).args(args).env(key, value).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn graph_prints_canonical_adjacency() {
    let o = run(&["graph", "--family", "cyclic", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("6"));
    assert_eq!(lines.nth(3), Some("1 1 1 0 0 1"));
}

#[test]
fn graph_distance_to_file_and_back_through_spectra() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d12.txt");
    let p = path.to_str().unwrap();
    let o = run(&["graph", "--family", "dihedral", "--n", "6", "--distance", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["spectra", "--matrix", p]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 12);
    assert_eq!(v["multiplicity"], 1);
}

#[test]
fn spectra_of_z6() {
    let o = run(&["spectra", "--family", "cyclic", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["radius"].as_f64().unwrap() - 4.42788).abs() < 1e-5);
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 6);
}

#[test]
fn bounds_json_and_sweep_csv() {
    let o = run(&["bounds", "--family", "dicyclic", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v[0]["lower"].as_f64().unwrap() - 5.27008).abs() < 1e-5);
    assert_eq!(v[0]["kind"], "adjacency_radius");

    let o = run(&["sweep", "--family", "semiprime", "--n", "6..15", "--kind", "distance"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert!(rows[0].starts_with("family,n,p,q,kind,radius"));
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("semiprime,6,2,3,distance,"));
}

#[test]
fn reproduce_and_verify_succeed() {
    let o = run(&["reproduce"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let o = run(&["verify", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["graph", "--family", "nonsense", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "--family", "dihedral", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--family", "cyclic"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--family", "cyclic", "--n", "9..3"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--family", "semiprime", "--n", "1..5"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--family", "semiprime", "--p", "4", "--q", "7"]).status.code(), Some(2));
    assert_eq!(run(&["nope"]).status.code(), Some(2));
}

#[test]
fn order_guard_env_override() {
    let o = run_env(&["graph", "--family", "cyclic", "--n", "12"], "POWER_SPECTRA_MAX_ORDER", "10");
    assert_eq!(o.status.code(), Some(2));
    let o = run_env(&["graph", "--family", "cyclic", "--n", "10"], "POWER_SPECTRA_MAX_ORDER", "10");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn io_errors_exit_4() {
    let o = run(&["graph", "--family", "cyclic", "--n", "6", "--out", "/nonexistent-dir/x.txt"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["spectra", "--matrix", "/nonexistent-dir/x.txt"]);
    assert_eq!(o.status.code(), Some(4));
}
