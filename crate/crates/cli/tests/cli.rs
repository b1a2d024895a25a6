use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compshuffle")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn nabla_catalan_table() {
    let text = stdout(&["table", "nabla-catalan", "3"]);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["1\t1", "2\tq + t", "3\tq^3 + q^2*t + q*t + q*t^2 + t^3"]);
}

#[test]
fn paths_with_touch_filter() {
    let text = stdout(&["paths", "3", "--touch", "[3]"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "arm\tarea\tdinv\ttouch\tdoff");
    assert_eq!(&lines[1..], ["(0,1,1)\t2\t1\t[3]\t0", "(0,1,2)\t3\t0\t[3]\t0"]);
}

#[test]
fn paths_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "paths", "4", "--below", "[2,2]"])).unwrap();
    // Paths below the (2,2) staircase: touches at rows 0 and 2 forced, 2 choices per block.
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn expand_families() {
    assert_eq!(stdout(&["expand", "C", "[1,3]"]).trim(), "(-q^-2 + q^-3)*s[2,2] + q^-4*s[3,1] + q^-5*s[4]");
    assert_eq!(stdout(&["expand", "E", "[3,1]"]).trim(), "q^-2*s[3]");
    assert_eq!(stdout(&["expand", "H", "[2]"]).trim(), "q*s[1,1] + s[2]");
}

#[test]
fn nabla_pairing() {
    assert_eq!(stdout(&["nabla", "e", "[3]", "--pair", "e3"]).trim(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
    assert_eq!(stdout(&["nabla", "h", "[3]", "--pair", "e3", "--q1"]).trim(), "t^2 + t^3");
}

#[test]
fn verify_json_passes() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "verify", "--nmax", "3", "--only", "en_sum_C,B_to_C"])).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "C", "[1,x]"][..],
        &["expand", "Z", "[1]"],
        &["expand", "E", "[3,4]"],
        &["macd", "30"],
        &["paths", "3", "--touch", "[2,2]"],
        &["verify", "--only", "no_such_check"],
        &["nabla", "e", "[3]", "--pair", "q3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
