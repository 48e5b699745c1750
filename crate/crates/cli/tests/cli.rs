use std::process::{Command, Output};

fn mcz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcz")).args(args).env_remove("MCZ_CONFIG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_catalan() {
    let o = mcz(&["eval", "--fn", "beta", "--s", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("value = 9.15965594177219"), "{}", stdout(&o));
}

#[test]
fn eval_mcos_json() {
    let o = mcz(&["eval", "--fn", "mcos", "--r", "3", "--x", "0.25", "--route", "series", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let value = v["value"].as_f64().unwrap();
    assert!((value - -0.011_265_776_726_065_236).abs() < 1e-12, "{value}");
    assert_eq!(v["route"], "series");
    assert!(v["error_bound"].as_f64().unwrap() < 1e-13);
}

#[test]
fn eval_prints_seventeen_digits() {
    let o = mcz(&["eval", "--fn", "lgamma", "--x", "0.5"]);
    let line = stdout(&o).lines().next().unwrap().to_string();
    let mantissa = line.trim_start_matches("value = ").split('e').next().unwrap().replace(['-', '.'], "");
    assert_eq!(mantissa.len(), 17, "{line}");
}

#[test]
fn eval_polylog_pair() {
    let o = mcz(&["eval", "--fn", "li", "--k", "2", "--x", "0.5", "--sign", "minus", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // -e^{-i pi/2} = i, so Im Li_2(i) = G.
    assert!((v["im"]["value"].as_f64().unwrap() - 0.915_965_594_177_219).abs() < 1e-13);
}

#[test]
fn eval_exit_codes() {
    assert_eq!(code(&mcz(&["eval", "--fn", "zeta", "--s", "0.5"])), 2);
    assert_eq!(code(&mcz(&["eval", "--fn", "nosuch", "--s", "2"])), 2);
    assert_eq!(code(&mcz(&["eval", "--fn", "mcos", "--r", "2", "--x", "0.5"])), 2);
    assert_eq!(code(&mcz(&["eval", "--fn", "mcos", "--r", "2", "--x", "0.2", "--route", "warp"])), 2);
    assert_eq!(code(&mcz(&["eval", "--fn", "beta", "--s", "2", "--bogus-flag"])), 2);
    assert_eq!(code(&mcz(&["frobnicate"])), 2);
    assert_eq!(code(&mcz(&["eval", "--fn", "beta", "--s", "2", "--tol", "1e-30"])), 3);
    assert_eq!(code(&mcz(&["eval", "--fn", "hurwitz", "--s", "2"])), 2);
}

#[test]
fn verify_all_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = mcz(&["verify", "--suite", "all", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 60);
    for key in ["id", "lhs_value", "rhs_value", "abs_residual", "rel_residual", "lhs_bound", "rhs_bound", "pass", "wall_time"] {
        assert!(arr[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn verify_zeta3_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.csv");
    let o = mcz(&["verify", "--suite", "zeta3", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("id,lhs_value"));
    for l in &lines[1..] {
        let residual: f64 = l.split(',').nth(3).unwrap().parse().unwrap();
        assert!(residual < 1e-9);
    }
}

#[test]
fn verify_empty_and_failing() {
    let o = mcz(&["verify", "--suite", "nonexistent"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    assert!(stdout(&o).contains("0 checked"));
    let o = mcz(&["verify", "--suite", "erratum"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_unwritable_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing-dir").join("r.json");
    assert_eq!(code(&mcz(&["verify", "--suite", "zeta3", "--report", path.to_str().unwrap()])), 4);
}

#[test]
fn verify_jobs_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, j) in [(&a, "1"), (&b, "3")] {
        let o = mcz(&["verify", "--suite", "lambda-series,barnes", "--jobs", j, "--report", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let strip = |p: &std::path::Path| -> Vec<serde_json::Value> {
        let mut v: Vec<serde_json::Value> =
            serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for r in &mut v {
            r.as_object_mut().unwrap().remove("wall_time");
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn tables() {
    let o = mcz(&["table", "--name", "corollary-2.9"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        let residual: f64 = r.split_whitespace().last().unwrap().parse().unwrap();
        assert!(residual < 1e-10);
    }
    assert_eq!(stdout(&mcz(&["table", "--name", "example-2.6"])).lines().count(), 5);
    assert_eq!(code(&mcz(&["table", "--name", "example-2.10"])), 0);
    assert_eq!(code(&mcz(&["table", "--name", "section5-sums"])), 0);
    assert_eq!(code(&mcz(&["table", "--name", "bogus"])), 2);
}

#[test]
fn bench_grid() {
    let o = mcz(&["bench", "--fn", "mcos", "--r", "3", "--routes", "series,integral", "--grid", "0.05:0.45:0.05"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 18);
    let at_quarter = rows
        .iter()
        .find(|r| r.starts_with("series,") && r.split(',').nth(1).unwrap().parse::<f64>().unwrap() == 0.25)
        .expect("x = 0.25 row");
    let terms: usize = at_quarter.split(',').nth(4).unwrap().parse().unwrap();
    assert!(terms < 40);
    assert_eq!(code(&mcz(&["bench", "--fn", "mcos", "--routes", "teleport"])), 2);
    assert_eq!(code(&mcz(&["bench", "--fn", "mcos", "--grid", "1:0:0.1"])), 2);
}

#[test]
fn config_file_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("mcz.toml");
    std::fs::write(&cfg, "tol = 1e-30\n").unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(code(&mcz(&["--config", c, "eval", "--fn", "beta", "--s", "2"])), 3);
    // Flags beat the file.
    assert_eq!(code(&mcz(&["--config", c, "eval", "--fn", "beta", "--s", "2", "--tol", "1e-10"])), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_mcz"))
        .args(["eval", "--fn", "beta", "--s", "2"])
        .env("MCZ_CONFIG", c)
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let missing = dir.path().join("absent.toml");
    assert_eq!(code(&mcz(&["--config", missing.to_str().unwrap(), "eval", "--fn", "beta", "--s", "2"])), 4);
    std::fs::write(&cfg, "tolerance = 'x'\n").unwrap();
    assert_eq!(code(&mcz(&["--config", c, "eval", "--fn", "beta", "--s", "2"])), 2);
}
