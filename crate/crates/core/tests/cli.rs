use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubeshape"))
        .args(args)
        .env_remove("CUBESHAPE_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Vec<Value> {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn field_six() {
    let v = &json(&["field", "6"])[0];
    assert_eq!(v["discriminant"], -972);
    assert_eq!(v["type"], "I");
    assert_eq!((v["a"].as_u64(), v["b"].as_u64()), (Some(6), Some(1)));
}

#[test]
fn field_perfect_cube_exits_two() {
    let out = run(&["field", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("perfect cube"));
}

#[test]
fn field_ten_has_nu_in_basis() {
    let v = &json(&["field", "10"])[0];
    assert_eq!(v["type"], "II");
    assert_eq!(v["basis"][1], serde_json::json!(["1/3", "1/3", "1/3"]));
}

#[test]
fn shape_six_and_twelve() {
    let v = &json(&["shape", "6"])[0];
    let y = v["z"][1].as_f64().unwrap();
    assert!((y - 1.817120593).abs() < 1e-9);
    assert_eq!(v["z"][0], 0.0);
    let v = &json(&["shape", "12"])[0];
    assert_eq!((v["y_cubed_num"].as_i64(), v["y_cubed_den"].as_i64()), (Some(3), Some(2)));
}

#[test]
fn shape_scan_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.svg");
    let records = json(&["shape", "--scan", "1000", "--svg", path.to_str().unwrap()]);
    assert_eq!(records.len(), 8);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="shape""#).count(), 8);
    assert!(svg.contains("<path"));
}

#[test]
fn count_couples_and_fields() {
    let v = &json(&["count", "--couples", "10", "10"])[0];
    assert_eq!(v["total"], 17);
    let v = &json(&["count", "--fields", "1000", "1", "1000000"])[0];
    assert_eq!((v["n_i"].as_u64(), v["n_ii"].as_u64()), (Some(5), Some(3)));
}

#[test]
fn count_constants_tail_bound() {
    let v = &json(&["count", "--constants", "1000000"])[0];
    assert!(v["C"]["tail_bound"].as_f64().unwrap() < 1e-5);
    for key in ["kappa", "gamma", "C_I", "C_II"] {
        assert!(v[key]["value"].as_f64().is_some(), "{key}");
    }
}

#[test]
fn equidist_csv_columns() {
    let out = run(&["count", "--equidist", "I", "100000000", "1", "2", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "X,type,R1,R2,count,normalized_mass,target,deviation");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("100000000,I,1,2,"));
}

#[test]
fn output_independent_of_threads() {
    let args = ["count", "--equidist", "II", "10000000000", "1", "1.5", "3", "7", "--format", "csv"];
    let outputs: Vec<_> = ["1", "2", "7"]
        .iter()
        .map(|t| {
            Command::new(env!("CARGO_BIN_EXE_cubeshape"))
                .args(args)
                .env("CUBESHAPE_THREADS", t)
                .output()
                .unwrap()
                .stdout
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let flag = run(&["--threads", "3", "count", "--couples", "100000", "5"]).stdout;
    let env = Command::new(env!("CARGO_BIN_EXE_cubeshape"))
        .args(["--threads", "0", "count", "--couples", "100000", "5"])
        .env("CUBESHAPE_THREADS", "2")
        .output()
        .unwrap();
    // The environment variable wins over the (invalid) flag.
    assert!(env.status.success());
    assert_eq!(env.stdout, flag);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["count", "--fields", "1000", "3", "2"][..],
        &["count", "--couples", "0", "2"],
        &["count", "--couples", "10", "abc"],
        &["count", "--equidist", "III", "1000", "1", "2"],
        &["count", "--equidist", "I", "1000", "2", "1"],
        &["count", "--constants", "1"],
        &["shape"],
        &["field", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_names_quantities() {
    let top = String::from_utf8(run(&["--help"]).stdout).unwrap();
    for sub in ["field", "shape", "count"] {
        assert!(top.contains(sub));
    }
    let count = String::from_utf8(run(&["count", "--help"]).stdout).unwrap();
    for q in ["S(N, R)", "N_I", "C_I", "r^(1/3)"] {
        assert!(count.contains(q), "{q}");
    }
    let shape = String::from_utf8(run(&["shape", "--help"]).stdout).unwrap();
    assert!(shape.contains("fundamental domain"));
}
