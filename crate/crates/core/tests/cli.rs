use std::process::{Command, Output};

fn tfc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfc")).args(args).output().expect("spawn tfc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn run_each_example_passes() {
    for id in ["matrix_r2x3", "string_c2", "gf4", "multivariate"] {
        let o = tfc(&["run", id, "--samples", "20"]);
        assert_eq!(o.status.code(), Some(0), "{id}: {}", stdout(&o));
    }
}

#[test]
fn json_is_deterministic_and_complete() {
    let args = ["run", "string_c2", "--seed", "7", "--samples", "10", "--format", "json"];
    let a = tfc(&args);
    let b = tfc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["example_id"], "string_c2");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["samples"], 10);
    assert_eq!(v["passed"], true);
    assert!(v["generator"].as_str().unwrap().contains("ChaCha8"));
    assert!(!v["alpha_matrices"].as_array().unwrap().is_empty());
    for check in v["checks"].as_array().unwrap() {
        for key in ["description", "samples", "max_deviation", "tolerance", "pass"] {
            assert!(check.get(key).is_some(), "missing {key} in {check}");
        }
    }
    let entry = &v["alpha_matrices"][0]["entries"][0][0];
    assert_eq!(entry["re"], 0.2);
}

#[test]
fn different_seeds_change_the_samples() {
    let run = |seed: &str| tfc(&["run", "matrix_r2x3", "--seed", seed, "--samples", "5", "--format", "json"]).stdout;
    assert_ne!(run("1"), run("2"));
}

#[test]
fn text_output_shows_rounded_alpha() {
    let text = stdout(&tfc(&["run", "string_c2", "--samples", "5"]));
    assert!(text.contains("-0.5512+0.1816i"), "{text}");
    assert!(text.contains("0.0880+0.0160i"), "{text}");
    let text = stdout(&tfc(&["run", "gf4", "--samples", "5"]));
    assert!(text.contains('A'), "{text}");
}

#[test]
fn zero_samples_still_reports_alpha() {
    let o = tfc(&["run", "matrix_r2x3", "--samples", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["alpha_matrices"].as_array().unwrap().is_empty());
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let o = tfc(&["run", "multivariate", "--samples", "5", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tfc(&["run", "nope"]).status.code(), Some(2));
    assert_eq!(tfc(&["run", "gf4", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(tfc(&["run", "gf4", "--samples", "-3"]).status.code(), Some(2));
    assert_eq!(tfc(&[]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = tfc(&["verify-all", "--samples", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["examples_passed"], 4);
    assert_eq!(v["examples_total"], 4);
    assert!(v["suites"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}
