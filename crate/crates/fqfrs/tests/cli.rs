//! End-to-end tests of the `fqfrs` binary: output pinning, exit codes and
//! deterministic experiment artifacts.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn fqfrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fqfrs")).args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn write(path: &Path, content: &str) {
    fs::write(path, content).unwrap();
}

fn iris_path() -> String {
    format!("{}/data/iris.csv", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn quantify_prints_pinned_values() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pair.json");
    write(&input, r#"{"A": [1.0, 0.2, 0.0, 0.0, 0.0, 0.3], "B": [1.0, 1.0, 0.0, 0.0, 0.0, 0.0]}"#);
    let input = input.to_str().unwrap();

    let ywi = fqfrs(&["quantify", "--model", "ywi", "--rim", "s:0.7,1", "--in", input]);
    assert!(ywi.status.success());
    assert_eq!(stdout(&ywi), "0.700000000000\n");

    let owa = fqfrs(&["quantify", "--model", "owa", "--rim", "s:0.7,1", "--in", input]);
    assert_eq!(stdout(&owa), "0.818518518519\n");

    let wowa = fqfrs(&["quantify", "--model", "wowa", "--rim", "s:0.7,1", "--in", input]);
    assert_eq!(stdout(&wowa), "0.766666666667\n");
}

#[test]
fn domain_errors_exit_1_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pair.json");
    write(&input, r#"{"A": [0.5], "B": [0.5]}"#);
    let input = input.to_str().unwrap();

    let unknown = fqfrs(&["quantify", "--model", "median", "--rim", "id", "--in", input]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(stderr(&unknown).contains("unknown quantifier model"));

    let missing = fqfrs(&["quantify", "--model", "owa", "--rim", "id", "--in", "no-such.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let garbage = dir.path().join("garbage.json");
    write(&garbage, "{not json");
    let parse = fqfrs(&["quantify", "--model", "owa", "--rim", "id", "--in", garbage.to_str().unwrap()]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(stderr(&parse).contains("parse error"));

    let bad_membership = dir.path().join("bad.json");
    write(&bad_membership, r#"{"A": [1.5], "B": [0.5]}"#);
    let domain =
        fqfrs(&["quantify", "--model", "owa", "--rim", "id", "--in", bad_membership.to_str().unwrap()]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(stderr(&domain).contains("out of range"));
}

#[test]
fn approx_echoes_a_concept_under_the_identity_relation() {
    let dir = tempfile::tempdir().unwrap();
    let relation = dir.path().join("relation.csv");
    write(&relation, "1,0,0\n0,1,0\n0,0,1\n");
    let concept = dir.path().join("concept.json");
    write(&concept, "[1.0, 0.5, 0.0]");

    let lower = fqfrs(&[
        "approx",
        "--model",
        "FRS",
        "--rim",
        "forall",
        "--relation",
        relation.to_str().unwrap(),
        "--concept",
        concept.to_str().unwrap(),
    ]);
    assert!(lower.status.success());
    assert_eq!(stdout(&lower), "1.00000000000\n0.500000000000\n0.00000000000\n");

    let upper = fqfrs(&[
        "approx",
        "--model",
        "FRS",
        "--rim",
        "forall",
        "--relation",
        relation.to_str().unwrap(),
        "--concept",
        concept.to_str().unwrap(),
        "--upper",
    ]);
    assert_eq!(stdout(&upper), stdout(&lower));
}

#[test]
fn non_square_relation_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let relation = dir.path().join("relation.csv");
    write(&relation, "1,0,0\n0,1,0\n");
    let concept = dir.path().join("concept.json");
    write(&concept, "[1.0, 0.0]");
    let result = fqfrs(&[
        "approx",
        "--model",
        "OWA",
        "--rim",
        "s:0.5,1",
        "--relation",
        relation.to_str().unwrap(),
        "--concept",
        concept.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    assert!(stderr(&result).contains("square"));
}

#[test]
fn classify_separates_two_obvious_classes() {
    let dir = tempfile::tempdir().unwrap();
    let train = dir.path().join("train.csv");
    write(&train, "x,class\n0.0,low\n1.0,low\n2.0,low\n3.0,low\n7.0,high\n8.0,high\n9.0,high\n10.0,high\n");
    let test = dir.path().join("test.csv");
    write(&test, "x,class\n1.5,low\n8.5,high\n");
    let result = fqfrs(&[
        "classify",
        "--train",
        train.to_str().unwrap(),
        "--test",
        test.to_str().unwrap(),
        "--model",
        "OWA",
        "--rim",
        "s:0.5,1",
    ]);
    assert!(result.status.success(), "{}", stderr(&result));
    assert_eq!(stdout(&result), "low\nhigh\n");
}

#[test]
fn experiment_is_deterministic_and_seed_sensitive() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    write(
        &config,
        &format!(
            r#"{{"datasets": ["{}"], "models": ["FRS", "OWA"], "a_grid": [0.0, 0.5],
               "folds": 2, "noise_fraction": 0.1, "seed": 9}}"#,
            iris_path()
        ),
    );
    let config = config.to_str().unwrap();

    let out1 = dir.path().join("run1");
    let out2 = dir.path().join("run2");
    let out3 = dir.path().join("run3");
    for out in [&out1, &out2] {
        let run = fqfrs(&["experiment", config, "--out", out.to_str().unwrap()]);
        assert!(run.status.success(), "{}", stderr(&run));
        assert!(stdout(&run).contains("results:"));
    }
    let reseeded = fqfrs(&["experiment", config, "--out", out3.to_str().unwrap(), "--seed", "10"]);
    assert!(reseeded.status.success());

    for name in ["results.csv", "stats.csv", "plotdata.csv"] {
        let first = fs::read(out1.join(name)).unwrap();
        let second = fs::read(out2.join(name)).unwrap();
        assert_eq!(first, second, "{name} differs between identical runs");
    }
    assert_ne!(
        fs::read(out1.join("results.csv")).unwrap(),
        fs::read(out3.join("results.csv")).unwrap(),
        "a different seed must change the results"
    );

    let results = fs::read_to_string(out1.join("results.csv")).unwrap();
    assert!(results.starts_with("dataset,model,a,fold,balanced_accuracy\n"));
    assert_eq!(results.lines().count(), 1 + 2 * 2 * 2, "one row per model, a, fold");

    let stats = fqfrs(&["stats", out1.join("results.csv").to_str().unwrap()]);
    assert!(stats.status.success());
    assert_eq!(stdout(&stats), fs::read_to_string(out1.join("stats.csv")).unwrap());

    let plot = fqfrs(&["plotdata", out1.join("results.csv").to_str().unwrap()]);
    assert!(plot.status.success());
    assert_eq!(stdout(&plot), fs::read_to_string(out1.join("plotdata.csv")).unwrap());
}

#[test]
fn experiment_out_dir_env_var_is_respected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    write(
        &config,
        &format!(
            r#"{{"datasets": ["{}"], "models": ["FRS"], "a_grid": [0.0],
               "folds": 2, "seed": 1}}"#,
            iris_path()
        ),
    );
    let out = dir.path().join("from-env");
    let run = Command::new(env!("CARGO_BIN_EXE_fqfrs"))
        .args(["experiment", config.to_str().unwrap()])
        .env("FQFRS_OUT_DIR", &out)
        .output()
        .unwrap();
    assert!(run.status.success(), "{}", stderr(&run));
    assert!(out.join("results.csv").exists());
}

#[test]
fn invalid_experiment_config_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    write(
        &config,
        &format!(
            r#"{{"datasets": ["{}"], "models": ["FRS"], "a_grid": [1.0], "folds": 2, "seed": 1}}"#,
            iris_path()
        ),
    );
    let run = fqfrs(&["experiment", config.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(1));
    assert!(stderr(&run).contains("must lie in [0,1)"));
}
