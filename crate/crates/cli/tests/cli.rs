//! Binary-level tests: exit-code contract, artifact determinism, config
//! handling.

use std::path::Path;
use std::process::{Command, Output};

fn subdyn() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subdyn"))
}

fn run(args: &[&str], out_dir: &Path) -> Output {
    subdyn()
        .args(args)
        .arg("--out")
        .arg(out_dir)
        .env_remove("SUBDYN_DEPTH")
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn cantor_defaults_verify_and_write_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cantor", "--grid-den", "128", "--depth", "16"], dir.path());
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["summary"]["violated"], 0);
    assert_eq!(doc["summary"]["undecided"], 0);
    let on_disk: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cantor.json")).unwrap())
            .unwrap();
    assert_eq!(on_disk, doc);
}

#[test]
fn cantor_at_depth_zero_is_undecided() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cantor", "--grid-den", "128", "--depth", "0"], dir.path());
    assert_eq!(exit_code(&out), 2);
    let doc = report(&out);
    assert!(doc["summary"]["undecided"].as_u64().unwrap() > 0);
    assert_eq!(doc["summary"]["violated"], 0);
}

#[test]
fn cantor_rejects_inadmissible_alpha_naming_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cantor", "--alpha", "2/3", "--lambda", "3/5"], dir.path());
    assert_eq!(exit_code(&out), 64);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("alpha"), "stderr: {stderr}");
}

#[test]
fn split_verify_violates_when_floor_exceeds_installed_mass() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "split-verify",
            "--placements",
            "0",
            "--floor",
            "7/10",
            "--grid-den",
            "64",
            "--grid-count",
            "64",
            "--intervals",
            "4",
            "--depth",
            "16",
        ],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 1, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert!(doc["summary"]["violated"].as_u64().unwrap() > 0);
}

#[test]
fn split_verify_writes_round_trippable_set_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "split-verify",
            "--placements",
            "3",
            "--grid-count",
            "64",
            "--intervals",
            "3",
            "--depth",
            "12",
        ],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("splitting_set.json")).unwrap();
    let set = subdyn_core::measure_sets::SplittingSet::from_json(&text).unwrap();
    assert_eq!(set.to_json(), text);
    assert_eq!(set.placements().len(), 4);
}

#[test]
fn identical_configs_give_byte_identical_artifacts() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let args = [
        "increase",
        "--grid-den",
        "64",
        "--grid-count",
        "128",
        "--depth",
        "14",
    ];
    // Same config, same out dir: the whole report is byte-identical.
    let out_a1 = run(&args, dir_a.path());
    let out_a2 = run(&args, dir_a.path());
    assert_eq!(exit_code(&out_a1), 0);
    assert_eq!(out_a1.stdout, out_a2.stdout);
    // Artifact bytes are independent of where they are written.
    let out_b = run(&args, dir_b.path());
    assert_eq!(exit_code(&out_b), 0);
    let csv_a = std::fs::read(dir_a.path().join("increase.csv")).unwrap();
    let csv_b = std::fs::read(dir_b.path().join("increase.csv")).unwrap();
    assert!(!csv_a.is_empty());
    assert_eq!(csv_a, csv_b);
}

#[test]
fn periodic_emits_figure_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["periodic", "--samples", "500"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let svg = std::fs::read_to_string(dir.path().join("periodic.svg")).unwrap();
    assert_eq!(svg.matches(r#"r="0.5""#).count(), 2);
    let csv = std::fs::read_to_string(dir.path().join("periodic.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "t,x1,x2,x3,x4,dist_crit");
    assert_eq!(csv.lines().count(), 501);
}

#[test]
fn periodic_seeded_sampling_is_reproducible() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let args = ["periodic", "--samples", "200", "--seed", "7"];
    let a = run(&args, dir_a.path());
    let a2 = run(&args, dir_a.path());
    let b = run(&args, dir_b.path());
    assert_eq!(exit_code(&b), 0);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, a2.stdout);
    assert_eq!(
        std::fs::read(dir_a.path().join("periodic.csv")).unwrap(),
        std::fs::read(dir_b.path().join("periodic.csv")).unwrap()
    );
}

#[test]
fn sgd_short_run_emits_contract_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["sgd", "--steps", "2000", "--csv-stride", "100", "--window", "100"],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("trajectory.csv")).unwrap();
    assert_eq!(
        csv.lines().next().unwrap(),
        "n,x,y,z,w,r1,r2,dist_crit,t_n,gnorm1,gnorm2"
    );
    // 2001 points / stride 100 -> rows 1, 101, ..., 2001 plus the header;
    // the terminal point lands on the stride here.
    assert_eq!(csv.lines().count(), 22);
}

#[test]
fn sgd_with_values_emits_certified_brackets() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "sgd",
            "--steps",
            "200",
            "--csv-stride",
            "50",
            "--window",
            "50",
            "--with-values",
            "--depth",
            "12",
        ],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let values = std::fs::read_to_string(dir.path().join("values.csv")).unwrap();
    assert_eq!(values.lines().next().unwrap(), "n,f_lower,f_upper");
    assert!(values.lines().count() > 2);
}

#[test]
fn config_file_is_honored_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("cantor.config.json");
    std::fs::write(
        &cfg_path,
        r#"{"alpha": "4/5", "grid_den": 64, "depth": 10}"#,
    )
    .unwrap();
    let out = subdyn()
        .args(["cantor", "--config"])
        .arg(&cfg_path)
        .args(["--lambda", "5/8", "--out"])
        .arg(dir.path())
        .env_remove("SUBDYN_DEPTH")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert_eq!(doc["params"]["alpha"], "4/5");
    assert_eq!(doc["params"]["lambda"], "5/8");
    assert_eq!(doc["params"]["grid_den"], 64);
    assert_eq!(doc["params"]["depth"], 10);
}

#[test]
fn unknown_config_fields_are_rejected_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("bad.config.json");
    std::fs::write(&cfg_path, r#"{"alhpa": "3/4"}"#).unwrap();
    let out = subdyn()
        .args(["cantor", "--config"])
        .arg(&cfg_path)
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 64);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("alhpa"), "stderr: {stderr}");
}

#[test]
fn depth_env_var_provides_the_default() {
    let dir = tempfile::tempdir().unwrap();
    let out = subdyn()
        .args(["cantor", "--grid-den", "32", "--out"])
        .arg(dir.path())
        .env("SUBDYN_DEPTH", "6")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    let doc = report(&out);
    assert_eq!(doc["params"]["depth"], 6);
}
