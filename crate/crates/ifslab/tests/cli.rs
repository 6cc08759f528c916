//! End-to-end checks of the command-line interface: exit codes, artifact
//! shapes, and byte-level determinism across reruns and thread counts.

use std::path::Path;
use std::process::{Command, Output};

fn ifslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ifslab"))
        .args(args)
        .output()
        .expect("the binary spawns")
}

fn stdout_text(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_text(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn empty_arguments_print_usage_and_exit_two() {
    let output = ifslab(&[]);
    assert_eq!(output.status.code(), Some(2));
    let text = format!("{}{}", stdout_text(&output), stderr_text(&output));
    assert!(text.contains("Usage"), "usage text missing: {text}");
}

#[test]
fn cf_emits_convergent_rows() {
    let output = ifslab(&["cf", "--t", "cf:[;2]", "--depth", "4"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let csv = stdout_text(&output);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("m,quotient,p,q,value"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("1,2,1,2,"));
    assert!(rows[1].starts_with("2,2,2,5,"));
    assert!(rows[2].starts_with("3,2,5,12,"));
    assert!(rows[3].starts_with("4,2,12,29,"));
}

#[test]
fn phit_overlap_report_locates_the_rational_collision() {
    let output = ifslab(&["phit", "--t", "rational:1/3", "--report", "overlap"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let artifact: serde_json::Value =
        serde_json::from_str(&stdout_text(&output)).expect("stdout is JSON");
    assert_eq!(artifact["schema"], 1);
    assert_eq!(artifact["command"], "phit");
    assert_eq!(artifact["verdict"], "overlap");
    assert_eq!(artifact["overlap_level"], 2);
    assert_eq!(artifact["p"], 1);
    assert_eq!(artifact["q"], 3);
    assert_eq!(artifact["config"]["t"], "rational:1/3");
}

#[test]
fn malformed_parameter_specs_exit_two() {
    let output = ifslab(&["cf", "--t", "bogus:7", "--depth", "3"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_text(&output).contains("error:"));

    let output = ifslab(&["separation", "--ifs", "similarity1d(lambda=2)", "--levels", "1..3"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_three() {
    let output = ifslab(&[
        "coverage",
        "--ifs",
        "similarity1d(lambda=0.25, digits=[0,0.75])",
        "--measure",
        "uniform",
        "--h",
        "reciprocal",
        "--levels",
        "2..12",
    ]);
    assert_eq!(output.status.code(), Some(3), "{}", stderr_text(&output));
    assert!(stderr_text(&output).contains("resource cap"));

    let output = ifslab(&["families", "scan", "--lambda", "inv-sqrt2", "--n-max", "40"]);
    assert_eq!(output.status.code(), Some(3), "{}", stderr_text(&output));
}

#[test]
fn separation_csv_lists_every_requested_level() {
    let output = ifslab(&[
        "separation",
        "--ifs",
        "phit(t=rational:1/5)",
        "--levels",
        "1..5",
        "--s",
        "0.125",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let csv = stdout_text(&output);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("n,cardinality,separated,ratio,min_gap,near_pairs,radius")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    for (i, row) in rows.iter().enumerate() {
        let n = i + 1;
        assert!(row.starts_with(&format!("{n},{},", 4usize.pow(n as u32))), "{row}");
    }
}

#[test]
fn out_flag_writes_the_artifact_and_summarizes_on_stdout() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("constants.json");
    let path_text = path.to_str().expect("UTF-8 path");
    let output = ifslab(&["families", "eight-map", "--out", path_text]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let summary = stdout_text(&output);
    assert!(summary.contains("families eight-map:"), "{summary}");
    assert!(summary.trim_end().ends_with(path_text), "{summary}");
    let artifact: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("artifact written"))
            .expect("artifact is JSON");
    assert_eq!(artifact["schema"], 1);
    let gamma = artifact["gamma"].as_f64().expect("gamma is a number");
    assert!((gamma - 0.2794299220894641).abs() < 1e-15);
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "coverage",
        "--ifs",
        "phit(t=cf:[;1])",
        "--measure",
        "uniform",
        "--h",
        "reciprocal-square",
        "--levels",
        "2..7",
        "--sigma",
        "0.6",
    ];
    let first = ifslab(&args);
    let second = ifslab(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr_text(&first));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_output_does_not_depend_on_thread_count() {
    let tail = [
        "sweep",
        "--family",
        "bc",
        "--lambda",
        "0.55:0.6:5",
        "--n",
        "7",
        "--s",
        "0.1",
        "--margin",
        "0.005",
    ];
    let single = ifslab(&[&["--threads", "1"], &tail[..]].concat());
    let many = ifslab(&[&["--threads", "4"], &tail[..]].concat());
    assert_eq!(single.status.code(), Some(0), "{}", stderr_text(&single));
    assert_eq!(many.status.code(), Some(0), "{}", stderr_text(&many));
    assert_eq!(single.stdout, many.stdout);
    let csv = stdout_text(&single);
    assert_eq!(csv.lines().next(), Some("lambda,ratio,delta"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn sweep_json_embeds_the_seed_and_threshold_fractions() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("sweep.json");
    let path_text = path.to_str().expect("UTF-8 path");
    let output = ifslab(&[
        "--seed",
        "42",
        "sweep",
        "--family",
        "013",
        "--lambda",
        "0.35:0.40:4",
        "--n",
        "6",
        "--s",
        "0.1",
        "--margin",
        "0.005",
        "--c-grid",
        "0.25,0.75",
        "--json",
        path_text,
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let artifact: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("artifact written"))
            .expect("artifact is JSON");
    assert_eq!(artifact["config"]["seed"], 42);
    assert_eq!(artifact["config"]["family"], "013");
    let fractions = artifact["fractions"].as_array().expect("fractions array");
    assert_eq!(fractions.len(), 2);
    for entry in fractions {
        let fraction = entry["fraction"].as_f64().expect("fraction value");
        assert!((0.0..=1.0).contains(&fraction));
    }
}

#[test]
fn pushforward_masses_sum_to_one() {
    let output = ifslab(&[
        "pushforward",
        "--ifs",
        "phit(t=cf:[;2])",
        "--n",
        "6",
        "--bins",
        "16",
    ]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_text(&output));
    let csv = stdout_text(&output);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("bin,lo,hi,mass"));
    let mut total = 0.0f64;
    let mut rows = 0usize;
    for line in lines {
        let mass: f64 = line.split(',').nth(3).expect("mass column").parse().unwrap();
        total += mass;
        rows += 1;
    }
    assert_eq!(rows, 16);
    assert!((total - 1.0).abs() < 1e-12, "total mass {total}");
}

#[test]
fn hits_csv_requires_a_grid() {
    let output = ifslab(&[
        "coverage",
        "--ifs",
        "similarity1d(lambda=0.25, digits=[0,0.75])",
        "--measure",
        "uniform",
        "--h",
        "reciprocal",
        "--levels",
        "2..5",
        "--hits-csv",
        "/tmp/unused-hits.csv",
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(!Path::new("/tmp/unused-hits.csv").exists());
}
