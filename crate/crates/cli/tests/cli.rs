use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str =
    "8 14\n1 2\n1 6\n2 6\n2 7\n2 8\n3 4\n3 5\n3 7\n4 7\n4 8\n5 8\n4 6\n6 7\n6 8\n";

fn nmseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nmseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn descriptor_golden_values() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "example.edges", EXAMPLE);
    let v = json(&nmseq(&[
        "descriptor",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "edgelist",
    ]));
    let values: Vec<f64> = v[0]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let expected = [
        9.9718, 8.6746, 9.4496, 8.7680, 9.5123, 8.3244, 8.7680, 8.7649,
    ];
    for (got, want) in values.iter().zip(expected) {
        assert!((got - want).abs() < 5e-4);
    }
    assert_eq!(v[0]["k"], 2);
}

#[test]
fn nm_rows_for_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.edges", "3 3\n1 2\n2 3\n1 3\n");
    let out = nmseq(&[
        "nm",
        "--input",
        input.to_str().unwrap(),
        "--output-format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "graph,level,row,entries\n1,1,1,-2 1 1\n1,1,2,1 -2 1\n1,1,3,1 1 -2\n"
    );
    let direct = nmseq(&[
        "nm",
        "--input",
        input.to_str().unwrap(),
        "--builder",
        "direct",
        "--output-format",
        "csv",
    ]);
    assert_eq!(String::from_utf8(direct.stdout).unwrap(), text);
}

#[test]
fn classify_permuted_pair() {
    let dir = tempfile::tempdir().unwrap();
    // a 5-vertex star and a relabelled copy
    let input = write(dir.path(), "pair.g6", "D?{\nDs_\n");
    let v = json(&nmseq(&[
        "classify",
        "--input",
        input.to_str().unwrap(),
        "--no-timings",
    ]));
    assert_eq!(v["class_sizes"], serde_json::json!([2]));
    assert_eq!(v["classes"][0]["verdicts"][0]["isomorphic"], true);
    assert!(v.get("timings").is_none());

    let csv = nmseq(&[
        "classify",
        "--input",
        input.to_str().unwrap(),
        "--output-format",
        "csv",
        "--jobs",
        "1",
    ]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(
        text,
        "graph_index,stage_resolved,class_id,isomorphic_to\n1,exact,1,2\n2,exact,1,1\n"
    );
}

#[test]
fn classify_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "mix.g6", "D?{\nDs_\nDhc\nD~{\nEhEG\n");
    let out = dir.path().join("report.json");
    let args = [
        "classify",
        "--input",
        input.to_str().unwrap(),
        "--no-timings",
        "--output",
        out.to_str().unwrap(),
    ];
    assert!(nmseq(&args).status.success());
    let first = std::fs::read(&out).unwrap();
    assert!(nmseq(&args).status.success());
    assert_eq!(first, std::fs::read(&out).unwrap());
}

#[test]
fn cliques_and_automorphisms_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c5.edges", "5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    let path = input.to_str().unwrap();
    let c = json(&nmseq(&["cliques", "--input", path, "--oracle"]));
    assert_eq!(c[0]["omega"], 2);
    assert_eq!(c[0]["oracle_agrees"], true);
    let bk = json(&nmseq(&[
        "cliques",
        "--input",
        path,
        "--algo",
        "bron-kerbosch",
    ]));
    assert_eq!(bk[0]["cliques"], c[0]["cliques"]);

    let a = json(&nmseq(&["aut", "--input", path, "--oracle"]));
    assert_eq!(a[0]["order"], 10);
    assert_eq!(a[0]["oracle_agrees"], true);
    assert_eq!(a[0]["automorphisms"][0]["cycles"], "()");
    assert_eq!(
        a[0]["automorphisms"][0]["word"],
        serde_json::json!([1, 2, 3, 4, 5])
    );
}

#[test]
fn oracle_check_passes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "mix.g6", "D?{\nDs_\nDo?\nDhc\nEhEG\n");
    let v = json(&nmseq(&[
        "oracle-check",
        "--input",
        input.to_str().unwrap(),
    ]));
    assert_eq!(v["all_agree"], true);
    assert!(!v["pairs"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.g6", "D?{\n\u{7f}\n");
    let out = nmseq(&["descriptor", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert!(out.stdout.is_empty());

    let unknown = write(dir.path(), "graph.xyz", EXAMPLE);
    assert_eq!(
        nmseq(&["nm", "--input", unknown.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(nmseq(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        nmseq(&["nm", "--input", "/no/such/file.g6"]).status.code(),
        Some(1)
    );

    let input = write(dir.path(), "example.edges", EXAMPLE);
    let path = input.to_str().unwrap();
    assert_eq!(
        nmseq(&["descriptor", "--input", path, "--eps", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        nmseq(&["descriptor", "--input", path, "--weights", "1,2,3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        nmseq(&["descriptor", "--input", path, "--weights", "1,1,1,1,1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        nmseq(&["nm", "--input", path, "--builder", "nope"])
            .status
            .code(),
        Some(1)
    );

    let c4 = write(dir.path(), "c4.edges", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let out = nmseq(&[
        "aut",
        "--input",
        c4.to_str().unwrap(),
        "--candidate-budget",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[4]"));
    let out = nmseq(&[
        "cliques",
        "--input",
        c4.to_str().unwrap(),
        "--clique-budget",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(nmseq(&["--help"]).status.success());
}

#[test]
fn custom_weights_change_values() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "example.edges", EXAMPLE);
    let path = input.to_str().unwrap();
    let default = json(&nmseq(&["descriptor", "--input", path]));
    let custom = json(&nmseq(&[
        "descriptor",
        "--input",
        path,
        "--weights",
        "2,3,5,7,11,13",
    ]));
    assert_ne!(default[0]["values"], custom[0]["values"]);
}
