//! End-to-end CLI checks: flag validation and exit codes, JSON round-trip
//! stability, file output, and the scheme-file interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn charwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn spectrum_hypercube_has_eleven_atoms() {
    let out = charwalk(&["spectrum", "--structure", "hypercube", "--n", "10"]);
    assert!(out.status.success());
    let atoms: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(atoms.as_array().unwrap().len(), 11);
}

#[test]
fn spectrum_symmetric_has_seven_atoms_at_n5() {
    let out = charwalk(&[
        "spectrum",
        "--structure",
        "symmetric",
        "--n",
        "5",
        "--i",
        "2",
    ]);
    assert!(out.status.success());
    let atoms: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(atoms.as_array().unwrap().len(), 7);
}

#[test]
fn missing_generator_flag_exits_2() {
    let out = charwalk(&["spectrum", "--structure", "symmetric", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--i"), "stderr names the parameter: {err}");
}

#[test]
fn resource_bound_exits_3() {
    let out = charwalk(&[
        "spectrum",
        "--structure",
        "matchings",
        "--n",
        "9",
        "--i",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_round_trips_byte_identical() {
    for args in [
        vec!["spectrum", "--structure", "hamming", "--d", "4", "--q", "3"],
        vec![
            "bound",
            "--structure",
            "hypercube",
            "--n",
            "100",
            "--variant",
            "hypbound1",
        ],
        vec![
            "sweep",
            "--structure",
            "hamming",
            "--q",
            "3",
            "--n-range",
            "4:8",
            "--variant",
            "rinrot",
        ],
        vec![
            "walk",
            "--structure",
            "symmetric",
            "--n",
            "5",
            "--i",
            "2",
            "--m",
            "3",
        ],
    ] {
        let out = charwalk(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
        reserialized.push('\n');
        assert_eq!(text, reserialized, "round trip changed bytes for {args:?}");
    }
}

#[test]
fn bound_variant_structure_mismatch_exits_2() {
    let out = charwalk(&[
        "bound",
        "--structure",
        "hypercube",
        "--n",
        "10",
        "--variant",
        "projerror",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn writes_output_file() {
    let dir = std::env::temp_dir().join(format!("charwalk-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("spectrum.csv");
    let out = charwalk(&[
        "spectrum",
        "--structure",
        "hypercube",
        "--n",
        "6",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("value_float,value_exact,probability_exact\n"));
    assert_eq!(text.lines().count(), 8);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn scheme_file_input_works() {
    // Hamming H(2,2) as explicit relations: identity, distance-1, distance-2.
    let scheme = serde_json::json!({
        "relations": [
            [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
            [[0,1,1,0],[1,0,0,1],[1,0,0,1],[0,1,1,0]],
            [[0,0,0,1],[0,0,1,0],[0,1,0,0],[1,0,0,0]],
        ]
    });
    let dir = std::env::temp_dir().join(format!("charwalk-scheme-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h22.json");
    std::fs::write(&path, serde_json::to_string(&scheme).unwrap()).unwrap();

    let out = charwalk(&[
        "walk",
        "--structure",
        "scheme-file",
        "--file",
        path.to_str().unwrap(),
        "--m",
        "2",
        "--format",
        "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    // p_2 of the distance-1 walk on H(2,2): (1/2, 0, 1/2)
    assert!(text.contains("0,1/2,"), "{text}");
    assert!(text.contains("2,1/2,"), "{text}");

    // a broken scheme (non-symmetric relation) is a validation error
    let bad = serde_json::json!({
        "relations": [
            [[1,0],[0,1]],
            [[0,1],[0,0]],
            [[0,0],[1,0]],
        ]
    });
    let bad_path = dir.join("bad.json");
    std::fs::write(&bad_path, serde_json::to_string(&bad).unwrap()).unwrap();
    let out = charwalk(&[
        "spectrum",
        "--structure",
        "scheme-file",
        "--file",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("axiom 1"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_suite_passes_and_prints_tags() {
    let out = charwalk(&[
        "verify",
        "--suite",
        "chains",
        "--structure",
        "spin",
        "--n",
        "5",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("J(2,1)-diagonal"), "{err}");
    assert!(err.contains("2chains"), "{err}");
    assert!(!err.contains("FAIL"), "{err}");
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = charwalk(&["verify", "--suite", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}
