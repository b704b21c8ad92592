mod common;

use std::f64::consts::PI;

use common::*;
use phase_entangler::separability::{random_profile, trial_rng};
use phase_entangler::{PhaseProfile, StateVector};
use tempfile::tempdir;

#[test]
fn synthesize_cz_profile() {
    let dir = tempdir().unwrap();
    let phases = write_phases(
        dir.path(),
        "p.json",
        &PhaseProfile::new(vec![0.0, 0.0, 0.0, PI]).unwrap(),
    );
    let out = dir.path().join("c.json");
    let res = run(&["synthesize", "--phases", s(&phases), "--out", s(&out)]);
    assert_eq!(code(&res), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["num_qubits"], 2);
    assert_eq!(
        v["blocks"],
        serde_json::json!([
            {"block_index": 0, "target_phases": [0.0, 0.0]},
            {"block_index": 1, "target_phases": [0.0, PI]},
        ])
    );
}

#[test]
fn synthesize_single_qubit() {
    let dir = tempdir().unwrap();
    let phases = write(
        dir.path(),
        "p.json",
        r#"{"num_qubits": 1, "phases": [0.5, -0.25]}"#,
    );
    let out = dir.path().join("c.json");
    assert_eq!(
        code(&run(&[
            "synthesize",
            "--phases",
            s(&phases),
            "--out",
            s(&out)
        ])),
        0
    );
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 1);
}

#[test]
fn synthesize_rejects_bad_length_without_writing() {
    let dir = tempdir().unwrap();
    let phases = write(
        dir.path(),
        "p.json",
        r#"{"num_qubits": 2, "phases": [0, 1, 2]}"#,
    );
    let out = dir.path().join("c.json");
    let res = run(&["synthesize", "--phases", s(&phases), "--out", s(&out)]);
    assert_eq!(code(&res), 2);
    assert!(String::from_utf8_lossy(&res.stderr).contains("phases"));
    assert!(!out.exists());
    assert_eq!(
        std::fs::read_dir(dir.path()).unwrap().count(),
        1,
        "no temp files left"
    );
}

#[test]
fn verify_fresh_decomposition() {
    let dir = tempdir().unwrap();
    let mut rng = trial_rng(100, 0);
    for m in [1usize, 4, 8] {
        let p: PhaseProfile = random_profile(m, &mut rng).unwrap();
        let phases = write_phases(dir.path(), &format!("p{m}.json"), &p);
        let res = run(&["verify", "--phases", s(&phases)]);
        assert_eq!(code(&res), 0);
        let v = stdout_json(&res);
        assert!(v["reconstruction_error"].as_f64().unwrap() <= 1e-12);
        assert_eq!(v["kernel_unitary"], true);
        assert_eq!(v["blocks_unitary"], true);
    }
}

#[test]
fn verify_detects_mismatched_circuit() {
    let dir = tempdir().unwrap();
    let a = write_phases(
        dir.path(),
        "a.json",
        &PhaseProfile::new(vec![0.0, 0.0, 0.0, PI]).unwrap(),
    );
    let b = write_phases(
        dir.path(),
        "b.json",
        &PhaseProfile::new(vec![0.0, 0.0, 0.0, 0.5]).unwrap(),
    );
    let circ = dir.path().join("c.json");
    assert_eq!(
        code(&run(&["synthesize", "--phases", s(&b), "--out", s(&circ)])),
        0
    );
    let res = run(&["verify", "--phases", s(&a), "--circuit", s(&circ)]);
    assert_eq!(code(&res), 1);
    assert!(stdout_json(&res)["reconstruction_error"].as_f64().unwrap() > 0.1);

    // wrong size is an input error
    let small = write(
        dir.path(),
        "s.json",
        r#"{"num_qubits": 1, "phases": [0, 0]}"#,
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "--phases",
            s(&small),
            "--circuit",
            s(&circ)
        ])),
        2
    );
}

#[test]
fn analyze_states() {
    let dir = tempdir().unwrap();
    let ghz = write_state(dir.path(), "ghz.json", &StateVector::ghz(3).unwrap());
    let res = run(&["analyze", "--state", s(&ghz)]);
    assert_eq!(code(&res), 1);
    let v = stdout_json(&res);
    assert_eq!(v["verdict"], "entangled");
    assert!((v["max_residual"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(v["tolerance"], 1e-8);
    assert_eq!(
        v["violations"][0],
        serde_json::json!({"j": 0, "x": 0, "y": 7, "residual": v["violations"][0]["residual"]})
    );

    let zero = write(
        dir.path(),
        "z.json",
        r#"{"num_qubits": 1, "amplitudes": [[0, 0], [0, 0]]}"#,
    );
    assert_eq!(code(&run(&["analyze", "--state", s(&zero)])), 2);
}

#[test]
fn analyze_phases() {
    let dir = tempdir().unwrap();
    let add = write_phases(
        dir.path(),
        "a.json",
        &PhaseProfile::additive(&[0.4, -1.3, 2.2]).unwrap(),
    );
    let res = run(&["analyze", "--phases", s(&add)]);
    assert_eq!(code(&res), 0);
    assert_eq!(stdout_json(&res)["verdict"], "product");

    let cz = write_phases(
        dir.path(),
        "cz.json",
        &PhaseProfile::new(vec![0.0, 0.0, 0.0, PI]).unwrap(),
    );
    assert_eq!(code(&run(&["analyze", "--phases", s(&cz)])), 1);
    assert_eq!(
        code(&run(&["analyze", "--phases", s(&cz), "--no-prefactor"])),
        1
    );
    assert_eq!(
        code(&run(&[
            "analyze",
            "--phases",
            s(&cz),
            "--prefactor",
            "--tol",
            "0.6"
        ])),
        0
    );
}

#[test]
fn analyze_requires_exactly_one_input() {
    let dir = tempdir().unwrap();
    let p = write_phases(
        dir.path(),
        "p.json",
        &PhaseProfile::new(vec![0.0; 4]).unwrap(),
    );
    assert_eq!(code(&run(&["analyze"])), 2);
    assert_eq!(
        code(&run(&["analyze", "--phases", s(&p), "--state", s(&p)])),
        2
    );
}

#[test]
fn analyze_writes_report_file() {
    let dir = tempdir().unwrap();
    let ghz = write_state(dir.path(), "ghz.json", &StateVector::ghz(2).unwrap());
    let out = dir.path().join("r.json");
    let res = run(&["analyze", "--state", s(&ghz), "--out", s(&out)]);
    assert_eq!(code(&res), 1);
    assert!(res.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["verdict"], "entangled");
}

#[test]
fn entangle_examples() {
    let dir = tempdir().unwrap();
    let cases = [
        (r#"[[1, 0], [0, 1], [0, -1], [-1, 0]]"#, true),
        (r#"[[1, 0], [1, 0], [1, 0], [-1, 0]]"#, true),
        (r#"[[0.5, 0], [0.5, 0], [0.5, 0], [-0.5, 0]]"#, false),
    ];
    for (k, (amps, unitary)) in cases.iter().enumerate() {
        let alpha = write(
            dir.path(),
            &format!("a{k}.json"),
            &format!(r#"{{"num_qubits": 2, "amplitudes": {amps}}}"#),
        );
        let out = dir.path().join(format!("s{k}.json"));
        let res = run(&["entangle", "--alpha", s(&alpha), "--out", s(&out)]);
        assert_eq!(code(&res), 0);
        let report = stdout_json(&res);
        assert_eq!(report["r_unitary"], *unitary, "case {k}");
        assert_eq!(report["tau_is_diag_alpha"], true);
        let state: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        let want: serde_json::Value = serde_json::from_str(amps).unwrap();
        let got: Vec<[f64; 2]> = serde_json::from_value(state["amplitudes"].clone()).unwrap();
        let want: Vec<[f64; 2]> = serde_json::from_value(want).unwrap();
        assert_eq!(got, want);
    }
    let bad = write(dir.path(), "bad.json", r#"{"num_qubits": 2}"#);
    assert_eq!(
        code(&run(&[
            "entangle",
            "--alpha",
            s(&bad),
            "--out",
            s(&dir.path().join("x.json"))
        ])),
        2
    );
}

#[test]
fn sample_examples() {
    let res = run(&[
        "sample", "--qubits", "3", "--trials", "1000", "--seed", "42",
    ]);
    assert_eq!(code(&res), 0);
    let v = stdout_json(&res);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["agreements"], 1000);
    assert!(v["entangled_count"].as_u64().unwrap() >= 999);

    let res = run(&["sample", "--qubits", "1", "--trials", "100", "--seed", "7"]);
    assert_eq!(code(&res), 0);
    assert_eq!(stdout_json(&res)["entangled_count"], 0);

    assert_eq!(
        code(&run(&[
            "sample", "--qubits", "11", "--trials", "10", "--seed", "1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "sample", "--qubits", "0", "--trials", "10", "--seed", "1"
        ])),
        2
    );
    // seed is mandatory
    assert_eq!(
        code(&run(&["sample", "--qubits", "2", "--trials", "10"])),
        2
    );
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempdir().unwrap();
    let p: PhaseProfile = random_profile(4, &mut trial_rng(9, 0)).unwrap();
    let phases = write_phases(dir.path(), "p.json", &p);
    let a = run(&["analyze", "--phases", s(&phases)]);
    let b = run(&["analyze", "--phases", s(&phases)]);
    assert_eq!(a.stdout, b.stdout);
    let c1 = dir.path().join("c1.json");
    let c2 = dir.path().join("c2.json");
    run(&["synthesize", "--phases", s(&phases), "--out", s(&c1)]);
    run(&["synthesize", "--phases", s(&phases), "--out", s(&c2)]);
    assert_eq!(std::fs::read(&c1).unwrap(), std::fs::read(&c2).unwrap());
}

#[test]
fn max_qubits_env_override() {
    let dir = tempdir().unwrap();
    let p = write_phases(
        dir.path(),
        "p.json",
        &PhaseProfile::new(vec![0.0; 16]).unwrap(),
    );
    let res = bin()
        .env("ENTANGLER_MAX_QUBITS", "3")
        .args(["analyze", "--phases", s(&p)])
        .output()
        .unwrap();
    assert_eq!(code(&res), 2);
    let res = bin()
        .env("ENTANGLER_MAX_QUBITS", "4")
        .args(["analyze", "--phases", s(&p)])
        .output()
        .unwrap();
    assert_eq!(code(&res), 0);
    let res = bin()
        .env("ENTANGLER_MAX_QUBITS", "lots")
        .args(["analyze", "--phases", s(&p)])
        .output()
        .unwrap();
    assert_eq!(code(&res), 2);

    let eleven = write_phases(
        dir.path(),
        "p11.json",
        &PhaseProfile::new(vec![0.0; 2048]).unwrap(),
    );
    assert_eq!(code(&run(&["verify", "--phases", s(&eleven)])), 2);
}
