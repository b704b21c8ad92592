use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use serde_json::json;

use phase_entangler::format::{parse_phases_with_limit, parse_state_with_limit, state_to_json};
use phase_entangler::separability::{consistency_experiment, kernel_output};
use phase_entangler::synthesis::parse_circuit_with_limit;
use phase_entangler::{
    apply_r_to_plus, build_r, compose_circuit, decompose, emit_circuit, is_fully_product,
    is_unitary, make_selective_kernel, max_abs_diff, r_unitarity_check, tau, DenseMatrix,
    PhaseProfile,
};

use crate::output::{emit, write_atomic};

pub const MAX_QUBITS_ENV: &str = "ENTANGLER_MAX_QUBITS";
pub const DEFAULT_CLI_MAX_QUBITS: usize = 10;
pub const VERIFY_TOL: f64 = 1e-12;
pub const UNITARY_TOL: f64 = 1e-10;
const TAU_TOL: f64 = 1e-15;

pub fn max_qubits() -> Result<usize> {
    match std::env::var(MAX_QUBITS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_QUBITS_ENV}={v:?} is not a qubit count")),
        Err(_) => Ok(DEFAULT_CLI_MAX_QUBITS),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_phases(path: &Path, max_qubits: usize) -> Result<PhaseProfile> {
    parse_phases_with_limit(&read(path)?, max_qubits)
        .with_context(|| format!("in {}", path.display()))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

pub fn synthesize(phases: &Path, out: &Path, max_qubits: usize) -> Result<u8> {
    let profile = load_phases(phases, max_qubits)?;
    write_atomic(out, &emit_circuit(&decompose(&profile)))?;
    Ok(0)
}

pub fn verify(
    phases: &Path,
    circuit: Option<&Path>,
    tol: f64,
    out: Option<&Path>,
    max_qubits: usize,
) -> Result<u8> {
    let profile = load_phases(phases, max_qubits)?;
    let circ = match circuit {
        Some(path) => parse_circuit_with_limit(&read(path)?, max_qubits)
            .with_context(|| format!("in {}", path.display()))?,
        None => decompose(&profile),
    };
    ensure!(
        circ.num_qubits() == profile.num_qubits(),
        "circuit has {} qubits but the phase profile has {}",
        circ.num_qubits(),
        profile.num_qubits()
    );
    let kernel: DenseMatrix = make_selective_kernel(&profile, false).to_dense();
    let rebuilt = compose_circuit(&circ);
    let error = max_abs_diff(&rebuilt, &kernel)?;
    let kernel_unitary = is_unitary(&kernel, tol);
    let blocks_unitary = circ.blocks_unitary(tol);
    emit(
        out,
        &pretty(&json!({
            "reconstruction_error": error,
            "kernel_unitary": kernel_unitary,
            "blocks_unitary": blocks_unitary,
        })),
    )?;
    Ok(if error <= tol && kernel_unitary && blocks_unitary {
        0
    } else {
        1
    })
}

pub enum AnalyzeInput {
    State(PathBuf),
    Phases { path: PathBuf, prefactor: bool },
}

pub fn analyze(
    input: &AnalyzeInput,
    tol: f64,
    out: Option<&Path>,
    max_qubits: usize,
) -> Result<u8> {
    ensure!(
        tol.is_finite() && tol >= 0.0,
        "--tol must be a finite non-negative number"
    );
    let state = match input {
        AnalyzeInput::State(path) => parse_state_with_limit(&read(path)?, max_qubits)
            .with_context(|| format!("in {}", path.display()))?,
        AnalyzeInput::Phases { path, prefactor } => {
            kernel_output(&load_phases(path, max_qubits)?, *prefactor)
        }
    };
    if state.is_zero() {
        bail!("the state is the zero vector");
    }
    let report = is_fully_product(&state, tol)?;
    emit(out, &report.to_json())?;
    Ok(if report.is_product() { 0 } else { 1 })
}

pub fn entangle(alpha: &Path, out: &Path, tol: f64, max_qubits: usize) -> Result<u8> {
    let coeffs = parse_state_with_limit::<f64>(&read(alpha)?, max_qubits)
        .with_context(|| format!("in {}", alpha.display()))?
        .into_amplitudes();
    let r = build_r(coeffs.clone())?;
    let state = apply_r_to_plus(&r);
    let tau_diff = max_abs_diff(&tau(coeffs.clone())?, &DenseMatrix::from_diagonal(&coeffs)?)?;
    let report = pretty(&json!({
        "r_unitary": r_unitarity_check(&r, tol),
        "tau_is_diag_alpha": tau_diff <= TAU_TOL,
    }));
    write_atomic(out, &state_to_json(&state))?;
    emit(None, &report)?;
    Ok(0)
}

pub fn sample(
    qubits: usize,
    trials: usize,
    seed: u64,
    out: Option<&Path>,
    max_qubits: usize,
) -> Result<u8> {
    ensure!(
        (1..=max_qubits).contains(&qubits),
        "--qubits {qubits} is outside 1..={max_qubits}"
    );
    ensure!(trials >= 1, "--trials must be at least 1");
    let summary = consistency_experiment(qubits, trials, seed)?;
    emit(out, &serde_json::to_string_pretty(&summary)?)?;
    Ok(if summary.disagreements == 0 { 0 } else { 1 })
}
