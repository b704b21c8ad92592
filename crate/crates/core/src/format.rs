//! JSON files for amplitude vectors and phase profiles.
//!
//! Amplitudes: `{"num_qubits": m, "amplitudes": [[re, im], ...]}`.
//! Phases: `{"num_qubits": m, "phases": [phi_0, ...]}` in radians.
//! Both list `2^m` entries in basis order. Circuits and reports are handled
//! by their own modules.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::{StateVector, DEFAULT_MAX_QUBITS};
use crate::transform::PhaseProfile;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AmplitudeWire {
    num_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseWire {
    num_qubits: usize,
    phases: Vec<f64>,
}

fn check_count(field: &str, num_qubits: usize, len: usize, max_qubits: usize) -> Result<()> {
    if num_qubits == 0 || num_qubits > max_qubits {
        return Err(Error::parse(
            "num_qubits",
            format!("{num_qubits} is outside 1..={max_qubits}"),
        ));
    }
    if len != 1usize << num_qubits {
        return Err(Error::parse(
            field,
            format!(
                "expected {} entries for {num_qubits} qubits, found {len}",
                1usize << num_qubits
            ),
        ));
    }
    Ok(())
}

pub fn state_to_json<T: Real>(s: &StateVector<T>) -> String {
    let wire = AmplitudeWire {
        num_qubits: s.num_qubits(),
        amplitudes: s
            .amplitudes()
            .iter()
            .map(|z| [z.re.as_f64(), z.im.as_f64()])
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("state serializes")
}

pub fn parse_state<T: Real>(text: &str) -> Result<StateVector<T>> {
    parse_state_with_limit(text, DEFAULT_MAX_QUBITS)
}

pub fn parse_state_with_limit<T: Real>(text: &str, max_qubits: usize) -> Result<StateVector<T>> {
    let wire: AmplitudeWire = serde_json::from_str(text)?;
    check_count(
        "amplitudes",
        wire.num_qubits,
        wire.amplitudes.len(),
        max_qubits,
    )?;
    let amps = wire
        .amplitudes
        .iter()
        .map(|&[re, im]| Complex::new(T::lit(re), T::lit(im)))
        .collect();
    StateVector::from_amplitudes_with_limit(amps, max_qubits)
        .map_err(|e| Error::parse("amplitudes", e.to_string()))
}

pub fn phases_to_json<T: Real>(p: &PhaseProfile<T>) -> String {
    let wire = PhaseWire {
        num_qubits: p.num_qubits(),
        phases: p.phases().iter().map(|v| v.as_f64()).collect(),
    };
    serde_json::to_string_pretty(&wire).expect("phases serialize")
}

pub fn parse_phases<T: Real>(text: &str) -> Result<PhaseProfile<T>> {
    parse_phases_with_limit(text, DEFAULT_MAX_QUBITS)
}

pub fn parse_phases_with_limit<T: Real>(text: &str, max_qubits: usize) -> Result<PhaseProfile<T>> {
    let wire: PhaseWire = serde_json::from_str(text)?;
    check_count("phases", wire.num_qubits, wire.phases.len(), max_qubits)?;
    PhaseProfile::with_limit(wire.phases.into_iter().map(T::lit).collect(), max_qubits)
        .map_err(|e| Error::parse("phases", e.to_string()))
}
