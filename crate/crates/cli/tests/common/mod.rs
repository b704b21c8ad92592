#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use phase_entangler::format::{phases_to_json, state_to_json};
use phase_entangler::{PhaseProfile, StateVector};

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_entangler"));
    cmd.env_remove("ENTANGLER_MAX_QUBITS");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

pub fn write_phases(dir: &Path, name: &str, p: &PhaseProfile) -> PathBuf {
    write(dir, name, &phases_to_json(p))
}

pub fn write_state(dir: &Path, name: &str, s: &StateVector) -> PathBuf {
    write(dir, name, &state_to_json(s))
}

pub fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}
