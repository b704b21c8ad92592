//! `entangler`: batch front end for phase-kernel synthesis and separability
//! analysis.
//!
//! Exit codes: 0 success, 1 negative result (verification failed, state
//! entangled, experiment disagreement), 2 bad input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

mod commands;
mod output;

#[derive(Parser, Debug)]
#[command(
    name = "entangler",
    version,
    about = "Selective phase entangler toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a phase profile into value-controlled phase gates.
    Synthesize {
        #[arg(long)]
        phases: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that a circuit reproduces the phase kernel.
    Verify {
        #[arg(long)]
        phases: PathBuf,
        /// Circuit to check instead of a fresh decomposition.
        #[arg(long)]
        circuit: Option<PathBuf>,
        #[arg(long, default_value_t = commands::VERIFY_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadric separability report. Exit 0 = product, 1 = entangled.
    #[command(group(ArgGroup::new("input").required(true).args(["state", "phases"])))]
    Analyze {
        #[arg(long)]
        state: Option<PathBuf>,
        /// Analyse the kernel output on the plus product state.
        #[arg(long)]
        phases: Option<PathBuf>,
        #[arg(long, default_value_t = phase_entangler::separability::VERDICT_TOL)]
        tol: f64,
        /// Include the 2^(-m/2) kernel prefactor (default).
        #[arg(long, overrides_with = "no_prefactor")]
        prefactor: bool,
        #[arg(long, overrides_with = "prefactor")]
        no_prefactor: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the entangler R built from an amplitude file to the plus product.
    Entangle {
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = commands::UNITARY_TOL)]
        tol: f64,
    },
    /// Seeded agreement experiment between the three entanglement verdicts.
    Sample {
        #[arg(long)]
        qubits: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::max_qubits().and_then(|max_qubits| match cli.command {
        Command::Synthesize { phases, out } => commands::synthesize(&phases, &out, max_qubits),
        Command::Verify {
            phases,
            circuit,
            tol,
            out,
        } => commands::verify(&phases, circuit.as_deref(), tol, out.as_deref(), max_qubits),
        Command::Analyze {
            state,
            phases,
            tol,
            prefactor: _,
            no_prefactor,
            out,
        } => {
            let input = match (state, phases) {
                (Some(s), None) => commands::AnalyzeInput::State(s),
                (None, Some(p)) => commands::AnalyzeInput::Phases {
                    path: p,
                    prefactor: !no_prefactor,
                },
                _ => unreachable!("clap enforces exactly one input"),
            };
            commands::analyze(&input, tol, out.as_deref(), max_qubits)
        }
        Command::Entangle { alpha, out, tol } => commands::entangle(&alpha, &out, tol, max_qubits),
        Command::Sample {
            qubits,
            trials,
            seed,
            out,
        } => commands::sample(qubits, trials, seed, out.as_deref(), max_qubits),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
