//! Selective phase rotation entanglers for m-qubit registers.
//!
//! The crate builds diagonal phase kernels `diag(e^{i phi_x})`, factors them
//! exactly into value-controlled single-qubit phase gates, builds the
//! diagonal plus anti-diagonal entangler `R` and its swap companion `P`, and
//! decides whether a pure state is fully separable through the Segre quadric
//! minors, cross-checked by a flattening-rank oracle.
//!
//! Everything is generic over the real scalar ([`Real`], implemented for
//! `f32` and `f64`). Types default to `f64`; `*F32` aliases are provided for
//! single precision. Basis index bit `j` is qubit `j`, qubit `m - 1` most
//! significant.

pub mod entangler;
pub mod error;
pub mod format;
pub mod matrix;
pub mod scalar;
pub mod separability;
pub mod state;
pub mod synthesis;
pub mod transform;

pub use entangler::{
    apply_r_to_plus, build_p, build_r, r_unitarity_check, tau, EntanglerR, GeneralizedSwap,
};
pub use error::{Error, Result};
pub use matrix::{apply_matrix, dagger, is_unitary, matrix_product, max_abs_diff, DenseMatrix};
pub use scalar::Real;
pub use separability::{
    consistency_experiment, entangles, enumerate_quadrics, flattening, is_fully_product,
    oracle_is_product, phase_condition, segre_minor, ExperimentSummary, QuadricIndex, SegreReport,
    Verdict,
};
pub use state::{kron, plus_product_state, BasisIndex, StateVector};
pub use synthesis::{
    block_matrix, compose_circuit, decompose, emit_circuit, parse_circuit, CircuitDescription,
    ControlledPhaseBlock,
};
pub use transform::{
    apply_selective, dit_apply, dit_invert, make_selective_kernel, Kernel, PhaseProfile,
    SelectivePhaseKernel,
};

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;

pub type StateVectorF64 = StateVector<f64>;
pub type StateVectorF32 = StateVector<f32>;
pub type DenseMatrixF64 = DenseMatrix<f64>;
pub type DenseMatrixF32 = DenseMatrix<f32>;
pub type PhaseProfileF64 = PhaseProfile<f64>;
pub type PhaseProfileF32 = PhaseProfile<f32>;
pub type KernelF64 = Kernel<f64>;
pub type KernelF32 = Kernel<f32>;
pub type SelectivePhaseKernelF64 = SelectivePhaseKernel<f64>;
pub type SelectivePhaseKernelF32 = SelectivePhaseKernel<f32>;
pub type CircuitF64 = CircuitDescription<f64>;
pub type CircuitF32 = CircuitDescription<f32>;
pub type EntanglerRF64 = EntanglerR<f64>;
pub type EntanglerRF32 = EntanglerR<f32>;
pub type SegreReportF64 = SegreReport<f64>;
pub type SegreReportF32 = SegreReport<f32>;
