//! Diagonal plus anti-diagonal entangler `R`, the generalised swap `P`, and
//! the phase gate `tau = R P`.
//!
//! With `N = 2^m`, `R` holds `alpha_0` at `(0, 0)`, `alpha_{N-1}` at
//! `(N-1, N-1)` and `alpha_k` at `(k, N-1-k)` for every middle row. Read from
//! the bottom row upward, the anti-diagonal is `(0, alpha_{N-2}, ..., alpha_1, 0)`.
//! Both `R` and `P` share the row-to-column map `sigma`, so `R = diag(alpha) P`
//! and `R P = diag(alpha)` because `P` is an involution.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{matrix_product, DenseMatrix};
use crate::scalar::{is_finite_complex, Real};
use crate::state::{check_qubits, qubits_for_len, StateVector, DEFAULT_MAX_QUBITS};

/// Column holding the single nonzero of row `k` in both `R` and `P`.
#[inline]
fn sigma(k: usize, n: usize) -> usize {
    if k == 0 || k == n - 1 {
        k
    } else {
        n - 1 - k
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntanglerR<T: Real = f64> {
    num_qubits: usize,
    alpha: Vec<Complex<T>>,
}

impl<T: Real> EntanglerR<T> {
    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Complex<T>] {
        &self.alpha
    }

    /// Column of the nonzero entry in row `k`.
    pub fn column_of_row(&self, k: usize) -> usize {
        sigma(k, self.dim())
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.dim();
        let mut entries = vec![Complex::new(T::zero(), T::zero()); n * n];
        for (k, &a) in self.alpha.iter().enumerate() {
            entries[k * n + sigma(k, n)] = a;
        }
        DenseMatrix::new(n, entries).expect("finite coefficients")
    }
}

/// Permutation fixing `|0...0>` and `|1...1>` and reversing the basis order
/// in between. For two qubits this is the SWAP gate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralizedSwap {
    num_qubits: usize,
}

impl GeneralizedSwap {
    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    #[inline]
    pub fn sigma(&self, k: usize) -> usize {
        sigma(k, self.dim())
    }

    pub fn to_dense<T: Real>(&self) -> DenseMatrix<T> {
        let n = self.dim();
        let mut entries = vec![Complex::new(T::zero(), T::zero()); n * n];
        for k in 0..n {
            entries[k * n + sigma(k, n)] = Complex::new(T::one(), T::zero());
        }
        DenseMatrix::new(n, entries).expect("0/1 entries")
    }
}

/// Builds `R` from `2^m` coefficients, `m >= 1`.
pub fn build_r<T: Real>(alpha: Vec<Complex<T>>) -> Result<EntanglerR<T>> {
    let num_qubits = qubits_for_len(alpha.len(), DEFAULT_MAX_QUBITS)?;
    if let Some(pos) = alpha.iter().position(|z| !is_finite_complex(z)) {
        return Err(Error::NonFinite(pos));
    }
    Ok(EntanglerR { num_qubits, alpha })
}

pub fn build_p(num_qubits: usize) -> Result<GeneralizedSwap> {
    check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
    Ok(GeneralizedSwap { num_qubits })
}

/// `R P`, computed as a dense product. Equals `diag(alpha)`.
pub fn tau<T: Real>(alpha: Vec<Complex<T>>) -> Result<DenseMatrix<T>> {
    let r = build_r(alpha)?;
    let p = build_p(r.num_qubits)?;
    matrix_product(&r.to_dense(), &p.to_dense())
}

/// `R (|0> + |1>)^{(x)m}` with the unnormalised plus product; component `x`
/// is `alpha_x`.
pub fn apply_r_to_plus<T: Real>(r: &EntanglerR<T>) -> StateVector<T> {
    let n = r.dim();
    let plus = vec![Complex::new(T::one(), T::zero()); n];
    // one nonzero per row
    let amps = (0..n).map(|k| r.alpha[k] * plus[sigma(k, n)]).collect();
    StateVector::from_parts_unchecked(r.num_qubits, amps)
}

/// True iff `| |alpha_x|^2 - 1 | <= tol` for every `x`.
///
/// `R^dagger R = diag(|alpha_x|^2)` for this layout, so the verdict agrees
/// with a dense unitarity check at the same tolerance.
pub fn r_unitarity_check<T: Real>(r: &EntanglerR<T>, tol: T) -> bool {
    r.alpha
        .iter()
        .all(|a| (a.norm_sqr() - T::one()).abs() <= tol)
}
