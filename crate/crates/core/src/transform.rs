//! Discrete integral transforms and the selective phase rotation kernel.
//!
//! A kernel `K` maps `f` to `f~(y) = sum_x K(x, y) f(x)`: the row index of the
//! kernel is the *source* basis label. For the diagonal kernels used elsewhere
//! in the crate this coincides with the ordinary matrix-vector product.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{dagger, is_zero, unitarity_residual, DenseMatrix};
use crate::scalar::{inv_sqrt_pow2, Real};
use crate::state::{qubits_for_len, StateVector, DEFAULT_MAX_QUBITS};

/// Unitarity tolerance required before a kernel is inverted.
pub const INVERT_TOL: f64 = 1e-10;

/// Real phases `phi_x` for every basis label, in radians, stored unreduced.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseProfile<T: Real = f64> {
    num_qubits: usize,
    phases: Vec<T>,
}

impl<T: Real> PhaseProfile<T> {
    pub fn new(phases: Vec<T>) -> Result<Self> {
        Self::with_limit(phases, DEFAULT_MAX_QUBITS)
    }

    pub fn with_limit(phases: Vec<T>, max_qubits: usize) -> Result<Self> {
        let num_qubits = qubits_for_len(phases.len(), max_qubits)?;
        if let Some(pos) = phases.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { num_qubits, phases })
    }

    /// `phi_x = sum_j coeffs[j] * x_j`; such profiles never entangle.
    pub fn additive(coeffs: &[T]) -> Result<Self> {
        let m = coeffs.len();
        crate::state::check_qubits(m, DEFAULT_MAX_QUBITS)?;
        let phases = (0..1usize << m)
            .map(|x| {
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| (x >> j) & 1 == 1)
                    .fold(T::zero(), |acc, (_, &c)| acc + c)
            })
            .collect();
        Self::new(phases)
    }

    /// Profile that is zero everywhere except `phase` on `|1...1>`.
    pub fn single_top(num_qubits: usize, phase: T) -> Result<Self> {
        crate::state::check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        let mut phases = vec![T::zero(); 1 << num_qubits];
        *phases.last_mut().expect("nonempty") = phase;
        Self::new(phases)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn phases(&self) -> &[T] {
        &self.phases
    }

    #[inline]
    pub fn phase(&self, x: usize) -> T {
        self.phases[x]
    }

    pub fn negated(&self) -> Self {
        Self {
            num_qubits: self.num_qubits,
            phases: self.phases.iter().map(|&p| -p).collect(),
        }
    }

    /// Pointwise sum of two profiles of the same size.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.phases.len() != other.phases.len() {
            return Err(Error::Shape {
                expected: self.phases.len(),
                found: other.phases.len(),
            });
        }
        Ok(Self {
            num_qubits: self.num_qubits,
            phases: self
                .phases
                .iter()
                .zip(&other.phases)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    /// `e^{i phi_x}` for every `x`.
    pub fn unit_phases(&self) -> Vec<Complex<T>> {
        self.phases.iter().map(|&p| Complex::cis(p)).collect()
    }
}

/// General kernel of a discrete integral transform, `K(x, y)` at row `x`,
/// column `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel<T: Real = f64> {
    matrix: DenseMatrix<T>,
}

impl<T: Real> Kernel<T> {
    pub fn new(matrix: DenseMatrix<T>) -> Result<Self> {
        qubits_for_len(matrix.dim(), DEFAULT_MAX_QUBITS)?;
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DenseMatrix<T> {
        self.matrix
    }
}

/// `f~(y) = sum_x K(x, y) f(x)`.
pub fn dit_apply<T: Real>(k: &Kernel<T>, f: &StateVector<T>) -> Result<StateVector<T>> {
    let n = k.matrix.dim();
    if n != f.dim() {
        return Err(Error::Shape {
            expected: n,
            found: f.dim(),
        });
    }
    let mut out = vec![Complex::new(T::zero(), T::zero()); n];
    for (x, &fx) in f.amplitudes().iter().enumerate() {
        for (o, kxy) in out.iter_mut().zip(k.matrix.row(x)) {
            if !is_zero(kxy) {
                *o += *kxy * fx;
            }
        }
    }
    Ok(StateVector::from_parts_unchecked(f.num_qubits(), out))
}

/// Recovers `f` from `f~` with the kernel `K^dagger`; requires a unitary kernel.
pub fn dit_invert<T: Real>(k: &Kernel<T>, ftilde: &StateVector<T>) -> Result<StateVector<T>> {
    if k.matrix.dim() != ftilde.dim() {
        return Err(Error::Shape {
            expected: k.matrix.dim(),
            found: ftilde.dim(),
        });
    }
    let residual = unitarity_residual(&k.matrix);
    // negated so a NaN residual is rejected
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(residual <= T::lit(INVERT_TOL)) {
        return Err(Error::NotInvertible {
            residual: residual.as_f64(),
        });
    }
    let inverse = Kernel {
        matrix: dagger(&k.matrix),
    };
    dit_apply(&inverse, ftilde)
}

/// `prefactor * diag(e^{i phi_0}, ..., e^{i phi_{2^m - 1}})`.
///
/// With `prefactor = 2^{-m/2}` the kernel maps the unnormalised plus product
/// to a unit vector; with `prefactor = 1` it is unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct SelectivePhaseKernel<T: Real = f64> {
    phases: PhaseProfile<T>,
    prefactor: T,
}

impl<T: Real> SelectivePhaseKernel<T> {
    pub fn phases(&self) -> &PhaseProfile<T> {
        &self.phases
    }

    pub fn prefactor(&self) -> T {
        self.prefactor
    }

    pub fn num_qubits(&self) -> usize {
        self.phases.num_qubits()
    }

    /// Diagonal entries `prefactor * e^{i phi_x}`.
    pub fn diagonal(&self) -> Vec<Complex<T>> {
        self.phases
            .phases()
            .iter()
            .map(|&p| Complex::cis(p) * self.prefactor)
            .collect()
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        DenseMatrix::from_diagonal(&self.diagonal()).expect("finite phases")
    }

    pub fn to_kernel(&self) -> Kernel<T> {
        Kernel {
            matrix: self.to_dense(),
        }
    }
}

pub fn make_selective_kernel<T: Real>(
    phases: &PhaseProfile<T>,
    include_prefactor: bool,
) -> SelectivePhaseKernel<T> {
    let prefactor = if include_prefactor {
        inv_sqrt_pow2(phases.num_qubits())
    } else {
        T::one()
    };
    SelectivePhaseKernel {
        phases: phases.clone(),
        prefactor,
    }
}

/// Diagonal fast path: component `y` becomes `prefactor e^{i phi_y} f(y)`.
pub fn apply_selective<T: Real>(
    k: &SelectivePhaseKernel<T>,
    f: &StateVector<T>,
) -> Result<StateVector<T>> {
    if k.phases.phases().len() != f.dim() {
        return Err(Error::Shape {
            expected: k.phases.phases().len(),
            found: f.dim(),
        });
    }
    let out = k
        .diagonal()
        .into_iter()
        .zip(f.amplitudes())
        .map(|(d, &fy)| d * fy)
        .collect();
    Ok(StateVector::from_parts_unchecked(f.num_qubits(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn identity_kernel_is_identity() {
        let k = Kernel::new(DenseMatrix::identity(4).unwrap()).unwrap();
        let f = StateVector::from_amplitudes(vec![
            c(1.0, 2.0),
            c(-0.5, 0.0),
            c(0.0, 3.0),
            c(7.0, -1.0),
        ])
        .unwrap();
        assert_eq!(dit_apply(&k, &f).unwrap(), f);
        assert_eq!(dit_invert(&k, &f).unwrap(), f);
    }

    #[test]
    fn selective_sign_flip() {
        let p = PhaseProfile::new(vec![0.0, PI]).unwrap();
        let k = make_selective_kernel(&p, false).to_kernel();
        let f = StateVector::from_real(&[0.6, 0.8]).unwrap();
        let out = dit_apply(&k, &f).unwrap();
        let want = StateVector::from_real(&[0.6, -0.8]).unwrap();
        assert!(out.max_abs_diff(&want).unwrap() < 1e-15);
    }

    #[test]
    fn uniform_kernel_against_direct_sum() {
        let k = Kernel::new(DenseMatrix::from_fn(4, |_, _| c(0.5, 0.0)).unwrap()).unwrap();
        let f = StateVector::from_real(&[1.0; 4]).unwrap();
        let out = dit_apply(&k, &f).unwrap();
        // direct summation: f~(y) = sum over four x of 1/2 * 1
        let oracle: f64 = (0..4).map(|_| 0.5 * 1.0).sum();
        assert_eq!(oracle, 2.0);
        assert!(out.amplitudes().iter().all(|&z| z == c(oracle, 0.0)));
    }

    #[test]
    fn kernel_index_convention_is_row_source() {
        // K(0, 1) = 1: amplitude of |0> is sent to |1>.
        let k = Kernel::new(
            DenseMatrix::new(2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap(),
        )
        .unwrap();
        let f = StateVector::from_real(&[1.0, 0.0]).unwrap();
        assert_eq!(
            dit_apply(&k, &f).unwrap(),
            StateVector::from_real(&[0.0, 1.0]).unwrap()
        );
    }

    #[test]
    fn invert_conjugates_phases() {
        let p = PhaseProfile::new(vec![0.4, 1.1]).unwrap();
        let k = make_selective_kernel(&p, false).to_kernel();
        let g = StateVector::from_amplitudes(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let f = dit_invert(&k, &g).unwrap();
        let want = StateVector::from_amplitudes(vec![
            Complex::cis(-0.4),
            c(0.0, 1.0) * Complex::cis(-1.1),
        ])
        .unwrap();
        assert!(f.max_abs_diff(&want).unwrap() < 1e-15);
    }

    #[test]
    fn invert_rejects_non_unitary() {
        let p = PhaseProfile::new(vec![0.0; 4]).unwrap();
        let k = make_selective_kernel(&p, true).to_kernel();
        let g = StateVector::from_real(&[1.0; 4]).unwrap();
        assert!(matches!(
            dit_invert(&k, &g),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn make_kernel_examples() {
        let (a, b) = (0.3, -2.1);
        let k = make_selective_kernel(&PhaseProfile::new(vec![a, b]).unwrap(), false);
        let d = k.to_dense();
        assert_eq!(d.get(0, 0), Complex::cis(a));
        assert_eq!(d.get(1, 1), Complex::cis(b));
        assert_eq!(d.get(0, 1), c(0.0, 0.0));

        let k = make_selective_kernel(&PhaseProfile::new(vec![0.0; 4]).unwrap(), true);
        let half_id = DenseMatrix::from_diagonal(&[c(0.5, 0.0); 4]).unwrap();
        assert_eq!(k.to_dense(), half_id);

        let phases: Vec<f64> = (0..8).map(|x| 0.37 * x as f64 - 1.0).collect();
        let k = make_selective_kernel(&PhaseProfile::new(phases.clone()).unwrap(), true);
        let d = k.to_dense();
        for (x, &p) in phases.iter().enumerate() {
            assert!((d.get(x, x) - Complex::cis(p) / 8f64.sqrt()).norm() < 1e-16);
        }
        assert_eq!(d.count_nonzero(), 8);
    }

    #[test]
    fn apply_selective_examples() {
        let k = make_selective_kernel(&PhaseProfile::new(vec![0.0, 0.0, 0.0, PI]).unwrap(), true);
        assert_eq!(k.prefactor(), 0.5);
        let f = StateVector::from_real(&[1.0; 4]).unwrap();
        let fast = apply_selective(&k, &f).unwrap();
        let want = StateVector::from_real(&[0.5, 0.5, 0.5, -0.5]).unwrap();
        assert!(fast.max_abs_diff(&want).unwrap() < 1e-16);
        let dense = dit_apply(&k.to_kernel(), &f).unwrap();
        assert!(fast.max_abs_diff(&dense).unwrap() <= 1e-15);

        let zero = make_selective_kernel(&PhaseProfile::new(vec![0.0; 4]).unwrap(), false);
        assert_eq!(apply_selective(&zero, &f).unwrap(), f);
    }

    #[test]
    fn profile_validation() {
        assert!(PhaseProfile::new(vec![0.0; 3]).is_err());
        assert!(PhaseProfile::new(vec![0.0, f64::NAN]).is_err());
        assert!(PhaseProfile::with_limit(vec![0.0; 32], 4).is_err());
        assert!(PhaseProfile::new(vec![0.0; 2])
            .unwrap()
            .add(&PhaseProfile::new(vec![0.0; 4]).unwrap())
            .is_err());
    }

    #[test]
    fn additive_profile_layout() {
        let p = PhaseProfile::additive(&[1.0, 10.0, 100.0]).unwrap();
        assert_eq!(
            p.phases(),
            &[0.0, 1.0, 10.0, 11.0, 100.0, 101.0, 110.0, 111.0]
        );
    }
}
