//! Dense complex statevectors over the binary basis.
//!
//! Basis index bit `j` is the label of qubit `j`; qubit `m - 1` is the most
//! significant bit. Every other module relies on this ordering.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{inv_sqrt_pow2, is_finite_complex, Real};

/// Largest qubit count accepted by library constructors unless a caller
/// passes an explicit limit.
pub const DEFAULT_MAX_QUBITS: usize = 20;

/// A basis label `x = x_{m-1} 2^{m-1} + ... + x_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    value: usize,
    num_qubits: usize,
}

impl BasisIndex {
    pub fn new(value: usize, num_qubits: usize) -> Result<Self> {
        if num_qubits >= usize::BITS as usize {
            return Err(Error::InvalidSize(format!("{num_qubits} qubits")));
        }
        let bound = 1usize << num_qubits;
        if value >= bound {
            return Err(Error::Index {
                index: value,
                bound,
            });
        }
        Ok(Self { value, num_qubits })
    }

    #[inline]
    pub fn value(self) -> usize {
        self.value
    }

    #[inline]
    pub fn num_qubits(self) -> usize {
        self.num_qubits
    }

    /// Basis label of qubit `j`.
    #[inline]
    pub fn bit(self, j: usize) -> usize {
        (self.value >> j) & 1
    }

    /// Same index with qubit `j` relabelled to `b`.
    #[inline]
    pub fn with_bit(self, j: usize, b: usize) -> Self {
        let cleared = self.value & !(1 << j);
        Self {
            value: cleared | ((b & 1) << j),
            num_qubits: self.num_qubits,
        }
    }
}

/// Inserts bit `b` at position `j`, shifting the higher bits of `rest` up.
#[inline]
pub(crate) fn insert_bit(rest: usize, j: usize, b: usize) -> usize {
    let low = rest & ((1 << j) - 1);
    let high = (rest >> j) << (j + 1);
    high | ((b & 1) << j) | low
}

/// Number of qubits for a vector of `len` amplitudes, if `len = 2^m` with m >= 1.
pub(crate) fn qubits_for_len(len: usize, max_qubits: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidSize(format!(
            "length {len} is not a power of two >= 2"
        )));
    }
    let m = len.trailing_zeros() as usize;
    check_qubits(m, max_qubits)?;
    Ok(m)
}

pub(crate) fn check_qubits(m: usize, max_qubits: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidSize("qubit count must be at least 1".into()));
    }
    if m > max_qubits {
        return Err(Error::InvalidSize(format!(
            "{m} qubits exceeds the limit of {max_qubits}"
        )));
    }
    Ok(())
}

/// Pure state amplitudes `alpha_x`, `x` in `0..2^m`. Never implicitly normalised.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Real = f64> {
    num_qubits: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// Builds a state from `2^m` finite amplitudes.
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        Self::from_amplitudes_with_limit(amplitudes, DEFAULT_MAX_QUBITS)
    }

    pub fn from_amplitudes_with_limit(
        amplitudes: Vec<Complex<T>>,
        max_qubits: usize,
    ) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len(), max_qubits)?;
        if let Some(pos) = amplitudes.iter().position(|z| !is_finite_complex(z)) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn from_real(values: &[T]) -> Result<Self> {
        Self::from_amplitudes(values.iter().map(|&v| Complex::new(v, T::zero())).collect())
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        let idx = BasisIndex::new(index, num_qubits)?;
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); 1 << num_qubits];
        amplitudes[idx.value()] = Complex::new(T::one(), T::zero());
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Normalised GHZ state `(|0...0> + |1...1>)/sqrt(2)`.
    pub fn ghz(num_qubits: usize) -> Result<Self> {
        check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        let n = 1usize << num_qubits;
        let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); n];
        amplitudes[0] = h;
        amplitudes[n - 1] = h;
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    #[inline]
    pub fn amplitude(&self, x: usize) -> Complex<T> {
        self.amplitudes[x]
    }

    pub fn into_amplitudes(self) -> Vec<Complex<T>> {
        self.amplitudes
    }

    /// Euclidean norm.
    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes
            .iter()
            .all(|z| z.re == T::zero() && z.im == T::zero())
    }

    pub fn scaled(&self, c: Complex<T>) -> Self {
        Self {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|&z| z * c).collect(),
        }
    }

    /// Unit-norm copy; fails on the zero vector.
    pub fn normalized(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidState("zero vector".into()));
        }
        let inv = self.norm().recip();
        Ok(Self {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|&z| z * inv).collect(),
        })
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        if self.dim() != other.dim() {
            return Err(Error::Shape {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm())))
    }

    pub(crate) fn from_parts_unchecked(num_qubits: usize, amplitudes: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << num_qubits);
        Self {
            num_qubits,
            amplitudes,
        }
    }
}

/// `(|0> + |1>)^{(x)m}`, all ones, or all `2^{-m/2}` when `normalized`.
pub fn plus_product_state<T: Real>(num_qubits: usize, normalized: bool) -> Result<StateVector<T>> {
    plus_product_state_with_limit(num_qubits, normalized, DEFAULT_MAX_QUBITS)
}

pub fn plus_product_state_with_limit<T: Real>(
    num_qubits: usize,
    normalized: bool,
    max_qubits: usize,
) -> Result<StateVector<T>> {
    check_qubits(num_qubits, max_qubits)?;
    let value = if normalized {
        inv_sqrt_pow2::<T>(num_qubits)
    } else {
        T::one()
    };
    Ok(StateVector {
        num_qubits,
        amplitudes: vec![Complex::new(value, T::zero()); 1 << num_qubits],
    })
}

/// Tensor product `a (x) b`; `a` occupies the high qubits.
pub fn kron<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<StateVector<T>> {
    kron_with_limit(a, b, DEFAULT_MAX_QUBITS)
}

pub fn kron_with_limit<T: Real>(
    a: &StateVector<T>,
    b: &StateVector<T>,
    max_qubits: usize,
) -> Result<StateVector<T>> {
    let num_qubits = a.num_qubits + b.num_qubits;
    check_qubits(num_qubits, max_qubits)?;
    let mut amplitudes = Vec::with_capacity(a.dim() * b.dim());
    for &ax in &a.amplitudes {
        amplitudes.extend(b.amplitudes.iter().map(|&by| ax * by));
    }
    Ok(StateVector {
        num_qubits,
        amplitudes,
    })
}
