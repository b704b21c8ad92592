//! Small dense complex matrices.
//!
//! Products skip structurally zero entries, so diagonal and permutation
//! operators cost `O(dim^2)` rather than `O(dim^3)` while keeping a single
//! dense representation.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{is_finite_complex, Real};
use crate::state::StateVector;

/// Largest dimension a [`DenseMatrix`] may have.
pub const MAX_DENSE_DIM: usize = 1 << 20;

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T: Real = f64> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DENSE_DIM {
        return Err(Error::InvalidSize(format!(
            "matrix dimension {dim} outside 1..={MAX_DENSE_DIM}"
        )));
    }
    Ok(())
}

impl<T: Real> DenseMatrix<T> {
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::Shape {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|z| !is_finite_complex(z)) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self> {
        check_dim(dim)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Self::new(dim, entries)
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for k in 0..dim {
            m.entries[k * dim + k] = Complex::new(T::one(), T::zero());
        }
        Ok(m)
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Result<Self> {
        let dim = diag.len();
        let mut m = Self::zeros(dim)?;
        for (k, &d) in diag.iter().enumerate() {
            m.entries[k * dim + k] = d;
        }
        if let Some(pos) = diag.iter().position(|z| !is_finite_complex(z)) {
            return Err(Error::NonFinite(pos));
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[Complex<T>] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.dim).map(|k| self.get(k, k)).collect()
    }

    /// Number of entries that are not exactly zero.
    pub fn count_nonzero(&self) -> usize {
        self.entries.iter().filter(|z| !is_zero(z)).count()
    }

    pub(crate) fn from_parts_unchecked(dim: usize, entries: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }
}

#[inline]
pub(crate) fn is_zero<T: Real>(z: &Complex<T>) -> bool {
    z.re == T::zero() && z.im == T::zero()
}

/// Standard matrix-vector product `M s`.
pub fn apply_matrix<T: Real>(m: &DenseMatrix<T>, s: &StateVector<T>) -> Result<StateVector<T>> {
    if m.dim != s.dim() {
        return Err(Error::Shape {
            expected: m.dim,
            found: s.dim(),
        });
    }
    let amps = s.amplitudes();
    let out = (0..m.dim)
        .map(|r| {
            m.row(r)
                .iter()
                .zip(amps)
                .filter(|(a, _)| !is_zero(*a))
                .fold(Complex::new(T::zero(), T::zero()), |acc, (&a, &x)| {
                    acc + a * x
                })
        })
        .collect();
    Ok(StateVector::from_parts_unchecked(s.num_qubits(), out))
}

pub fn matrix_product<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    if a.dim != b.dim {
        return Err(Error::Shape {
            expected: a.dim,
            found: b.dim,
        });
    }
    let n = a.dim;
    let mut out = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        let out_row = &mut out[i * n..(i + 1) * n];
        for (k, aik) in a.row(i).iter().enumerate() {
            if is_zero(aik) {
                continue;
            }
            for (o, bkj) in out_row.iter_mut().zip(b.row(k)) {
                if !is_zero(bkj) {
                    *o += *aik * *bkj;
                }
            }
        }
    }
    Ok(DenseMatrix::from_parts_unchecked(n, out))
}

/// Conjugate transpose.
pub fn dagger<T: Real>(a: &DenseMatrix<T>) -> DenseMatrix<T> {
    let n = a.dim;
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            out.push(a.get(c, r).conj());
        }
    }
    DenseMatrix::from_parts_unchecked(n, out)
}

pub fn max_abs_diff<T: Real>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<T> {
    if a.dim != b.dim {
        return Err(Error::Shape {
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .fold(T::zero(), |acc, (x, y)| acc.max((*x - *y).norm())))
}

/// `max |A^dagger A - I|`, the quantity thresholded by [`is_unitary`].
pub fn unitarity_residual<T: Real>(a: &DenseMatrix<T>) -> T {
    let gram = matrix_product(&dagger(a), a).expect("same dimension");
    let n = a.dim;
    let one = Complex::new(T::one(), T::zero());
    gram.entries
        .iter()
        .enumerate()
        .fold(T::zero(), |acc, (k, &g)| {
            let target = if k / n == k % n {
                one
            } else {
                Complex::new(T::zero(), T::zero())
            };
            acc.max((g - target).norm())
        })
}

pub fn is_unitary<T: Real>(a: &DenseMatrix<T>, tol: T) -> bool {
    unitarity_residual(a) <= tol
}
