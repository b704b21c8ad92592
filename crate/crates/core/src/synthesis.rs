//! Exact synthesis of a selective phase kernel into value-controlled gates.
//!
//! Block `i` of an m-qubit circuit fires when qubits `m-1..1`, read as an
//! integer, equal `i`, and then applies `U_i = diag(e^{i a}, e^{i b})` to
//! qubit 0. Block 0 is therefore the negated-control gate and the last block
//! the ordinary fully controlled one. The product of all `2^{m-1}` blocks is
//! `diag(e^{i phi_0}, ..., e^{i phi_{2^m - 1}})`.

use std::collections::BTreeSet;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Real;
use crate::state::{check_qubits, DEFAULT_MAX_QUBITS};
use crate::transform::PhaseProfile;

#[derive(Clone, Debug, PartialEq)]
pub struct ControlledPhaseBlock<T: Real = f64> {
    block_index: usize,
    num_qubits: usize,
    target_phases: [T; 2],
}

impl<T: Real> ControlledPhaseBlock<T> {
    pub fn new(block_index: usize, num_qubits: usize, target_phases: [T; 2]) -> Result<Self> {
        check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        let bound = 1usize << (num_qubits - 1);
        if block_index >= bound {
            return Err(Error::Index {
                index: block_index,
                bound,
            });
        }
        if let Some(pos) = target_phases.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self {
            block_index,
            num_qubits,
            target_phases,
        })
    }

    #[inline]
    pub fn block_index(&self) -> usize {
        self.block_index
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn target_phases(&self) -> [T; 2] {
        self.target_phases
    }

    /// Control register value on which the block fires.
    #[inline]
    pub fn control_value(&self) -> usize {
        self.block_index
    }

    /// Diagonal of the single-qubit target gate `U_i`.
    pub fn target_unitary(&self) -> [Complex<T>; 2] {
        [
            Complex::cis(self.target_phases[0]),
            Complex::cis(self.target_phases[1]),
        ]
    }

    /// Diagonal of the full `2^m x 2^m` block matrix.
    pub fn diagonal(&self) -> Vec<Complex<T>> {
        let mut diag = vec![Complex::new(T::one(), T::zero()); 1 << self.num_qubits];
        let [u0, u1] = self.target_unitary();
        diag[2 * self.block_index] = u0;
        diag[2 * self.block_index + 1] = u1;
        diag
    }

    /// Multiplier picked up by basis state `|x>`.
    pub fn factor_on(&self, x: usize) -> Complex<T> {
        if x >> 1 == self.block_index {
            Complex::cis(self.target_phases[x & 1])
        } else {
            Complex::new(T::one(), T::zero())
        }
    }
}

/// Ordered product of controlled blocks, leftmost first.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitDescription<T: Real = f64> {
    num_qubits: usize,
    blocks: Vec<ControlledPhaseBlock<T>>,
}

impl<T: Real> CircuitDescription<T> {
    /// Checks that every block has `num_qubits` qubits and a distinct index.
    pub fn new(num_qubits: usize, blocks: Vec<ControlledPhaseBlock<T>>) -> Result<Self> {
        check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.num_qubits != num_qubits {
                return Err(Error::Shape {
                    expected: num_qubits,
                    found: b.num_qubits,
                });
            }
            if !seen.insert(b.block_index) {
                return Err(Error::ContractViolation(format!(
                    "duplicate block_index {}",
                    b.block_index
                )));
            }
        }
        Ok(Self { num_qubits, blocks })
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    #[inline]
    pub fn blocks(&self) -> &[ControlledPhaseBlock<T>] {
        &self.blocks
    }

    pub fn reversed(&self) -> Self {
        Self {
            num_qubits: self.num_qubits,
            blocks: self.blocks.iter().rev().cloned().collect(),
        }
    }

    /// True when every block is unitary within `tol`, judged on its diagonal
    /// (`| |d|^2 - 1 |`, the same residual a dense check would see).
    pub fn blocks_unitary(&self, tol: T) -> bool {
        self.blocks.iter().all(|b| {
            b.target_unitary()
                .iter()
                .all(|d| (d.norm_sqr() - T::one()).abs() <= tol)
        })
    }
}

/// Splits the profile into `2^{m-1}` blocks; block `i` carries
/// `(phi_{2i}, phi_{2i+1})`.
pub fn decompose<T: Real>(phases: &PhaseProfile<T>) -> CircuitDescription<T> {
    let m = phases.num_qubits();
    let blocks = phases
        .phases()
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| ControlledPhaseBlock {
            block_index: i,
            num_qubits: m,
            target_phases: [pair[0], pair[1]],
        })
        .collect();
    CircuitDescription {
        num_qubits: m,
        blocks,
    }
}

pub fn block_matrix<T: Real>(b: &ControlledPhaseBlock<T>) -> DenseMatrix<T> {
    DenseMatrix::from_diagonal(&b.diagonal()).expect("finite phases")
}

/// Ordered product of the blocks' matrices.
///
/// All blocks are diagonal, so the product is accumulated on the diagonal and
/// realised densely at the end.
pub fn compose_circuit<T: Real>(c: &CircuitDescription<T>) -> DenseMatrix<T> {
    compose_blocks(c.num_qubits, &c.blocks).expect("validated circuit")
}

/// Like [`compose_circuit`] for an arbitrary block list; blocks of another
/// size are a shape error.
pub fn compose_blocks<T: Real>(
    num_qubits: usize,
    blocks: &[ControlledPhaseBlock<T>],
) -> Result<DenseMatrix<T>> {
    check_qubits(num_qubits, DEFAULT_MAX_QUBITS)?;
    let mut diag = vec![Complex::new(T::one(), T::zero()); 1 << num_qubits];
    for b in blocks {
        if b.num_qubits != num_qubits {
            return Err(Error::Shape {
                expected: num_qubits,
                found: b.num_qubits,
            });
        }
        let [u0, u1] = b.target_unitary();
        diag[2 * b.block_index] *= u0;
        diag[2 * b.block_index + 1] *= u1;
    }
    DenseMatrix::from_diagonal(&diag)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockWire {
    block_index: usize,
    target_phases: [f64; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitWire {
    num_qubits: usize,
    blocks: Vec<BlockWire>,
}

/// `{"num_qubits": m, "blocks": [{"block_index": i, "target_phases": [a, b]}, ...]}`
pub fn emit_circuit<T: Real>(c: &CircuitDescription<T>) -> String {
    let wire = CircuitWire {
        num_qubits: c.num_qubits,
        blocks: c
            .blocks
            .iter()
            .map(|b| BlockWire {
                block_index: b.block_index,
                target_phases: [b.target_phases[0].as_f64(), b.target_phases[1].as_f64()],
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("circuit serializes")
}

pub fn parse_circuit<T: Real>(text: &str) -> Result<CircuitDescription<T>> {
    parse_circuit_with_limit(text, DEFAULT_MAX_QUBITS)
}

pub fn parse_circuit_with_limit<T: Real>(
    text: &str,
    max_qubits: usize,
) -> Result<CircuitDescription<T>> {
    let wire: CircuitWire = serde_json::from_str(text)?;
    let m = wire.num_qubits;
    check_qubits(m, max_qubits).map_err(|e| Error::parse("num_qubits", e.to_string()))?;
    let bound = 1usize << (m - 1);
    let mut seen = BTreeSet::new();
    let mut blocks = Vec::with_capacity(wire.blocks.len());
    for (pos, b) in wire.blocks.into_iter().enumerate() {
        if b.block_index >= bound {
            return Err(Error::parse(
                format!("blocks[{pos}].block_index"),
                format!("{} is out of range 0..{bound}", b.block_index),
            ));
        }
        if !seen.insert(b.block_index) {
            return Err(Error::parse(
                format!("blocks[{pos}].block_index"),
                format!("duplicate block_index {}", b.block_index),
            ));
        }
        blocks.push(ControlledPhaseBlock {
            block_index: b.block_index,
            num_qubits: m,
            target_phases: [T::lit(b.target_phases[0]), T::lit(b.target_phases[1])],
        });
    }
    Ok(CircuitDescription {
        num_qubits: m,
        blocks,
    })
}
