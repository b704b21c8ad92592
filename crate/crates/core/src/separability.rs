//! Full separability of pure multi-qubit states.
//!
//! A state is a product of single-qubit states exactly when every quadric
//!
//! ```text
//! alpha_x alpha_y - alpha_{x'} alpha_{y'}
//! ```
//!
//! vanishes, where `x'` and `y'` are `x` and `y` with their labels on one
//! qubit `j` exchanged. These are the 2x2 minors of the single-qubit
//! flattenings, i.e. the defining equations of the Segre variety.
//!
//! Two independent checks live here: [`is_fully_product`] evaluates the
//! quadrics, and [`oracle_is_product`] measures the rank of each flattening
//! through the eigenvalues of its 2x2 Gram matrix. For diagonal phase kernels
//! acting on the plus product, [`phase_condition`] decides the same question
//! directly from the phases.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::{check_qubits, insert_bit, plus_product_state, BasisIndex, StateVector};
use crate::transform::{apply_selective, make_selective_kernel, PhaseProfile};

/// Default verdict tolerance on unit-norm states.
pub const VERDICT_TOL: f64 = 1e-8;
/// Tolerance for states built explicitly as tensor products.
pub const PRODUCT_TOL: f64 = 1e-10;
/// Largest qubit count accepted by [`consistency_experiment`].
pub const MAX_EXPERIMENT_QUBITS: usize = 10;

/// One quadric: qubit `j` and a pair with `x_j = 0`, `y_j = 1` that also
/// differs on some other qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricIndex {
    j: usize,
    x: BasisIndex,
    y: BasisIndex,
}

impl QuadricIndex {
    pub fn new(j: usize, x: BasisIndex, y: BasisIndex) -> Result<Self> {
        let m = x.num_qubits();
        if y.num_qubits() != m {
            return Err(Error::Shape {
                expected: m,
                found: y.num_qubits(),
            });
        }
        if j >= m {
            return Err(Error::Index { index: j, bound: m });
        }
        if x.bit(j) != 0 || y.bit(j) != 1 {
            return Err(Error::ContractViolation(format!(
                "quadric on qubit {j} needs x_j = 0 and y_j = 1 (x = {}, y = {})",
                x.value(),
                y.value()
            )));
        }
        if (x.value() ^ y.value()) & !(1 << j) == 0 {
            return Err(Error::ContractViolation(format!(
                "x = {} and y = {} differ only on qubit {j}; the minor is identically zero",
                x.value(),
                y.value()
            )));
        }
        Ok(Self { j, x, y })
    }

    #[inline]
    pub fn qubit(&self) -> usize {
        self.j
    }

    #[inline]
    pub fn x(&self) -> BasisIndex {
        self.x
    }

    #[inline]
    pub fn y(&self) -> BasisIndex {
        self.y
    }

    /// `(x', y')`: `x` carrying `y_j`, `y` carrying `x_j`.
    pub fn exchanged(&self) -> (BasisIndex, BasisIndex) {
        (self.x.with_bit(self.j, 1), self.y.with_bit(self.j, 0))
    }
}

/// Canonical quadrics in deterministic order: by qubit `j`, then by the
/// `(m-1)`-bit contexts `cx < cy` of `x` and `y` on the remaining qubits.
pub fn quadrics(num_qubits: usize) -> impl Iterator<Item = QuadricIndex> {
    let contexts = if num_qubits == 0 {
        0
    } else {
        1usize << (num_qubits - 1)
    };
    (0..num_qubits).flat_map(move |j| {
        (0..contexts).flat_map(move |cx| {
            (cx + 1..contexts).map(move |cy| QuadricIndex {
                j,
                x: BasisIndex::new(insert_bit(cx, j, 0), num_qubits).expect("in range"),
                y: BasisIndex::new(insert_bit(cy, j, 1), num_qubits).expect("in range"),
            })
        })
    })
}

pub fn enumerate_quadrics(num_qubits: usize) -> Vec<QuadricIndex> {
    quadrics(num_qubits).collect()
}

#[inline]
fn minor_unchecked<T: Real>(amps: &[Complex<T>], q: &QuadricIndex) -> Complex<T> {
    let (xe, ye) = q.exchanged();
    amps[q.x.value()] * amps[q.y.value()] - amps[xe.value()] * amps[ye.value()]
}

/// `alpha_x alpha_y - alpha_{x'} alpha_{y'}`.
pub fn segre_minor<T: Real>(s: &StateVector<T>, q: &QuadricIndex) -> Result<Complex<T>> {
    if q.x.num_qubits() != s.num_qubits() {
        return Err(Error::Shape {
            expected: s.num_qubits(),
            found: q.x.num_qubits(),
        });
    }
    Ok(minor_unchecked(s.amplitudes(), q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Product,
    Entangled,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation<T: Real = f64> {
    pub quadric: QuadricIndex,
    pub residual: T,
}

/// Outcome of the quadric test. `verdict` is `Product` iff `violations` is
/// empty iff `max_residual <= tolerance`.
#[derive(Clone, Debug, PartialEq)]
pub struct SegreReport<T: Real = f64> {
    pub verdict: Verdict,
    pub max_residual: T,
    pub violations: Vec<Violation<T>>,
    pub tolerance: T,
}

#[derive(Serialize)]
struct ViolationWire {
    j: usize,
    x: usize,
    y: usize,
    residual: f64,
}

#[derive(Serialize)]
struct ReportWire {
    verdict: Verdict,
    max_residual: f64,
    tolerance: f64,
    violations: Vec<ViolationWire>,
}

impl<T: Real> SegreReport<T> {
    pub fn is_product(&self) -> bool {
        self.verdict == Verdict::Product
    }

    /// `{"verdict", "max_residual", "tolerance", "violations": [{"j", "x", "y", "residual"}]}`
    pub fn to_json(&self) -> String {
        let wire = ReportWire {
            verdict: self.verdict,
            max_residual: self.max_residual.as_f64(),
            tolerance: self.tolerance.as_f64(),
            violations: self
                .violations
                .iter()
                .map(|v| ViolationWire {
                    j: v.quadric.j,
                    x: v.quadric.x.value(),
                    y: v.quadric.y.value(),
                    residual: v.residual.as_f64(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&wire).expect("report serializes")
    }
}

/// Evaluates every canonical quadric on `s / |s|`.
pub fn is_fully_product<T: Real>(s: &StateVector<T>, tol: T) -> Result<SegreReport<T>> {
    let unit = s.normalized()?;
    let amps = unit.amplitudes();
    let mut max_residual = T::zero();
    let mut violations = Vec::new();
    for q in quadrics(s.num_qubits()) {
        let residual = minor_unchecked(amps, &q).norm();
        max_residual = max_residual.max(residual);
        if residual > tol {
            violations.push(Violation {
                quadric: q,
                residual,
            });
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::Product
    } else {
        Verdict::Entangled
    };
    Ok(SegreReport {
        verdict,
        max_residual,
        violations,
        tolerance: tol,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhaseCondition<T: Real = f64> {
    /// Some quadric is violated, so the kernel entangles the plus product.
    pub holds: bool,
    /// Every violated quadric with `|e^{i(phi_x + phi_y)} - e^{i(phi_x' + phi_y')}|`.
    pub witnesses: Vec<Violation<T>>,
}

/// Phase form of the quadric test, compared on the unit circle so that sums
/// differing by multiples of `2 pi` count as equal.
pub fn phase_condition<T: Real>(phases: &PhaseProfile<T>, tol: T) -> PhaseCondition<T> {
    let phi = phases.phases();
    let witnesses: Vec<_> = quadrics(phases.num_qubits())
        .filter_map(|q| {
            let (xe, ye) = q.exchanged();
            let lhs = Complex::cis(phi[q.x.value()] + phi[q.y.value()]);
            let rhs = Complex::cis(phi[xe.value()] + phi[ye.value()]);
            let residual = (lhs - rhs).norm();
            (residual > tol).then_some(Violation {
                quadric: q,
                residual,
            })
        })
        .collect();
    PhaseCondition {
        holds: !witnesses.is_empty(),
        witnesses,
    }
}

/// Does the kernel (with the `2^{-m/2}` prefactor) entangle the plus product?
pub fn entangles<T: Real>(phases: &PhaseProfile<T>, tol: T) -> bool {
    entangles_with(phases, tol, true)
}

pub fn entangles_with<T: Real>(phases: &PhaseProfile<T>, tol: T, include_prefactor: bool) -> bool {
    let out = kernel_output(phases, include_prefactor);
    !is_fully_product(&out, tol)
        .expect("kernel output is nonzero")
        .is_product()
}

/// `K (|0> + |1>)^{(x)m}`.
pub fn kernel_output<T: Real>(phases: &PhaseProfile<T>, include_prefactor: bool) -> StateVector<T> {
    let kernel = make_selective_kernel(phases, include_prefactor);
    let plus = plus_product_state(phases.num_qubits(), false).expect("profile size is valid");
    apply_selective(&kernel, &plus).expect("matching dimension")
}

/// `2 x 2^{m-1}` reshaping of a state along qubit `j`. Row `b` collects the
/// amplitudes with `x_j = b`; the column is the remaining bits, in ascending
/// qubit order.
#[derive(Clone, Debug, PartialEq)]
pub struct Flattening<T: Real = f64> {
    qubit: usize,
    rows: [Vec<Complex<T>>; 2],
}

impl<T: Real> Flattening<T> {
    pub fn qubit(&self) -> usize {
        self.qubit
    }

    pub fn rows(&self) -> &[Vec<Complex<T>>; 2] {
        &self.rows
    }

    pub fn get(&self, b: usize, r: usize) -> Complex<T> {
        self.rows[b][r]
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Gram matrix of the two rows, `G[a][b] = <row_a, row_b>`.
    pub fn gram(&self) -> [[Complex<T>; 2]; 2] {
        let inner = |a: &[Complex<T>], b: &[Complex<T>]| {
            a.iter()
                .zip(b)
                .fold(Complex::new(T::zero(), T::zero()), |acc, (u, v)| {
                    acc + u.conj() * *v
                })
        };
        let g01 = inner(&self.rows[0], &self.rows[1]);
        [
            [inner(&self.rows[0], &self.rows[0]), g01],
            [g01.conj(), inner(&self.rows[1], &self.rows[1])],
        ]
    }

    /// Singular values `(s_max, s_min)` from the Gram eigenvalues.
    ///
    /// `lambda_max` comes from the closed form. `lambda_min = det G / lambda_max`
    /// with `det G = g_pp * |r_q - (<r_p, r_q> / g_pp) r_p|^2`, `p` the heavier
    /// row; this keeps the small eigenvalue accurate to rounding in the
    /// entries instead of rounding in `g_00 g_11`.
    pub fn singular_values(&self) -> (T, T) {
        let g = self.gram();
        let (g00, g11, g01) = (g[0][0].re, g[1][1].re, g[0][1]);
        let two = T::lit(2.0);
        let disc = ((g00 - g11) * (g00 - g11) + T::lit(4.0) * g01.norm_sqr()).sqrt();
        let lambda_max = (g00 + g11 + disc) / two;
        if lambda_max <= T::zero() {
            return (T::zero(), T::zero());
        }
        let (p, q, gpp) = if g00 >= g11 { (0, 1, g00) } else { (1, 0, g11) };
        let coeff = if p == 0 { g01 } else { g01.conj() } / gpp;
        let perp = self.rows[q]
            .iter()
            .zip(&self.rows[p])
            .fold(T::zero(), |acc, (&rq, &rp)| {
                acc + (rq - coeff * rp).norm_sqr()
            });
        let lambda_min = (gpp * perp / lambda_max).max(T::zero());
        (lambda_max.sqrt(), lambda_min.sqrt())
    }
}

pub fn flattening<T: Real>(s: &StateVector<T>, j: usize) -> Result<Flattening<T>> {
    let m = s.num_qubits();
    if j >= m {
        return Err(Error::Index { index: j, bound: m });
    }
    let cols = 1usize << (m - 1);
    let amps = s.amplitudes();
    let row = |b: usize| (0..cols).map(|r| amps[insert_bit(r, j, b)]).collect();
    Ok(Flattening {
        qubit: j,
        rows: [row(0), row(1)],
    })
}

/// Rank test: product iff `s_min <= tol * s_max` for every flattening.
pub fn oracle_is_product<T: Real>(s: &StateVector<T>, tol: T) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::InvalidState("zero vector".into()));
    }
    for j in 0..s.num_qubits() {
        let (s_max, s_min) = flattening(s, j)?.singular_values();
        if s_min > tol * s_max {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentSummary {
    pub num_qubits: usize,
    pub trials: usize,
    pub seed: u64,
    pub agreements: usize,
    pub disagreements: usize,
    /// Trials whose kernel output the rank oracle calls entangled.
    pub entangled_count: usize,
}

/// Seeded generator for one trial: stream `trial` of the ChaCha8 generator
/// keyed by `seed`, so trials are independent of evaluation order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Phases i.i.d. uniform on `[0, 2 pi)`.
pub fn random_profile<T: Real, R: Rng>(num_qubits: usize, rng: &mut R) -> Result<PhaseProfile<T>> {
    check_qubits(num_qubits, crate::state::DEFAULT_MAX_QUBITS)?;
    let phases = (0..1usize << num_qubits)
        .map(|_| T::lit(rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();
    PhaseProfile::new(phases)
}

/// Runs the three verdicts on `trials` random profiles and tallies agreement.
pub fn consistency_experiment(
    num_qubits: usize,
    trials: usize,
    seed: u64,
) -> Result<ExperimentSummary> {
    consistency_experiment_with::<f64>(num_qubits, trials, seed, VERDICT_TOL)
}

pub fn consistency_experiment_with<T: Real>(
    num_qubits: usize,
    trials: usize,
    seed: u64,
    tol: T,
) -> Result<ExperimentSummary> {
    check_qubits(num_qubits, MAX_EXPERIMENT_QUBITS)?;
    if trials == 0 {
        return Err(Error::InvalidSize("at least one trial is required".into()));
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let phases = random_profile::<T, _>(num_qubits, &mut rng)?;
            let by_phase = phase_condition(&phases, tol).holds;
            let by_segre = entangles(&phases, tol);
            let by_rank = !oracle_is_product(&kernel_output(&phases, true), tol)?;
            Ok((by_phase == by_segre && by_segre == by_rank, by_rank))
        })
        .collect::<Result<Vec<_>>>()?;
    let agreements = outcomes.iter().filter(|(agree, _)| *agree).count();
    Ok(ExperimentSummary {
        num_qubits,
        trials,
        seed,
        agreements,
        disagreements: trials - agreements,
        entangled_count: outcomes.iter().filter(|(_, ent)| *ent).count(),
    })
}
