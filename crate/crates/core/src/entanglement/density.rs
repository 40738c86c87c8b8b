//! Explicit reduced density matrices, partial transposes and their spectra.
//!
//! The matrices only carry the modes that were entangled initially; weight
//! that leaks to other modes is booked on the diagonal, so every matrix has
//! unit trace. Eigenvalues come from closed-form solvers on the connected
//! blocks of the partially transposed matrix.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix2, Matrix3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{StateFamily, StateSpec};
use crate::bogoliubov::PerturbativeMatrix;
use crate::error::{Error, Result};

/// Sign convention for ordering fermionic operators of different cavities.
/// Flipping it changes the sign of some off-diagonal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingConvention {
    Standard,
    Flipped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOutcome {
    pub negativity: f64,
    /// Horodecki CHSH maximum; two-mode family only.
    pub chsh_max: Option<f64>,
    pub trace: f64,
}

const TRACE_TOLERANCE: f64 = 1e-12;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Negativity (and CHSH where defined) of the Alice–Rob state after Rob's
/// cavity undergoes `x`, for numeric acceleration parameter `h`.
pub fn density_oracle(x: &PerturbativeMatrix, h: f64, state: &StateSpec) -> Result<OracleOutcome> {
    state.validate()?;
    let rho = match state.family {
        StateFamily::TwoModePlus | StateFamily::TwoModeMinus => two_mode_density(x, h, state)?,
        StateFamily::Charge => charge_density(x, h, state)?,
    };
    let trace: f64 = (0..rho.nrows()).map(|i| rho[(i, i)].re).sum();
    if (trace - 1.0).abs() > TRACE_TOLERANCE {
        return Err(Error::InconsistentState(format!("reduced state has trace {trace}")));
    }
    let rob_dim = rho.nrows() / 2;
    let pt = partial_transpose_second(&rho, 2, rob_dim);
    let negativity: f64 = block_eigenvalues(&pt)?
        .into_iter()
        .filter(|e| *e < 0.0)
        .map(f64::abs)
        .sum();
    let chsh_max = match state.family {
        StateFamily::Charge => None,
        _ => Some(horodecki_chsh(&correlation_matrix(&rho))),
    };
    Ok(OracleOutcome {
        negativity,
        chsh_max,
        trace,
    })
}

/// Leakage of mode `k` into particle (`p >= 0`) and antiparticle rows,
/// returned as (same charge as `k`, opposite charge), times `h²`.
fn split_leakage(x: &PerturbativeMatrix, k: i64, h: f64) -> Result<(f64, f64)> {
    let (plus, minus) = x.leakage(k)?;
    let h2 = h * h;
    Ok(if k >= 0 {
        (plus * h2, minus * h2)
    } else {
        (minus * h2, plus * h2)
    })
}

/// Diagonal element of `X` for mode `k`, to order `h²`, conjugated for
/// antiparticle modes.
fn diagonal_amplitude(x: &PerturbativeMatrix, k: i64, h: f64) -> Result<Complex64> {
    let d = x.order0_entry(k)? + x.order1_entry(k, k)? * h + x.order2_entry(k, k)? * (h * h);
    Ok(if k >= 0 { d } else { d.conj() })
}

/// Basis `|n_A, n_R⟩` ordered 00, 01, 10, 11 for the state
/// `(|0⟩|0⟩ ± |1⟩|1_k⟩)/√2`.
fn two_mode_density(x: &PerturbativeMatrix, h: f64, state: &StateSpec) -> Result<DMatrix<Complex64>> {
    let (same, opposite) = split_leakage(x, state.k, h)?;
    let coherence = diagonal_amplitude(x, state.k, h)? * state.sign.value();
    let mut rho = DMatrix::zeros(4, 4);
    rho[(0, 0)] = c(0.5 * (1.0 - opposite));
    rho[(1, 1)] = c(0.5 * opposite);
    rho[(2, 2)] = c(0.5 * same);
    rho[(3, 3)] = c(0.5 * (1.0 - same));
    rho[(0, 3)] = coherence.conj() * 0.5;
    rho[(3, 0)] = coherence * 0.5;
    Ok(rho)
}

/// Alice holds `|1_k⟩` or `|1_k'⟩` (rows 0..4 and 4..8); Rob's basis is
/// `|n_k n_k'⟩` ordered 00, 10, 01, 11.
fn charge_density(x: &PerturbativeMatrix, h: f64, state: &StateSpec) -> Result<DMatrix<Complex64>> {
    let k = state.k;
    let kp = state.k_prime.expect("validated charge state");
    let h2 = h * h;
    let (plus_k, minus_k) = x.leakage(k)?;
    let (plus_kp, minus_kp) = x.leakage(kp)?;
    let (plus_k, minus_k, plus_kp, minus_kp) = (plus_k * h2, minus_k * h2, plus_kp * h2, minus_kp * h2);
    let cross = x.order1_entry(k, kp)?.norm_sqr() * h2;

    let gk = x.order0_entry(k)?;
    let gkp = x.order0_entry(kp)?;
    let ordering = match state.ordering {
        OrderingConvention::Standard => 1.0,
        OrderingConvention::Flipped => -1.0,
    };
    let pair_minus = gk * gkp.conj() * x.cross_leakage(k, kp, false)? * h2 * ordering;
    let pair_plus = gk * gkp.conj() * x.cross_leakage(k, kp, true)? * h2 * ordering;
    let z = gk.conj() * gkp.conj() * (1.0 + cross)
        + (gkp.conj() * x.order2_entry(k, k)?.conj() + gk.conj() * x.order2_entry(kp, kp)?.conj()) * h2;

    let mut rho = DMatrix::zeros(8, 8);
    // Alice |1_k⟩, Rob started in |1_k'⟩.
    rho[(0, 0)] = c(minus_kp);
    rho[(2, 2)] = c(1.0 - minus_kp - minus_k + cross);
    rho[(3, 3)] = c(minus_k - cross);
    rho[(0, 3)] = pair_minus;
    rho[(3, 0)] = pair_minus.conj();
    // Alice |1_k'⟩, Rob started in |1_k⟩.
    rho[(4, 4)] = c(plus_k);
    rho[(5, 5)] = c(1.0 - plus_kp - plus_k + cross);
    rho[(7, 7)] = c(plus_kp - cross);
    rho[(4, 7)] = -pair_plus;
    rho[(7, 4)] = -pair_plus.conj();
    // Coherence between the two branches.
    rho[(2, 5)] = z.conj() * state.sign.value();
    rho[(5, 2)] = z * state.sign.value();
    Ok(rho * c(0.5))
}

/// Partial transpose on the second factor of a `da ⊗ db` matrix.
fn partial_transpose_second(rho: &DMatrix<Complex64>, da: usize, db: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(da * db, da * db, |row, col| {
        let (a, r) = (row / db, row % db);
        let (a2, r2) = (col / db, col % db);
        rho[(a * db + r2, a2 * db + r)]
    })
}

/// Eigenvalues of a Hermitian matrix whose non-zero pattern splits into
/// connected blocks of size at most three.
fn block_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let n = m.nrows();
    let mut component = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![start];
        component[start] = id;
        let mut cursor = 0;
        while cursor < members.len() {
            let i = members[cursor];
            for j in 0..n {
                if component[j] == usize::MAX && (m[(i, j)].norm() > 0.0 || m[(j, i)].norm() > 0.0) {
                    component[j] = id;
                    members.push(j);
                }
            }
            cursor += 1;
        }
        members.sort_unstable();
        blocks.push(members);
    }
    let mut eigen = Vec::with_capacity(n);
    for members in blocks {
        let block = DMatrix::from_fn(members.len(), members.len(), |i, j| m[(members[i], members[j])]);
        eigen.extend(hermitian_eigenvalues(&block)?);
    }
    Ok(eigen)
}

/// Closed-form eigenvalues of a Hermitian matrix of size 1, 2 or 3, in
/// descending order.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let mut eig = match m.nrows() {
        1 => vec![m[(0, 0)].re],
        2 => {
            let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
            let mean = 0.5 * (a + d);
            let radius = (0.5 * (a - d)).hypot(m[(0, 1)].norm());
            vec![mean + radius, mean - radius]
        }
        3 => hermitian3(m).to_vec(),
        size => return Err(Error::BlockTooLarge(size)),
    };
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}

fn hermitian3(m: &DMatrix<Complex64>) -> [f64; 3] {
    let off = m[(0, 1)].norm_sqr() + m[(0, 2)].norm_sqr() + m[(1, 2)].norm_sqr();
    let diag = [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re];
    if off == 0.0 {
        return diag;
    }
    let q = (diag[0] + diag[1] + diag[2]) / 3.0;
    let spread = diag.iter().map(|d| (d - q).powi(2)).sum::<f64>() + 2.0 * off;
    let p = (spread / 6.0).sqrt();
    let b = DMatrix::from_fn(3, 3, |i, j| {
        let shift = if i == j { c(q) } else { c(0.0) };
        (m[(i, j)] - shift) / p
    });
    let det = b[(0, 0)] * (b[(1, 1)] * b[(2, 2)] - b[(1, 2)] * b[(2, 1)])
        - b[(0, 1)] * (b[(1, 0)] * b[(2, 2)] - b[(1, 2)] * b[(2, 0)])
        + b[(0, 2)] * (b[(1, 0)] * b[(2, 1)] - b[(1, 1)] * b[(2, 0)]);
    let r = (0.5 * det.re).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let largest = q + 2.0 * p * phi.cos();
    let smallest = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    [largest, 3.0 * q - largest - smallest, smallest]
}

/// `t_ij = Tr[ρ σ_i ⊗ σ_j]` for a two-qubit state.
fn correlation_matrix(rho: &DMatrix<Complex64>) -> Matrix3<f64> {
    let i = Complex64::new(0.0, 1.0);
    let paulis = [
        Matrix2::new(c(0.0), c(1.0), c(1.0), c(0.0)),
        Matrix2::new(c(0.0), -i, i, c(0.0)),
        Matrix2::new(c(1.0), c(0.0), c(0.0), c(-1.0)),
    ];
    Matrix3::from_fn(|a, b| {
        let (sa, sb) = (&paulis[a], &paulis[b]);
        let mut t = c(0.0);
        for row in 0..4 {
            for col in 0..4 {
                let op = sa[(col / 2, row / 2)] * sb[(col % 2, row % 2)];
                t += rho[(row, col)] * op;
            }
        }
        t.re
    })
}

/// `2√(μ₁ + μ₂)` with `μ₁ >= μ₂` the largest eigenvalues of `TᵀT`.
pub fn horodecki_chsh(t: &Matrix3<f64>) -> f64 {
    let u = t.transpose() * t;
    let u = DMatrix::from_fn(3, 3, |i, j| c(u[(i, j)]));
    let eig = hermitian_eigenvalues(&u).expect("3x3");
    2.0 * (eig[0] + eig[1]).max(0.0).sqrt()
}
