use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::PerturbativeMatrix;
use crate::error::{Error, Result};

/// Pair-creation amplitudes of the transformed vacuum, coefficient of `h`.
///
/// Rows are particle modes `p = 0..=M`, columns antiparticle modes
/// `q = -M..=-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct VMatrix {
    window: usize,
    entries: DMatrix<Complex64>,
}

impl VMatrix {
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn entry(&self, p: i64, q: i64) -> Result<Complex64> {
        let w = self.window as i64;
        if !(0..=w).contains(&p) {
            return Err(Error::OutsideWindow {
                mode: p,
                window: self.window,
            });
        }
        if !(-w..0).contains(&q) {
            return Err(Error::OutsideWindow {
                mode: q,
                window: self.window,
            });
        }
        Ok(self.entries[(p as usize, (q + w) as usize)])
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// `Σ |V_pq|²`.
    pub fn total_weight(&self) -> f64 {
        // Summed from the smallest entries (far corners) inwards.
        let mut terms: Vec<f64> = self.entries.iter().map(|z| z.norm_sqr()).collect();
        terms.sort_by(f64::total_cmp);
        terms.iter().sum()
    }

    /// `½ h² Σ |V_pq|²`, the vacuum normalisation deficit at order `h²`.
    pub fn normalisation_deficit(&self, h: f64) -> f64 {
        0.5 * h * h * self.total_weight()
    }

    pub fn normalisation(&self, h: f64) -> f64 {
        1.0 - self.normalisation_deficit(h)
    }
}

/// `V_pq = -X⁽¹⁾_qp conj(X⁽⁰⁾_p)`.
pub fn vacuum_v_matrix(x: &PerturbativeMatrix) -> VMatrix {
    build(x, |o1, g, p, q| -o1[(q, p)] * g[p].conj())
}

/// The equivalent form `V_pq = conj(X⁽¹⁾_pq) X⁽⁰⁾_q`, which agrees with
/// [`vacuum_v_matrix`] whenever `X` is unitary at order `h`.
pub fn vacuum_v_matrix_conjugate_form(x: &PerturbativeMatrix) -> VMatrix {
    build(x, |o1, g, p, q| o1[(p, q)].conj() * g[q])
}

fn build<F>(x: &PerturbativeMatrix, entry: F) -> VMatrix
where
    F: Fn(&DMatrix<Complex64>, &[Complex64], usize, usize) -> Complex64,
{
    let w = x.window();
    let entries = DMatrix::from_fn(w + 1, w, |row, col| entry(x.order1(), x.order0(), row + w, col));
    VMatrix { window: w, entries }
}
