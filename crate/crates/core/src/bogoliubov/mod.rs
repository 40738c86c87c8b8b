//! Perturbative Bogoliubov transformations between cavity mode bases.
//!
//! `A_mn = (ψ_n, ψ̂_m)` relates the inertial modes to the modes of a
//! rightward-accelerating cavity at the instant the acceleration starts.
//! Expanded in `h`, `A = 1 + A⁽¹⁾ + A⁽²⁾ + O(h³)` with closed-form entries.
//! Trajectories built from accelerated and inertial segments compose these
//! building blocks, truncated at order `h²`.

mod matrix;
pub mod quadrature;
mod segment;
mod vacuum;

use std::f64::consts::PI;

pub use matrix::PerturbativeMatrix;
pub use quadrature::{exact_coefficient, QuadratureOptions, QuadratureResult};
pub use segment::{
    accelerated_segment, inertial_segment, ClosedFormPhases, Direction, Segment, SegmentKind,
    TravelScenario,
};
pub use vacuum::{vacuum_v_matrix, vacuum_v_matrix_conjugate_form, VMatrix};

/// Coefficient of `h` in `A_mn`. Real and antisymmetric; non-zero only
/// when `m + n` is odd.
pub fn first_order_entry(m: i64, n: i64, s: f64) -> f64 {
    if (m + n).rem_euclid(2) == 0 {
        return 0.0;
    }
    let d = (m - n) as f64;
    -(m as f64 + n as f64 + 2.0 * s) / (PI * PI * d * d * d)
}

/// Coefficient of `h²` in `A_mn`. Off the diagonal it is non-zero only when
/// `m + n` is even.
pub fn second_order_entry(m: i64, n: i64, s: f64) -> f64 {
    let ns = n as f64 + s;
    if m == n {
        return -(1.0 / 96.0 + PI * PI * ns * ns / 240.0);
    }
    if (m + n).rem_euclid(2) != 0 {
        return 0.0;
    }
    let ms = m as f64 + s;
    let d = (m - n) as f64;
    (ms * ms + 3.0 * ns * ns + 8.0 * ms * ns) / (4.0 * PI * PI * d.powi(4))
}

/// Upper bound on `Σ_{|p|>M} |E^{k-p} - 1|² |A⁽¹⁾_kp|²`, the part of a
/// mode-`k` leakage sum lost to a window of half-width `M`.
pub fn leakage_tail_bound(k: i64, s: f64, window: usize) -> f64 {
    let c = (2.0 * (k as f64 + s)).abs();
    let j0 = window as f64 - k.unsigned_abs() as f64;
    if j0 < 1.0 {
        return f64::INFINITY;
    }
    // |A⁽¹⁾_kp|² <= (c + j)²/(π⁴ j⁶) with j = |p - k| >= j0 + 1, |E^j - 1|² <= 4,
    // both tails, sum bounded by the integral from j0.
    let integral = c * c / (5.0 * j0.powi(5)) + c / (2.0 * j0.powi(4)) + 1.0 / (3.0 * j0.powi(3));
    8.0 * integral / PI.powi(4)
}
