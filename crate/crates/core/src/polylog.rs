//! Real parts of the order-4 and order-6 polylogarithms on the unit circle,
//! and the Q-function assembled from them.
//!
//! On the unit circle `Re Li_{2m}(e^{iφ}) = Σ_k cos(kφ)/k^{2m}` is a
//! Bernoulli polynomial in `φ/2π` on `[0, 1]`, which is what the production
//! path evaluates. The direct cosine series is kept as an independent check.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const TAU: f64 = 2.0 * PI;

/// A point `e^{iφ}` on the unit circle.
///
/// The phase is held as a signed fraction of a full turn in `(-1/2, 1/2]`,
/// so conjugation is an exact sign flip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPhase {
    turns: f64,
}

impl UnitPhase {
    pub const ONE: UnitPhase = UnitPhase { turns: 0.0 };

    pub fn from_turns(turns: f64) -> Self {
        Self {
            turns: reduce_turns(turns),
        }
    }

    pub fn from_radians(phi: f64) -> Self {
        Self::from_turns(phi / TAU)
    }

    /// Phase in `[0, 2π)`.
    pub fn radians(&self) -> f64 {
        let phi = if self.turns < 0.0 {
            TAU * (self.turns + 1.0)
        } else {
            TAU * self.turns
        };
        if phi >= TAU {
            0.0
        } else {
            phi
        }
    }

    /// Signed turns in `(-1/2, 1/2]`.
    pub fn turns(&self) -> f64 {
        self.turns
    }

    pub fn conj(self) -> Self {
        Self::from_turns(-self.turns)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::from_turns(self.turns * k as f64)
    }

    pub fn is_one(&self) -> bool {
        self.turns == 0.0
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, TAU * self.turns)
    }

    /// `|z - 1|^2 = 4 sin^2(φ/2)`.
    pub fn distance_sq_from_one(self) -> f64 {
        let half = (PI * self.turns).sin();
        4.0 * half * half
    }
}

impl std::ops::Mul for UnitPhase {
    type Output = UnitPhase;

    // Multiplying phases adds their turns.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: UnitPhase) -> UnitPhase {
        UnitPhase::from_turns(self.turns + rhs.turns)
    }
}

fn reduce_turns(t: f64) -> f64 {
    let r = t - t.round();
    if r <= -0.5 {
        r + 1.0
    } else if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Unit-modulus phase `e^{2πi·turns}` with the argument reduced first.
pub(crate) fn phase_from_turns(turns: f64) -> Complex64 {
    let r = reduce_turns(turns);
    let (s, c) = (TAU * r).sin_cos();
    Complex64::new(c, s)
}

/// `Re Li_order(z)` for `order` 4 or 6.
pub fn re_polylog(order: u32, z: UnitPhase) -> Result<f64> {
    let x = z.turns.abs();
    match order {
        4 => {
            let b4 = ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0;
            Ok(-TAU.powi(4) * b4 / 48.0)
        }
        6 => {
            let b6 = ((((x - 3.0) * x + 2.5) * x * x - 0.5) * x * x) + 1.0 / 42.0;
            Ok(TAU.powi(6) * b6 / 1440.0)
        }
        other => Err(Error::UnsupportedOrder(other)),
    }
}

/// Truncated cosine series with its remainder bound `1/((order-1)·N^(order-1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// Direct evaluation of `Σ_{k=1}^{terms} cos(kφ)/k^order`, summed from the
/// small terms up.
pub fn re_polylog_series(order: u32, z: UnitPhase, terms: u64) -> Result<SeriesValue> {
    if order != 4 && order != 6 {
        return Err(Error::UnsupportedOrder(order));
    }
    let p = order as i32;
    let value = (1..=terms)
        .rev()
        .map(|k| {
            let kf = k as f64;
            (TAU * reduce_turns(kf * z.turns)).cos() / kf.powi(p)
        })
        .sum();
    let n = terms.max(1) as f64;
    Ok(SeriesValue {
        value,
        tail_bound: 1.0 / ((p - 1) as f64 * n.powi(p - 1)),
    })
}

/// `Q(α, z) = (2/π⁴) Re[α²(Li₆(z) − Li₆(z²)/64) + Li₄(z) − Li₄(z²)/16]`.
///
/// Only odd harmonics survive the combination, so
/// `Q(α, z) = (2/π⁴) Σ_{k odd} cos(kφ)(α²/k⁶ + 1/k⁴)`.
pub fn q_function(alpha: f64, z: UnitPhase) -> f64 {
    let z2 = z.pow(2);
    let li6 = re_polylog(6, z).unwrap() - re_polylog(6, z2).unwrap() / 64.0;
    let li4 = re_polylog(4, z).unwrap() - re_polylog(4, z2).unwrap() / 16.0;
    2.0 / PI.powi(4) * (alpha * alpha * li6 + li4)
}
