//! Cavity geometry, mode spectra and kinematic conversions.
//!
//! The cavity occupies `a <= z <= b` in the inertial frame and `a <= χ <= b`
//! in the Rindler frame of a rightward-accelerating cavity. Everything
//! downstream depends on the dimensionless acceleration `h = 2δ/(a+b)`, the
//! boundary offset `s` and the segment durations; the wall positions are kept
//! because the quadrature oracle needs them.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityGeometry {
    a: f64,
    b: f64,
    s: f64,
    theta: f64,
}

impl CavityGeometry {
    /// Geometry from the Rindler positions of the two walls.
    pub fn new(a: f64, b: f64, s: f64, theta: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a <= 0.0 || b <= a {
            return Err(Error::InvalidGeometry(format!(
                "walls must satisfy 0 < a < b, got a = {a}, b = {b}"
            )));
        }
        check_boundary(s, theta)?;
        Ok(Self { a, b, s, theta })
    }

    /// Geometry from the cavity length and the acceleration parameter,
    /// with `a = δ(1/h - 1/2)` and `b = δ(1/h + 1/2)`.
    pub fn from_length_and_h(delta: f64, h: f64, s: f64, theta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidGeometry(format!(
                "cavity length must be positive, got {delta}"
            )));
        }
        if !(h > 0.0 && h < 2.0) {
            return Err(Error::InvalidGeometry(format!(
                "acceleration parameter h must lie in (0, 2), got {h}"
            )));
        }
        let a = delta * (1.0 / h - 0.5);
        let b = delta * (1.0 / h + 0.5);
        Self::new(a, b, s, theta)
    }

    pub fn with_s(self, s: f64) -> Result<Self> {
        Self::new(self.a, self.b, s, self.theta)
    }

    pub fn with_theta(self, theta: f64) -> Result<Self> {
        Self::new(self.a, self.b, self.s, theta)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Cavity length `δ = b - a`.
    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    /// Product of the cavity length and the proper acceleration at its centre.
    pub fn h(&self) -> f64 {
        2.0 * self.length() / (self.a + self.b)
    }

    /// `ln(b/a)`, evaluated as `ln(1 + δ/a)` so that it stays accurate for small h.
    pub fn log_ratio(&self) -> f64 {
        (self.length() / self.a).ln_1p()
    }

    /// Minkowski frequency `ω_n = (n+s)π/δ`.
    pub fn minkowski_frequency(&self, n: i64) -> f64 {
        (n as f64 + self.s) * PI / self.length()
    }

    /// Rindler frequency `Ω_n = (n+s)π/ln(b/a)`.
    pub fn rindler_frequency(&self, n: i64) -> f64 {
        (n as f64 + self.s) * PI / self.log_ratio()
    }

    /// Rindler rapidity elapsed during an acceleration lasting `tau` of
    /// proper time at the cavity centre.
    pub fn rapidity_from_proper_time(&self, tau: f64) -> Result<f64> {
        check_duration(tau)?;
        Ok(2.0 * tau / (self.a + self.b))
    }

    /// Proper time at the centre between sending a light ray and recapturing
    /// it after one bounce off each wall, while accelerating. Equals
    /// `2δ·atanh(h/2)/(h/2) = (a+b)·ln(b/a)`.
    pub fn degradation_period(&self) -> f64 {
        (self.a + self.b) * self.log_ratio()
    }

    /// Accelerated duration in units of [`degradation_period`](Self::degradation_period).
    pub fn u_parameter(&self, tau1: f64) -> Result<f64> {
        check_duration(tau1)?;
        Ok(tau1 / self.degradation_period())
    }

    /// Inertial duration in units of the light-crossing round trip `2δ`.
    pub fn v_parameter(&self, tau2: f64) -> Result<f64> {
        check_duration(tau2)?;
        Ok(tau2 / (2.0 * self.length()))
    }

    pub fn proper_time_from_u(&self, u: f64) -> Result<f64> {
        check_duration(u)?;
        Ok(u * self.degradation_period())
    }

    pub fn proper_time_from_v(&self, v: f64) -> Result<f64> {
        check_duration(v)?;
        Ok(2.0 * v * self.length())
    }

    /// The coefficients multiplying the right- and left-moving spinors of
    /// mode `n` on the surface `t = 0` (equivalently `η = 0`).
    pub fn mode_components_at_t0(
        &self,
        n: i64,
        z: f64,
        frame: Frame,
    ) -> Result<(Complex64, Complex64)> {
        if !(z >= self.a && z <= self.b) {
            return Err(Error::OutsideCavity {
                z,
                a: self.a,
                b: self.b,
            });
        }
        let boundary = Complex64::from_polar(1.0, self.theta);
        let (phase, norm) = match frame {
            Frame::Minkowski => (
                self.minkowski_frequency(n) * (z - self.a),
                (2.0 * self.length()).sqrt(),
            ),
            Frame::Rindler => (
                self.rindler_frequency(n) * ((z - self.a) / self.a).ln_1p(),
                (2.0 * z * self.log_ratio()).sqrt(),
            ),
        };
        let right = Complex64::from_polar(1.0 / norm, phase);
        let left = boundary * Complex64::from_polar(1.0 / norm, -phase);
        Ok((right, left))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Frame {
    Minkowski,
    Rindler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Charge {
    Positive,
    Negative,
}

/// A cavity mode label. Non-negative labels are particle modes, negative
/// labels antiparticle modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeSpec {
    pub n: i64,
}

impl ModeSpec {
    pub fn new(n: i64) -> Self {
        Self { n }
    }

    pub fn charge(&self) -> Charge {
        if self.n >= 0 {
            Charge::Positive
        } else {
            Charge::Negative
        }
    }

    pub fn minkowski_frequency(&self, geom: &CavityGeometry) -> f64 {
        geom.minkowski_frequency(self.n)
    }

    pub fn rindler_frequency(&self, geom: &CavityGeometry) -> f64 {
        geom.rindler_frequency(self.n)
    }
}

fn check_boundary(s: f64, theta: f64) -> Result<()> {
    if !(0.0..1.0).contains(&s) {
        return Err(Error::InvalidGeometry(format!(
            "boundary offset s must lie in [0, 1), got {s}"
        )));
    }
    if !(0.0..2.0 * PI).contains(&theta) {
        return Err(Error::InvalidGeometry(format!(
            "boundary phase theta must lie in [0, 2π), got {theta}"
        )));
    }
    Ok(())
}

pub(crate) fn check_duration(tau: f64) -> Result<()> {
    if tau.is_finite() && tau >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidDuration { value: tau })
    }
}
