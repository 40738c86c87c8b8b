use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bogoliubov::{Segment, TravelScenario};
use crate::entanglement::{BellSign, OrderingConvention, StateFamily, StateSpec};
use crate::error::{Error, Result};
use crate::geometry::CavityGeometry;

/// Cavity placement, either by the Rindler positions of the walls or by
/// length and acceleration parameter. Lengths are in arbitrary but
/// consistent units; `h` is dimensionless.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeometrySpec {
    Walls(Walls),
    LengthAndH(LengthAndH),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Walls {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LengthAndH {
    pub delta: f64,
    pub h: f64,
}

impl Default for GeometrySpec {
    fn default() -> Self {
        GeometrySpec::LengthAndH(LengthAndH { delta: 1.0, h: 0.1 })
    }
}

/// Rob's trajectory. `u` counts accelerated proper time in degradation
/// periods, `v` counts coasting proper time in units of `2δ`; explicit
/// segments take proper times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Trajectory {
    Single { u: f64 },
    OneWay { u: f64, v: f64 },
    Segments(Vec<Segment>),
}

impl Default for Trajectory {
    fn default() -> Self {
        Trajectory::Single { u: 0.5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    /// Points on `u ∈ [0, 1]`, endpoints included.
    pub u_points: usize,
    /// Points on `v ∈ [0, 1]`, endpoints included.
    pub v_points: usize,
    /// Boundary offsets swept by `figure2`.
    pub s_values: Vec<f64>,
    /// Mode indices swept by `figure2`.
    pub k_values: Vec<i64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            u_points: 101,
            v_points: 100,
            s_values: vec![0.0, 0.25, 0.5, 0.75],
            k_values: vec![1, -1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioConfig {
    pub geometry: GeometrySpec,
    /// Boundary spectrum offset in `[0, 1)`.
    pub s: f64,
    /// Boundary phase in radians, `[0, 2π)`.
    pub theta: f64,
    pub state: StateFamily,
    pub bell_sign: BellSign,
    pub ordering: OrderingConvention,
    pub k: i64,
    pub k_prime: Option<i64>,
    pub trajectory: Trajectory,
    pub sweep: SweepConfig,
    /// Half-width of the mode window for leakage sums.
    pub window: usize,
    /// Half-width of the mode window for composed matrices.
    pub composition_window: usize,
    /// Largest accepted closed-form vs independent-route discrepancy.
    pub tolerance: f64,
    pub out: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            geometry: GeometrySpec::default(),
            s: 0.0,
            theta: 0.0,
            state: StateFamily::TwoModePlus,
            bell_sign: BellSign::Plus,
            ordering: OrderingConvention::Standard,
            k: 1,
            k_prime: None,
            trajectory: Trajectory::default(),
            sweep: SweepConfig::default(),
            window: 1000,
            composition_window: 200,
            tolerance: 1e-5,
            out: None,
        }
    }
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    /// Replace the acceleration parameter, keeping the cavity length.
    pub fn set_h(&mut self, h: f64) {
        let delta = match self.geometry {
            GeometrySpec::Walls(w) => w.b - w.a,
            GeometrySpec::LengthAndH(l) => l.delta,
        };
        self.geometry = GeometrySpec::LengthAndH(LengthAndH { delta, h });
    }

    /// Use a `u`-by-`v` grid.
    pub fn set_grid(&mut self, u_points: usize, v_points: usize) {
        self.sweep.u_points = u_points;
        self.sweep.v_points = v_points;
    }

    /// Checks every precondition of the downstream computations.
    pub fn validate(&self) -> Result<()> {
        self.cavity()?;
        self.state_spec().validate().map_err(|e| Error::Config(e.to_string()))?;
        self.scenario()?;
        if self.window == 0 || self.composition_window == 0 {
            return Err(Error::Config("windows must be at least 1".into()));
        }
        let k_max = self.state_spec().max_mode() as usize;
        if k_max > self.composition_window || self.sweep.k_values.iter().any(|k| k.unsigned_abs() as usize > self.window) {
            return Err(Error::Config("mode index outside the truncation window".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::Config(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.sweep.u_points < 2 || self.sweep.v_points < 2 {
            return Err(Error::Config("sweep grids need at least two points per axis".into()));
        }
        for &s in &self.sweep.s_values {
            self.cavity()?.with_s(s).map_err(|e| Error::Config(e.to_string()))?;
        }
        Ok(())
    }

    pub fn cavity(&self) -> Result<CavityGeometry> {
        let geom = match self.geometry {
            GeometrySpec::Walls(w) => CavityGeometry::new(w.a, w.b, self.s, self.theta),
            GeometrySpec::LengthAndH(l) => CavityGeometry::from_length_and_h(l.delta, l.h, self.s, self.theta),
        };
        geom.map_err(|e| Error::Config(e.to_string()))
    }

    pub fn state_spec(&self) -> StateSpec {
        StateSpec {
            family: self.state,
            k: self.k,
            k_prime: self.k_prime,
            sign: self.bell_sign,
            ordering: self.ordering,
        }
    }

    pub fn scenario(&self) -> Result<TravelScenario> {
        let geom = self.cavity()?;
        let build = || -> Result<TravelScenario> {
            match &self.trajectory {
                Trajectory::Single { u } => TravelScenario::single(geom, geom.proper_time_from_u(*u)?),
                Trajectory::OneWay { u, v } => {
                    TravelScenario::one_way(geom, geom.proper_time_from_u(*u)?, geom.proper_time_from_v(*v)?)
                }
                Trajectory::Segments(segments) => TravelScenario::new(geom, segments.clone()),
            }
        };
        build().map_err(|e| Error::Config(e.to_string()))
    }
}
