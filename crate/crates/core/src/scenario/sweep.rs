use rayon::prelude::*;
use serde::Serialize;

use super::config::{ScenarioConfig, Trajectory};
use crate::bogoliubov::{leakage_tail_bound, ClosedFormPhases};
use crate::entanglement::{
    chsh_max_two_mode, density_oracle, fk_closed, fk_series, negativity_two_mode, oneway_fk,
    oneway_fk_series, EntanglementReport, StateSpec,
};
use crate::error::{Error, Result};
use crate::polylog::UnitPhase;

/// Column order of every CSV this crate writes.
pub const COLUMNS: [&str; 11] = [
    "u",
    "v",
    "s",
    "k",
    "f_coefficient",
    "negativity",
    "chsh_max",
    "interference_term",
    "discrepancy",
    "tail_estimate",
    "validity_flag",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub u: Option<f64>,
    pub v: Option<f64>,
    pub s: f64,
    pub k: i64,
    pub f_coefficient: f64,
    pub negativity: f64,
    pub chsh_max: Option<f64>,
    pub interference_term: Option<f64>,
    /// Closed form against the independent route (leakage series for the
    /// sweeps, explicit density matrices for reports).
    pub discrepancy: f64,
    pub tail_estimate: f64,
    pub validity_flag: bool,
}

impl SweepRow {
    pub fn fields(&self) -> [String; 11] {
        let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
        [
            opt(self.u),
            opt(self.v),
            fmt_f64(self.s),
            self.k.to_string(),
            fmt_f64(self.f_coefficient),
            fmt_f64(self.negativity),
            opt(self.chsh_max),
            opt(self.interference_term),
            fmt_f64(self.discrepancy),
            fmt_f64(self.tail_estimate),
            u8::from(self.validity_flag).to_string(),
        ]
    }
}

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn max_discrepancy(&self) -> f64 {
        self.rows.iter().map(|r| r.discrepancy).fold(0.0, f64::max)
    }

    /// Fails with a tolerance breach if any row disagrees with its
    /// independent route by more than `tolerance`.
    pub fn check(&self, tolerance: f64) -> Result<()> {
        match self.rows.iter().position(|r| r.discrepancy.is_nan() || r.discrepancy > tolerance) {
            None => Ok(()),
            Some(i) => Err(Error::ToleranceBreach(format!(
                "row {i}: discrepancy {:.3e} exceeds {tolerance:.3e}",
                self.rows[i].discrepancy
            ))),
        }
    }
}

fn grid(points: usize) -> Vec<f64> {
    let last = (points - 1) as f64;
    (0..points).map(|i| i as f64 / last).collect()
}

/// Degradation of a single accelerated segment against `u ∈ [0, 1]`, one
/// curve per `(s, k)` pair of the sweep.
pub fn run_figure2(config: &ScenarioConfig) -> Result<SweepResult> {
    config.validate()?;
    let base = config.cavity()?;
    let h = base.h();
    let us = grid(config.sweep.u_points);
    let mut points = Vec::new();
    for &s in &config.sweep.s_values {
        for &k in &config.sweep.k_values {
            for &u in &us {
                points.push((s, k, u));
            }
        }
    }
    let window = config.window;
    let rows = points
        .par_iter()
        .map(|&(s, k, u)| {
            let geom = base.with_s(s)?;
            let e1 = UnitPhase::from_turns(u);
            let f = fk_closed(&geom, k, e1);
            let series = fk_series(&geom, k, e1, window);
            Ok(SweepRow {
                u: Some(u),
                v: None,
                s,
                k,
                f_coefficient: f,
                negativity: negativity_two_mode(f, h),
                chsh_max: Some(chsh_max_two_mode(f, h)),
                interference_term: None,
                discrepancy: (f - series).abs(),
                tail_estimate: leakage_tail_bound(k, s, window),
                validity_flag: StateSpec::two_mode(k).outside_validity(h),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { rows })
}

/// Degradation after a one-way trip over the `(u, v)` unit square, at the
/// configured `s` and `k`. Rows run over `v` fastest.
pub fn run_figure3(config: &ScenarioConfig) -> Result<SweepResult> {
    config.validate()?;
    let geom = config.cavity()?;
    let h = geom.h();
    let k = config.k;
    let us = grid(config.sweep.u_points);
    let vs = grid(config.sweep.v_points);
    let points: Vec<(f64, f64)> = us.iter().flat_map(|&u| vs.iter().map(move |&v| (u, v))).collect();
    let window = config.window;
    let tail = 4.0 * leakage_tail_bound(k, geom.s(), window);
    let flag = StateSpec::two_mode(k).outside_validity(h);
    let rows = points
        .par_iter()
        .map(|&(u, v)| {
            let (e1, e2) = (UnitPhase::from_turns(u), UnitPhase::from_turns(v));
            let f = oneway_fk(&geom, k, e1, e2);
            let series = oneway_fk_series(&geom, k, e1, e2, window);
            SweepRow {
                u: Some(u),
                v: Some(v),
                s: geom.s(),
                k,
                f_coefficient: f,
                negativity: negativity_two_mode(f, h),
                chsh_max: Some(chsh_max_two_mode(f, h)),
                interference_term: None,
                discrepancy: (f - series).abs(),
                tail_estimate: tail,
                validity_flag: flag,
            }
        })
        .collect();
    Ok(SweepResult { rows })
}

/// Closed-form report for the configured trajectory and state, together
/// with the explicit density-matrix evaluation of the same quantities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub closed_form: EntanglementReport,
    pub oracle_negativity: f64,
    pub oracle_chsh_max: Option<f64>,
    pub row: SweepRow,
}

pub fn run_report(config: &ScenarioConfig) -> Result<ScenarioReport> {
    config.validate()?;
    let scenario = config.scenario()?;
    let geom = scenario.geometry();
    let h = geom.h();
    let state = config.state_spec();
    let closed = EntanglementReport::closed_form(&scenario, &state, h, config.window)?;
    let matrix = scenario.graft(config.composition_window)?;
    let oracle = density_oracle(&matrix, h, &state)?;
    let mut discrepancy = (closed.negativity - oracle.negativity).abs();
    if let (Some(a), Some(b)) = (closed.chsh_max, oracle.chsh_max) {
        discrepancy = discrepancy.max((a - b).abs());
    }
    let (u, v) = match (&config.trajectory, scenario.closed_form_phases()) {
        (Trajectory::Single { u }, _) => (Some(*u), None),
        (Trajectory::OneWay { u, v }, _) => (Some(*u), Some(*v)),
        (_, Some(ClosedFormPhases::Single { e1 })) => (Some(e1.turns().rem_euclid(1.0)), None),
        (_, Some(ClosedFormPhases::OneWay { e1, e2 })) => {
            (Some(e1.turns().rem_euclid(1.0)), Some(e2.turns().rem_euclid(1.0)))
        }
        _ => (None, None),
    };
    let row = SweepRow {
        u,
        v,
        s: geom.s(),
        k: state.k,
        f_coefficient: closed.f_coefficient,
        negativity: closed.negativity,
        chsh_max: closed.chsh_max,
        interference_term: closed.interference_term,
        discrepancy,
        tail_estimate: closed.tail_estimate,
        validity_flag: closed.validity_warning,
    };
    Ok(ScenarioReport {
        closed_form: closed,
        oracle_negativity: oracle.negativity,
        oracle_chsh_max: oracle.chsh_max,
        row,
    })
}
