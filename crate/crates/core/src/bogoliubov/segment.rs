use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::PerturbativeMatrix;
use super::{first_order_entry, second_order_entry};
use crate::error::{Error, Result};
use crate::geometry::{check_duration, CavityGeometry};
use crate::polylog::{phase_from_turns, UnitPhase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Right,
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentKind {
    AccelerateRight,
    AccelerateLeft,
    Inertial,
}

/// One piece of a trajectory; `duration` is proper time at the cavity centre.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Segment {
    pub kind: SegmentKind,
    pub duration: f64,
}

impl Segment {
    pub fn new(kind: SegmentKind, duration: f64) -> Result<Self> {
        check_duration(duration)?;
        Ok(Self { kind, duration })
    }
}

/// Accelerated segment lasting rapidity `eta`, as a transformation from the
/// inertial modes before it to the inertial modes after it.
///
/// The accelerated period is `A† G(η) A`. Reversing the direction of
/// acceleration multiplies `A_mn` by `(-1)^(m+n)`, which flips the sign of the
/// first-order coefficients and leaves the second-order ones alone.
pub fn accelerated_segment(
    geom: &CavityGeometry,
    eta: f64,
    direction: Direction,
    window: usize,
) -> Result<PerturbativeMatrix> {
    check_duration(eta)?;
    let w = window as i64;
    let dim = 2 * window + 1;
    let s = geom.s();
    let sign = match direction {
        Direction::Right => 1.0,
        Direction::Left => -1.0,
    };
    let turns_per_mode = eta / (2.0 * geom.log_ratio());
    let phases: Vec<Complex64> = (-w..=w)
        .map(|n| phase_from_turns((n as f64 + s) * turns_per_mode))
        .collect();

    let a1 = DMatrix::from_fn(dim, dim, |i, j| {
        sign * first_order_entry(i as i64 - w, j as i64 - w, s)
    });
    let a2 = DMatrix::from_fn(dim, dim, |i, j| second_order_entry(i as i64 - w, j as i64 - w, s));

    let order1 = DMatrix::from_fn(dim, dim, |i, j| (phases[i] - phases[j]) * a1[(i, j)]);
    let order2 = DMatrix::from_fn(dim, dim, |i, j| phases[i] * a2[(i, j)] + phases[j] * a2[(j, i)]);

    // A⁽¹⁾ᵀ G A⁽¹⁾ with real A⁽¹⁾, split into cosine and sine parts.
    let a1t = a1.transpose();
    let weighted_re = DMatrix::from_fn(dim, dim, |i, j| phases[i].re * a1[(i, j)]);
    let weighted_im = DMatrix::from_fn(dim, dim, |i, j| phases[i].im * a1[(i, j)]);
    let re = &a1t * weighted_re;
    let im = &a1t * weighted_im;
    let sandwich = DMatrix::from_fn(dim, dim, |i, j| Complex64::new(re[(i, j)], im[(i, j)]));

    Ok(PerturbativeMatrix::from_parts(
        window,
        phases,
        order1,
        order2 + sandwich,
    ))
}

/// Free inertial evolution for proper time `tau`: the diagonal phases
/// `exp(iω_n τ)`.
pub fn inertial_segment(geom: &CavityGeometry, tau: f64, window: usize) -> Result<PerturbativeMatrix> {
    check_duration(tau)?;
    let w = window as i64;
    let dim = 2 * window + 1;
    let turns_per_mode = tau / (2.0 * geom.length());
    let phases = (-w..=w)
        .map(|n| phase_from_turns((n as f64 + geom.s()) * turns_per_mode))
        .collect();
    Ok(PerturbativeMatrix::from_parts(
        window,
        phases,
        DMatrix::zeros(dim, dim),
        DMatrix::zeros(dim, dim),
    ))
}

/// The phases that the closed-form degradation formulas need, when a
/// scenario reduces to one of the shapes they cover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedFormPhases {
    /// No acceleration at all.
    Unaccelerated,
    /// A single accelerated segment, with `E₁ = exp(iπη/ln(b/a))`.
    Single { e1: UnitPhase },
    /// Accelerate, coast for `τ₂`, then accelerate the opposite way for the
    /// same proper time; `E₂ = exp(iπτ₂/δ)`.
    OneWay { e1: UnitPhase, e2: UnitPhase },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TravelScenario {
    geometry: CavityGeometry,
    segments: Vec<Segment>,
}

impl TravelScenario {
    pub fn new(geometry: CavityGeometry, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::EmptyScenario);
        }
        for seg in &segments {
            check_duration(seg.duration)?;
        }
        Ok(Self { geometry, segments })
    }

    /// Accelerate to the right for proper time `tau1` and stay accelerated.
    pub fn single(geometry: CavityGeometry, tau1: f64) -> Result<Self> {
        Self::new(geometry, vec![Segment::new(SegmentKind::AccelerateRight, tau1)?])
    }

    /// Accelerate right for `tau1`, coast for `tau2`, then brake for `tau1`.
    pub fn one_way(geometry: CavityGeometry, tau1: f64, tau2: f64) -> Result<Self> {
        Self::new(
            geometry,
            vec![
                Segment::new(SegmentKind::AccelerateRight, tau1)?,
                Segment::new(SegmentKind::Inertial, tau2)?,
                Segment::new(SegmentKind::AccelerateLeft, tau1)?,
            ],
        )
    }

    pub fn geometry(&self) -> &CavityGeometry {
        &self.geometry
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn with_geometry(&self, geometry: CavityGeometry) -> Self {
        Self {
            geometry,
            segments: self.segments.clone(),
        }
    }

    /// Compose the segment transformations in order, truncating at `h²`.
    pub fn graft(&self, window: usize) -> Result<PerturbativeMatrix> {
        let geom = &self.geometry;
        let mut total = PerturbativeMatrix::identity(window);
        for seg in &self.segments {
            let step = match seg.kind {
                SegmentKind::AccelerateRight => accelerated_segment(
                    geom,
                    geom.rapidity_from_proper_time(seg.duration)?,
                    Direction::Right,
                    window,
                )?,
                SegmentKind::AccelerateLeft => accelerated_segment(
                    geom,
                    geom.rapidity_from_proper_time(seg.duration)?,
                    Direction::Left,
                    window,
                )?,
                SegmentKind::Inertial => inertial_segment(geom, seg.duration, window)?,
            };
            total = total.then(&step)?;
        }
        Ok(total)
    }

    /// Recognise scenarios covered by the closed forms. Zero-length segments
    /// are dropped, and inertial coasting before the first or after the last
    /// acceleration only contributes phases that no measure sees.
    pub fn closed_form_phases(&self) -> Option<ClosedFormPhases> {
        let active: Vec<Segment> = self
            .segments
            .iter()
            .copied()
            .filter(|s| s.duration > 0.0)
            .collect();
        let first = active.iter().position(|s| s.kind != SegmentKind::Inertial);
        let Some(first) = first else {
            return Some(ClosedFormPhases::Unaccelerated);
        };
        let last = active.iter().rposition(|s| s.kind != SegmentKind::Inertial)?;
        let core = &active[first..=last];
        let geom = &self.geometry;
        let e1 = |tau: f64| geom.u_parameter(tau).ok().map(UnitPhase::from_turns);
        let opposite = |x: SegmentKind, y: SegmentKind| {
            matches!(
                (x, y),
                (SegmentKind::AccelerateRight, SegmentKind::AccelerateLeft)
                    | (SegmentKind::AccelerateLeft, SegmentKind::AccelerateRight)
            )
        };
        match core {
            [one] => Some(ClosedFormPhases::Single {
                e1: e1(one.duration)?,
            }),
            [x, y] if opposite(x.kind, y.kind) && x.duration == y.duration => {
                Some(ClosedFormPhases::OneWay {
                    e1: e1(x.duration)?,
                    e2: UnitPhase::ONE,
                })
            }
            [x, coast, y]
                if coast.kind == SegmentKind::Inertial
                    && opposite(x.kind, y.kind)
                    && x.duration == y.duration =>
            {
                Some(ClosedFormPhases::OneWay {
                    e1: e1(x.duration)?,
                    e2: UnitPhase::from_turns(geom.v_parameter(coast.duration).ok()?),
                })
            }
            _ => None,
        }
    }
}
