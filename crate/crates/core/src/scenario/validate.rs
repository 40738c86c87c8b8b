use serde::Serialize;

use super::config::ScenarioConfig;
use crate::bogoliubov::{accelerated_segment, Direction, TravelScenario};
use crate::entanglement::{
    degradation, density_oracle, fk_closed, fk_series, negativity_charge, negativity_two_mode,
    oneway_fk, StateSpec,
};
use crate::error::Result;
use crate::geometry::CavityGeometry;
use crate::polylog::UnitPhase;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

/// A quick pass over the library's invariants, using the configured
/// geometry, window and tolerance.
pub fn run_validate(config: &ScenarioConfig) -> Result<Vec<Check>> {
    config.validate()?;
    let base = config.cavity()?;
    let tol = config.tolerance;
    let mut checks = Vec::new();

    let mut worst = 0.0f64;
    let mut periodic = true;
    for &s in &[0.0, 0.25, 0.5, 0.75] {
        let g = base.with_s(s)?;
        for k in [-2, -1, 1, 2] {
            // Dyadic points, so that u + 1 is exact in floating point.
            for i in 0..=32 {
                let u = i as f64 / 32.0;
                let e1 = UnitPhase::from_turns(u);
                worst = worst.max((fk_closed(&g, k, e1) - fk_series(&g, k, e1, config.window)).abs());
                periodic &= fk_closed(&g, k, e1) == fk_closed(&g, k, UnitPhase::from_turns(u + 1.0));
            }
        }
    }
    checks.push(check("series matches closed form", worst <= tol, format!("max difference {worst:.3e}")));
    checks.push(check("periodic in u", periodic, String::new()));

    let geom = base.with_s(config.s)?;
    let eta = geom.rapidity_from_proper_time(geom.proper_time_from_u(0.37)?)?;
    let residuals: Vec<f64> = [25, 50, 100]
        .iter()
        .map(|&m| accelerated_segment(&geom, eta, Direction::Right, m).map(|x| x.order2_unitarity_residual(10)))
        .collect::<Result<_>>()?;
    let trip = TravelScenario::one_way(geom, geom.proper_time_from_u(0.37)?, geom.proper_time_from_v(0.21)?)?;
    let x = trip.graft(50)?;
    checks.push(check(
        "first-order unitarity",
        x.order1_unitarity_residual() <= x.order1_unitarity_tolerance(),
        format!("residual {:.3e}", x.order1_unitarity_residual()),
    ));
    checks.push(check(
        "second-order unitarity improves with the window",
        residuals.windows(2).all(|w| w[1] < w[0]),
        residuals
            .iter()
            .map(|r| format!("{r:.3e}"))
            .collect::<Vec<_>>()
            .join(", "),
    ));

    let zero_line = oneway_fk(&geom, 1, UnitPhase::from_turns(0.3), UnitPhase::from_turns(0.7));
    let zero_start = oneway_fk(&geom, 1, UnitPhase::ONE, UnitPhase::from_turns(0.4));
    checks.push(check(
        "one-way zeros",
        zero_line <= 1e-12 && zero_start <= 1e-12,
        format!("{zero_line:.3e}, {zero_start:.3e}"),
    ));

    let h = 0.01;
    let single = TravelScenario::single(geom, geom.proper_time_from_u(0.5)?)?;
    let phases = single.closed_form_phases().expect("single segment");
    let graft = single.graft(config.composition_window.min(100))?;
    let oracle = density_oracle(&graft, h, &StateSpec::two_mode(1))?;
    let closed = negativity_two_mode(degradation(&geom, 1, &phases), h);
    let gap = (oracle.negativity - closed).abs();
    checks.push(check("density oracle agrees", gap <= tol, format!("difference {gap:.3e}")));

    let even = negativity_charge(&geom, 1, -3, &phases, h)?;
    let odd = negativity_charge(&geom, 1, -2, &phases, h)?;
    checks.push(check(
        "interference needs opposite parity",
        even.interference_term == 0.0 && odd.interference_term > 0.0,
        String::new(),
    ));

    let rotated = CavityGeometry::new(geom.a(), geom.b(), geom.s(), std::f64::consts::PI)?;
    let theta_gap = (fk_closed(&rotated, 1, UnitPhase::from_turns(0.3)) - fk_closed(&geom, 1, UnitPhase::from_turns(0.3))).abs();
    checks.push(check("boundary phase has no effect", theta_gap == 0.0, String::new()));

    let g0 = base.with_s(0.0)?;
    let g1 = base.with_s(1e-6)?;
    let jump = (fk_closed(&g1, 1, UnitPhase::from_turns(0.5)) - fk_closed(&g0, 1, UnitPhase::from_turns(0.5))).abs();
    checks.push(check("continuous at s = 0", jump <= 1e-5, format!("jump {jump:.3e}")));

    Ok(checks)
}
