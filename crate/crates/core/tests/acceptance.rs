//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Reference values are produced inside this file by routes that do not go
//! through the code under test: analytic constants, direct cosine series
//! built from the bracket form of the first-order coefficient, and the
//! quadrature of the mode overlap.

use std::f64::consts::{PI, SQRT_2};
use std::process::ExitCode;
use std::time::Instant;

use dirac_cavity::bogoliubov::{
    accelerated_segment, exact_coefficient, first_order_entry, second_order_entry, ClosedFormPhases,
    Direction, QuadratureOptions, TravelScenario,
};
use dirac_cavity::entanglement::{
    chsh_max_two_mode, degradation, density_oracle, fk_closed, fk_series, negativity_charge,
    negativity_two_mode, oneway_fk, BellSign, EntanglementReport, OrderingConvention, StateSpec,
};
use dirac_cavity::scenario::{run_figure2, run_figure3, ScenarioConfig};
use dirac_cavity::{CavityGeometry, UnitPhase};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ZERO_TOL: f64 = 1e-12;
const PEAK_TOL_CLOSED: f64 = 1e-10;
const PEAK_TOL_SERIES: f64 = 1e-6;
const FIG2_SECONDS: f64 = 5.0;
const FIG3_SECONDS: f64 = 10.0;
const FIG3_POSITIVE: f64 = 1e-8;
const QUADRATURE_SECONDS: f64 = 60.0;
const QUADRATURE_SLOPE: f64 = 2.7;
const SERIES_TOL: f64 = 1e-6;
const ORACLE_SLOPE: f64 = 3.5;
const EQUALITY_TOL: f64 = 1e-12;
const CONTINUITY_TOL: f64 = 1e-5;
const CONVENTION_TOL: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn geometry(s: f64) -> CavityGeometry {
    CavityGeometry::from_length_and_h(1.0, 0.1, s, 0.0).unwrap()
}

/// First-order coefficient in its bracket form `[(-1)^{m+n} - 1](m+n+2s)/(2π²(m-n)³)`.
fn bracket_a1(m: i64, n: i64, s: f64) -> f64 {
    if m == n {
        return 0.0;
    }
    let parity = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
    (parity - 1.0) * (m as f64 + n as f64 + 2.0 * s) / (2.0 * PI * PI * ((m - n) as f64).powi(3))
}

/// `|e^{2πi t} - 1|²` through the cosine.
fn chord_sq(turns: f64) -> f64 {
    2.0 - 2.0 * (2.0 * PI * turns).cos()
}

fn reference_series(k: i64, s: f64, window: i64, weight: impl Fn(i64) -> f64) -> f64 {
    let mut terms: Vec<f64> = (-window..=window)
        .map(|p| weight(k - p) * bracket_a1(k, p, s).powi(2))
        .collect();
    terms.sort_by(f64::total_cmp);
    terms.iter().sum()
}

fn reference_fk(k: i64, s: f64, u: f64, window: i64) -> f64 {
    reference_series(k, s, window, |j| chord_sq(j as f64 * u))
}

fn reference_oneway(k: i64, s: f64, u: f64, v: f64, window: i64) -> f64 {
    reference_series(k, s, window, |j| chord_sq(j as f64 * u) * chord_sq(j as f64 * (u + v)))
}

/// Least-squares slope of `ln y` against `ln x`.
fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

fn figure2_reproduction() -> Outcome {
    let peak = PI * PI / 30.0 + 1.0 / 12.0;
    let start = Instant::now();
    let result = run_figure2(&ScenarioConfig::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < FIG2_SECONDS, || format!("took {elapsed:.2} s"))?;
    ensure(result.rows.len() == 4 * 2 * 101, || format!("{} rows", result.rows.len()))?;

    let value = |s: f64, k: i64, i: usize| {
        result
            .rows
            .iter()
            .find(|r| r.s == s && r.k == k && r.u == Some(i as f64 / 100.0))
            .map(|r| r.f_coefficient)
            .unwrap()
    };
    for r in &result.rows {
        if r.u == Some(0.0) || r.u == Some(1.0) {
            ensure(r.f_coefficient.abs() <= ZERO_TOL, || format!("endpoint value {}", r.f_coefficient))?;
        }
    }
    for k in [1, -1] {
        let v = value(0.0, k, 50);
        ensure((v - peak).abs() <= PEAK_TOL_CLOSED, || format!("peak k={k}: {v} vs {peak}"))?;
        let series = reference_fk(k, 0.0, 0.5, 10_000);
        ensure((series - peak).abs() <= PEAK_TOL_SERIES, || format!("series peak {series}"))?;
    }
    for s in [0.25, 0.5, 0.75] {
        for i in 1..100 {
            let (above, middle, below) = (value(s, 1, i), value(0.0, 1, i), value(s, -1, i));
            ensure(above > middle && middle > below, || {
                format!("ordering fails at s={s}, u={}: {above} {middle} {below}", i as f64 / 100.0)
            })?;
        }
        for i in [0, 100] {
            let spread = (value(s, 1, i) - value(s, -1, i)).abs();
            ensure(spread <= ZERO_TOL, || format!("endpoint spread {spread}"))?;
        }
    }
    Ok(format!("peak {:.10}, {elapsed:.2} s", value(0.0, 1, 50)))
}

fn figure3_reproduction() -> Outcome {
    let mut config = ScenarioConfig::default();
    config.set_grid(100, 100);
    let start = Instant::now();
    let result = run_figure3(&config).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < FIG3_SECONDS, || format!("took {elapsed:.2} s"))?;
    ensure(result.rows.len() == 10_000, || format!("{} rows", result.rows.len()))?;
    let mut zeros = 0;
    let mut smallest_positive = f64::INFINITY;
    for (idx, r) in result.rows.iter().enumerate() {
        let (i, j) = (idx / 100, idx % 100);
        let on_locus = i == 0 || i == 99 || (i + j) % 99 == 0;
        let f = r.f_coefficient;
        if on_locus {
            zeros += 1;
            ensure(f.abs() <= ZERO_TOL, || format!("({i}, {j}) should vanish, got {f}"))?;
        } else {
            smallest_positive = smallest_positive.min(f);
            ensure(f >= FIG3_POSITIVE, || format!("({i}, {j}) should be positive, got {f}"))?;
        }
    }
    Ok(format!("{zeros} zeros, min elsewhere {smallest_positive:.3e}, {elapsed:.2} s"))
}

fn perturbative_unitarity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut worst_first = 0.0f64;
    for case in 0..20 {
        let delta = rng.gen_range(0.5..3.0);
        let h = rng.gen_range(0.01..0.5);
        let s = rng.gen_range(0.0..1.0);
        let theta = rng.gen_range(0.0..2.0 * PI);
        let geom = CavityGeometry::from_length_and_h(delta, h, s, theta).unwrap();
        let eta = rng.gen_range(0.0..10.0);
        let direction = if case % 2 == 0 { Direction::Right } else { Direction::Left };

        let x = accelerated_segment(&geom, eta, direction, 200).unwrap();
        let first = x.order1_unitarity_residual();
        ensure(first <= x.order1_unitarity_tolerance(), || format!("case {case}: first-order residual {first:e}"))?;
        worst_first = worst_first.max(first);

        let residuals: Vec<f64> = [50, 100, 200, 400]
            .iter()
            .map(|&m| accelerated_segment(&geom, eta, direction, m).unwrap().order2_unitarity_residual(10))
            .collect();
        ensure(residuals.windows(2).all(|w| w[1] < w[0]), || {
            format!("case {case}: second-order residuals {residuals:?}")
        })?;
    }
    Ok(format!("worst first-order residual {worst_first:.2e}"))
}

fn quadrature_oracle() -> Outcome {
    let start = Instant::now();
    let hs = [0.02, 0.01, 0.005];
    let opts = QuadratureOptions::default();
    let mut slopes = Vec::new();
    for s in [0.0, 0.25] {
        for (m, n) in [(1, 0), (2, 1), (3, 0)] {
            let residuals: Vec<f64> = hs
                .iter()
                .map(|&h| {
                    let geom = CavityGeometry::from_length_and_h(1.0, h, s, 0.0).unwrap();
                    let exact = exact_coefficient(&geom, m, n, &opts).unwrap().value;
                    let diagonal = if m == n { 1.0 } else { 0.0 };
                    let series = diagonal + h * first_order_entry(m, n, s) + h * h * second_order_entry(m, n, s);
                    (exact - Complex64::new(series, 0.0)).norm()
                })
                .collect();
            let slope = loglog_slope(&hs, &residuals);
            ensure(slope >= QUADRATURE_SLOPE, || format!("({m},{n}) s={s}: slope {slope:.3}, residuals {residuals:?}"))?;
            slopes.push(slope);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < QUADRATURE_SECONDS, || format!("took {elapsed:.1} s"))?;
    let min = slopes.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(format!("min slope {min:.3}, {elapsed:.2} s"))
}

fn series_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for s in [0.0, 0.25, 0.5, 0.75] {
        let geom = geometry(s);
        for k in [1, -1] {
            for i in 0..=100 {
                let u = i as f64 / 100.0;
                let closed = fk_closed(&geom, k, UnitPhase::from_turns(u));
                let library = fk_series(&geom, k, UnitPhase::from_turns(u), 1000);
                let reference = reference_fk(k, s, u, 1000);
                worst = worst.max((closed - library).abs()).max((closed - reference).abs());
            }
        }
    }
    ensure(worst <= SERIES_TOL, || format!("single segment: {worst:e}"))?;
    let geom = geometry(0.0);
    let mut worst_trip = 0.0f64;
    for i in 0..20 {
        for j in 0..20 {
            let (u, v) = (i as f64 / 19.0, j as f64 / 19.0);
            let closed = oneway_fk(&geom, 1, UnitPhase::from_turns(u), UnitPhase::from_turns(v));
            worst_trip = worst_trip.max((closed - reference_oneway(1, 0.0, u, v, 1000)).abs());
        }
    }
    ensure(worst_trip <= SERIES_TOL, || format!("one-way trip: {worst_trip:e}"))?;
    Ok(format!("max differences {worst:.2e} and {worst_trip:.2e}"))
}

fn density_oracle_equivalence() -> Outcome {
    let hs = [0.04, 0.02, 0.01];
    let mut report = Vec::new();
    let cases: [(&str, TravelScenario, StateSpec); 4] = [
        ("two-mode", TravelScenario::single(geometry(0.0), geometry(0.0).proper_time_from_u(0.37).unwrap()).unwrap(), StateSpec::two_mode(1)),
        ("two-mode antiparticle", TravelScenario::single(geometry(0.25), geometry(0.25).proper_time_from_u(0.3).unwrap()).unwrap(), StateSpec::two_mode(-2)),
        ("two-mode one-way", TravelScenario::one_way(geometry(0.5), geometry(0.5).proper_time_from_u(0.3).unwrap(), geometry(0.5).proper_time_from_v(0.45).unwrap()).unwrap(), StateSpec::two_mode(1)),
        ("charge", TravelScenario::single(geometry(0.25), geometry(0.25).proper_time_from_u(0.4).unwrap()).unwrap(), StateSpec::charge(1, -2)),
    ];
    for (name, scenario, state) in cases {
        let x = scenario.graft(200).map_err(|e| e.to_string())?;
        let mut neg_residuals = Vec::new();
        let mut chsh_residuals = Vec::new();
        for &h in &hs {
            let closed = EntanglementReport::closed_form(&scenario, &state, h, 1000).map_err(|e| e.to_string())?;
            let oracle = density_oracle(&x, h, &state).map_err(|e| e.to_string())?;
            neg_residuals.push((oracle.negativity - closed.negativity).abs());
            if let (Some(a), Some(b)) = (oracle.chsh_max, closed.chsh_max) {
                chsh_residuals.push((a - b).abs());
            }
        }
        let slope = loglog_slope(&hs, &neg_residuals);
        ensure(slope >= ORACLE_SLOPE, || format!("{name} negativity slope {slope:.3} ({neg_residuals:?})"))?;
        report.push(format!("{name} {slope:.2}"));
        if !chsh_residuals.is_empty() {
            let slope = loglog_slope(&hs, &chsh_residuals);
            ensure(slope >= ORACLE_SLOPE, || format!("{name} CHSH slope {slope:.3} ({chsh_residuals:?})"))?;
            report.push(format!("{name} CHSH {slope:.2}"));
        }
    }
    Ok(format!("slopes: {}", report.join(", ")))
}

fn charge_structure() -> Outcome {
    let h = 0.1;
    for s in [0.0, 0.25, 0.5] {
        let geom = geometry(s);
        for i in 1..20 {
            let phases = ClosedFormPhases::Single { e1: UnitPhase::from_turns(i as f64 / 20.0) };
            for (k, kp) in [(0, -2), (1, -1), (1, -3), (2, -4), (3, -1)] {
                let c = negativity_charge(&geom, k, kp, &phases, h).map_err(|e| e.to_string())?;
                ensure(c.interference_term == 0.0, || format!("({k},{kp}) interference {}", c.interference_term))?;
            }
            let trip = ClosedFormPhases::OneWay {
                e1: UnitPhase::from_turns(i as f64 / 20.0),
                e2: UnitPhase::from_turns(0.3),
            };
            let c = negativity_charge(&geom, 2, -2, &trip, h).map_err(|e| e.to_string())?;
            ensure(c.interference_term == 0.0, || "one-way even pair".into())?;
        }
    }
    let geom = geometry(0.0);
    let mut worst = 0.0f64;
    for i in 0..=20 {
        let phases = ClosedFormPhases::Single { e1: UnitPhase::from_turns(i as f64 / 20.0) };
        for k in 1..4 {
            let charge = negativity_charge(&geom, k, -k, &phases, h).map_err(|e| e.to_string())?.negativity;
            let two_mode = negativity_two_mode(degradation(&geom, k, &phases), h);
            worst = worst.max((charge - two_mode).abs());
        }
    }
    ensure(worst <= EQUALITY_TOL, || format!("charge vs two-mode {worst:e}"))?;
    let geom = geometry(0.25);
    for i in 1..20 {
        let phases = ClosedFormPhases::Single { e1: UnitPhase::from_turns(i as f64 / 20.0) };
        let c = negativity_charge(&geom, 1, -2, &phases, h).map_err(|e| e.to_string())?;
        let without = 0.5 - 0.25 * (c.fk + c.fk_prime) * h * h;
        ensure(c.interference_term > 0.0 && c.negativity > without, || {
            format!("(1,-2) interference {} at u={}", c.interference_term, i as f64 / 20.0)
        })?;
    }
    Ok(format!("charge vs two-mode within {worst:.1e}"))
}

/// Every public measure for one `(s, k, u)` point.
fn measures(s: f64, k: i64, u: f64) -> Vec<f64> {
    let h = 0.1;
    let geom = geometry(s);
    let e1 = UnitPhase::from_turns(u);
    let f = fk_closed(&geom, k, e1);
    let trip = oneway_fk(&geom, k, e1, UnitPhase::from_turns(0.3));
    let phases = ClosedFormPhases::Single { e1 };
    let charge = negativity_charge(&geom, k.abs(), -k.abs() - 1, &phases, h).unwrap();
    vec![
        f,
        negativity_two_mode(f, h),
        chsh_max_two_mode(f, h),
        trip,
        charge.negativity,
        charge.interference_term,
    ]
}

fn zero_mode_continuity() -> Outcome {
    let mut worst = 0.0f64;
    for k in [1, -1] {
        for i in 0..=100 {
            let u = i as f64 / 100.0;
            for (a, b) in measures(0.0, k, u).iter().zip(measures(1e-6, k, u)) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    ensure(worst <= CONTINUITY_TOL, || format!("jump {worst:e}"))?;
    Ok(format!("largest jump {worst:.2e}"))
}

fn convention_independence() -> Outcome {
    let h = 0.05;
    let mut worst = 0.0f64;
    let states = [
        StateSpec::two_mode(1),
        StateSpec::two_mode(1).with_sign(BellSign::Minus),
        StateSpec::two_mode(-1),
        StateSpec::two_mode(-1).with_sign(BellSign::Minus),
        StateSpec::charge(1, -2),
        StateSpec::charge(1, -2).with_ordering(OrderingConvention::Flipped),
        StateSpec::charge(1, -2).with_sign(BellSign::Minus).with_ordering(OrderingConvention::Flipped),
    ];
    let mut reference: Option<Vec<f64>> = None;
    for theta in [0.0, PI / 2.0, PI] {
        let geom = CavityGeometry::from_length_and_h(1.0, h, 0.0, theta).unwrap();
        let scenario = TravelScenario::one_way(geom, geom.proper_time_from_u(0.35).unwrap(), geom.proper_time_from_v(0.2).unwrap()).unwrap();
        let x = scenario.graft(100).map_err(|e| e.to_string())?;
        let mut values = Vec::new();
        for state in &states {
            let closed = EntanglementReport::closed_form(&scenario, state, h, 1000).map_err(|e| e.to_string())?;
            let oracle = density_oracle(&x, h, state).map_err(|e| e.to_string())?;
            values.extend([closed.negativity, oracle.negativity]);
            values.extend(closed.chsh_max);
            values.extend(oracle.chsh_max);
        }
        let q = exact_coefficient(&geom, 2, 1, &QuadratureOptions::default()).map_err(|e| e.to_string())?;
        values.extend([q.value.re, q.value.im]);
        match &reference {
            None => reference = Some(values),
            Some(r) => {
                for (a, b) in r.iter().zip(&values) {
                    worst = worst.max((a - b).abs());
                }
            }
        }
    }
    ensure(worst <= CONVENTION_TOL, || format!("θ changes outputs by {worst:e}"))?;

    // Bell sign and operator ordering within one geometry.
    let geom = geometry(0.0);
    let scenario = TravelScenario::single(geom, geom.proper_time_from_u(0.4).unwrap()).unwrap();
    let x = scenario.graft(100).map_err(|e| e.to_string())?;
    let outcome = |state: &StateSpec| density_oracle(&x, h, state).unwrap();
    let base = outcome(&states[0]);
    let antiparticle = outcome(&states[2]);
    for (reference, state) in [(&base, &states[1]), (&antiparticle, &states[3])] {
        let o = outcome(state);
        let gap = (o.negativity - reference.negativity)
            .abs()
            .max((o.chsh_max.unwrap() - reference.chsh_max.unwrap()).abs());
        ensure(gap <= CONVENTION_TOL, || format!("{state:?} differs by {gap:e}"))?;
        worst = worst.max(gap);
    }
    let charge = outcome(&states[4]).negativity;
    for state in &states[5..] {
        let gap = (outcome(state).negativity - charge).abs();
        ensure(gap <= CONVENTION_TOL, || format!("{state:?} differs by {gap:e}"))?;
        worst = worst.max(gap);
    }
    ensure(base.chsh_max.unwrap() < 2.0 * SQRT_2, || "CHSH not degraded".into())?;
    Ok(format!("largest change {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("single-segment degradation curves", figure2_reproduction),
        ("one-way trip degradation map", figure3_reproduction),
        ("perturbative unitarity", perturbative_unitarity),
        ("quadrature of the mode overlap", quadrature_oracle),
        ("series and closed forms agree", series_equivalence),
        ("explicit density matrices agree", density_oracle_equivalence),
        ("charge-state interference", charge_structure),
        ("continuity at s = 0", zero_mode_continuity),
        ("convention independence", convention_independence),
    ];
    let mut failures = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
