use std::f64::consts::PI;

use approx::assert_relative_eq;
use dirac_cavity::bogoliubov::quadrature::{integrate, QuadratureOptions};
use dirac_cavity::bogoliubov::{
    accelerated_segment, first_order_entry, inertial_segment, second_order_entry, vacuum_v_matrix,
    vacuum_v_matrix_conjugate_form, ClosedFormPhases, Direction, TravelScenario,
};
use dirac_cavity::entanglement::{
    density_oracle, fk_closed, fk_series, negativity_two_mode, oneway_fk, StateSpec,
};
use dirac_cavity::geometry::Frame;
use dirac_cavity::polylog::{q_function, re_polylog, re_polylog_series};
use dirac_cavity::{CavityGeometry, UnitPhase};
use proptest::prelude::*;

fn cavity() -> impl Strategy<Value = CavityGeometry> {
    (0.2f64..5.0, 0.001f64..1.5, 0.0f64..1.0, 0.0f64..(2.0 * PI))
        .prop_map(|(delta, h, s, theta)| CavityGeometry::from_length_and_h(delta, h, s, theta).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn first_order_is_antisymmetric(m in -40i64..40, n in -40i64..40, s in 0.0f64..1.0) {
        prop_assert_eq!(first_order_entry(m, n, s), -first_order_entry(n, m, s));
        if (m + n) % 2 == 0 {
            prop_assert_eq!(first_order_entry(m, n, s), 0.0);
        }
    }

    #[test]
    fn second_order_parity(m in -40i64..40, n in -40i64..40, s in 0.0f64..1.0) {
        if m != n && (m + n) % 2 != 0 {
            prop_assert_eq!(second_order_entry(m, n, s), 0.0);
        }
    }

    #[test]
    fn frequencies_are_evenly_spaced(g in cavity(), n in -50i64..50) {
        let gap = g.minkowski_frequency(n + 1) - g.minkowski_frequency(n);
        prop_assert!((gap - PI / g.length()).abs() <= 1e-12 * (1.0 + gap));
        let rgap = g.rindler_frequency(n + 1) - g.rindler_frequency(n);
        prop_assert!((rgap - PI / g.log_ratio()).abs() <= 1e-12 * (1.0 + rgap));
    }

    #[test]
    fn log_ratio_in_terms_of_h(g in cavity()) {
        let expected = 2.0 * (g.h() / 2.0).atanh();
        prop_assert!((g.log_ratio() - expected).abs() <= 1e-13 * expected.max(1.0));
    }

    #[test]
    fn q_is_even_in_the_phase(alpha in -5.0f64..5.0, turns in -2.0f64..2.0) {
        let z = UnitPhase::from_turns(turns);
        prop_assert!((q_function(alpha, z) - q_function(alpha, z.conj())).abs() <= 1e-14);
    }

    #[test]
    fn degradation_is_nonnegative(g in cavity(), k in -6i64..7, u in 0.0f64..1.0, v in 0.0f64..1.0) {
        prop_assert!(fk_closed(&g, k, UnitPhase::from_turns(u)) >= 0.0);
        prop_assert!(oneway_fk(&g, k, UnitPhase::from_turns(u), UnitPhase::from_turns(v)) >= 0.0);
    }

    #[test]
    fn degradation_grows_with_mode(s in 0.0f64..1.0, u in 0.01f64..0.99) {
        // f depends on k only through (k + s)², with a positive coefficient.
        let g = CavityGeometry::from_length_and_h(1.0, 0.1, s, 0.0).unwrap();
        let e1 = UnitPhase::from_turns(u);
        let mut by_alpha: Vec<(f64, f64)> = (-4..5)
            .map(|k| ((k as f64 + s).powi(2), fk_closed(&g, k, e1)))
            .collect();
        by_alpha.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in by_alpha.windows(2) {
            prop_assert!(w[1].1 >= w[0].1 - 1e-15);
        }
    }

    #[test]
    fn periodic_in_u(g in cavity(), k in -4i64..5, i in 0u32..256) {
        // Dyadic u keeps u + 1 exact.
        let u = i as f64 / 256.0;
        let a = fk_closed(&g, k, UnitPhase::from_turns(u));
        let b = fk_closed(&g, k, UnitPhase::from_turns(u + 1.0));
        prop_assert!((a - b).abs() <= 1e-15);
    }

    #[test]
    fn negativity_stays_in_range(f in 0.0f64..0.5, h in 0.0f64..0.3) {
        let n = negativity_two_mode(f, h);
        prop_assert!((0.0..=0.5).contains(&n));
    }

    #[test]
    fn segment_directions_mirror(g in cavity(), eta in 0.0f64..5.0) {
        let right = accelerated_segment(&g, eta, Direction::Right, 30).unwrap();
        let left = accelerated_segment(&g, eta, Direction::Left, 30).unwrap();
        prop_assert!((right.order1() + left.order1()).norm() <= 1e-14);
        prop_assert!((right.order2() - left.order2()).norm() <= 1e-14);
    }

    #[test]
    fn vacuum_forms_agree(g in cavity(), u in 0.0f64..1.0) {
        let tau = g.proper_time_from_u(u).unwrap();
        let x = TravelScenario::single(g, tau).unwrap().graft(40).unwrap();
        let a = vacuum_v_matrix(&x);
        let b = vacuum_v_matrix_conjugate_form(&x);
        prop_assert!((a.entries() - b.entries()).norm() <= 1e-14);
    }
}

#[test]
fn polylog_matches_bernoulli_form() {
    for i in 0..1000 {
        let z = UnitPhase::from_turns(i as f64 / 999.0);
        for order in [4, 6] {
            let closed = re_polylog(order, z).unwrap();
            let series = re_polylog_series(order, z, 2000).unwrap();
            assert!((closed - series.value).abs() <= series.tail_bound + 1e-14, "order {order}, i {i}");
        }
    }
}

#[test]
fn modes_are_normalised() {
    let g = CavityGeometry::from_length_and_h(1.3, 0.2, 0.25, 1.1).unwrap();
    let opts = QuadratureOptions::default();
    for frame in [Frame::Minkowski, Frame::Rindler] {
        for n in [-3, 0, 2, 7] {
            let norm = integrate(
                |z| {
                    let (r, l) = g.mode_components_at_t0(n, z, frame).unwrap();
                    num_complex::Complex64::new(r.norm_sqr() + l.norm_sqr(), 0.0)
                },
                g.a(),
                g.b(),
                8,
                &opts,
            )
            .unwrap();
            assert!((norm.value - 1.0).norm() < 1e-10, "{frame:?} n={n}: {}", norm.value);
        }
    }
}

#[test]
fn inertial_segment_is_diagonal_phase() {
    let g = CavityGeometry::from_length_and_h(1.0, 0.1, 0.5, 0.0).unwrap();
    let x = inertial_segment(&g, 0.7, 10).unwrap();
    assert_eq!(x.order1().norm(), 0.0);
    assert_eq!(x.order2().norm(), 0.0);
    for n in -10..=10 {
        assert_relative_eq!(x.order0_entry(n).unwrap().norm(), 1.0, epsilon = 1e-15);
    }
}

#[test]
fn vacuum_normalisation_converges() {
    let g = CavityGeometry::from_length_and_h(1.0, 0.1, 0.25, 0.0).unwrap();
    let trip = TravelScenario::single(g, g.proper_time_from_u(0.3).unwrap()).unwrap();
    let small = vacuum_v_matrix(&trip.graft(500).unwrap()).normalisation(0.1);
    let large = vacuum_v_matrix(&trip.graft(1000).unwrap()).normalisation(0.1);
    assert!((small - large).abs() < 1e-6, "{small} vs {large}");
}

#[test]
fn series_agrees_with_closed_form_for_many_modes() {
    let g = CavityGeometry::from_length_and_h(1.0, 0.05, 0.75, 0.0).unwrap();
    for k in -5..=5 {
        for i in 0..=20 {
            let e1 = UnitPhase::from_turns(i as f64 / 20.0);
            let gap = (fk_closed(&g, k, e1) - fk_series(&g, k, e1, 2000)).abs();
            assert!(gap < 1e-7, "k={k} i={i} gap={gap:e}");
        }
    }
}

#[test]
fn rob_charge_choice() {
    // At s = 0 the closed forms agree exactly; the oracle counts the zero
    // mode as a particle, which moves it only at fourth order.
    let h = 0.05;
    let g = CavityGeometry::from_length_and_h(1.0, h, 0.0, 0.0).unwrap();
    let scenario = TravelScenario::single(g, g.proper_time_from_u(0.4).unwrap()).unwrap();
    let phases = scenario.closed_form_phases().unwrap();
    let ClosedFormPhases::Single { e1 } = phases else { panic!("single segment") };
    assert_eq!(fk_closed(&g, 1, e1), fk_closed(&g, -1, e1));
    let x = scenario.graft(100).unwrap();
    let particle = density_oracle(&x, h, &StateSpec::two_mode(1)).unwrap();
    let antiparticle = density_oracle(&x, h, &StateSpec::two_mode(-1)).unwrap();
    assert!((particle.negativity - antiparticle.negativity).abs() < h.powi(4));
    assert!((particle.chsh_max.unwrap() - antiparticle.chsh_max.unwrap()).abs() < 1e-12);
}
