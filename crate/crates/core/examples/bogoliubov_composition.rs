// Compose segment matrices and look at how well the truncated product
// keeps unitarity as the mode window grows.

use std::error::Error;

use dirac_cavity::bogoliubov::{accelerated_segment, inertial_segment, Direction};
use dirac_cavity::CavityGeometry;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let geom = CavityGeometry::from_length_and_h(1.0, 0.1, 0.25, 0.0)?;
    let eta = geom.rapidity_from_proper_time(geom.proper_time_from_u(0.4)?)?;
    let tau = geom.proper_time_from_v(0.3)?;

    for window in [25, 50, 100, 200] {
        let trip = accelerated_segment(&geom, eta, Direction::Right, window)?
            .then(&inertial_segment(&geom, tau, window)?)?
            .then(&accelerated_segment(&geom, eta, Direction::Left, window)?)?;
        println!(
            "M = {window:>3}: first order {:.2e} (allowed {:.2e}), second order on |n| <= 10 {:.3e}",
            trip.order1_unitarity_residual(),
            trip.order1_unitarity_tolerance(),
            trip.order2_unitarity_residual(10)
        );
    }

    let x = accelerated_segment(&geom, eta, Direction::Right, 50)?;
    let h = geom.h();
    for (m, n) in [(1, 0), (2, 1), (1, 1)] {
        println!("A_{m}{n} at h = {h}: {:.10}", x.evaluate(m, n, h)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
