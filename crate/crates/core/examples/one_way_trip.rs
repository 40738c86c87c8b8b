// Accelerate, coast, decelerate: degradation over the `(u, v)` square and
// the lines where it vanishes.

use std::error::Error;

use dirac_cavity::entanglement::{negativity_two_mode, oneway_fk};
use dirac_cavity::{CavityGeometry, TravelScenario, UnitPhase};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let geom = CavityGeometry::from_length_and_h(1.0, 0.1, 0.0, 0.0)?;
    let n = 8;
    println!("f_1 on a {n}x{n} grid, rows are u, columns are v");
    for i in 0..=n {
        let u = i as f64 / n as f64;
        let row: Vec<String> = (0..=n)
            .map(|j| {
                let v = j as f64 / n as f64;
                format!("{:7.4}", oneway_fk(&geom, 1, UnitPhase::from_turns(u), UnitPhase::from_turns(v)))
            })
            .collect();
        println!("u={u:.3} {}", row.join(" "));
    }

    // The same trip from explicit proper times.
    let (tau1, tau2) = (geom.proper_time_from_u(0.3)?, geom.proper_time_from_v(0.2)?);
    let trip = TravelScenario::one_way(geom, tau1, tau2)?;
    let phases = trip.closed_form_phases().ok_or("trip has a closed form")?;
    let f = dirac_cavity::entanglement::degradation(&geom, 1, &phases);
    println!("tau1 = {tau1:.6}, tau2 = {tau2:.6}: f = {f:.10}, negativity {:.10}", negativity_two_mode(f, 0.1));
    // v = 1 - u lands on a zero of the degradation.
    let zero = oneway_fk(&geom, 1, UnitPhase::from_turns(0.3), UnitPhase::from_turns(0.7));
    println!("on the line u + v = 1: {zero:.2e}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
