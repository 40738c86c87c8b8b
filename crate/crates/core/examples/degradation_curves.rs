// Single-segment degradation against the dimensionless proper time `u`,
// for a particle mode and an antiparticle mode at several boundary offsets.

use std::error::Error;

use dirac_cavity::entanglement::{chsh_max_two_mode, fk_closed, negativity_two_mode};
use dirac_cavity::{CavityGeometry, UnitPhase};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = 0.1;
    println!("{:>5} {:>6} {:>3} {:>12} {:>12} {:>12}", "u", "s", "k", "f", "negativity", "chsh");
    for s in [0.0, 0.25, 0.5, 0.75] {
        let geom = CavityGeometry::from_length_and_h(1.0, h, s, 0.0)?;
        for k in [1, -1] {
            for i in 0..=4 {
                let u = i as f64 / 4.0;
                let f = fk_closed(&geom, k, UnitPhase::from_turns(u));
                println!(
                    "{u:>5.2} {s:>6.2} {k:>3} {f:>12.8} {:>12.8} {:>12.8}",
                    negativity_two_mode(f, h),
                    chsh_max_two_mode(f, h)
                );
            }
        }
    }
    // Entanglement is fully restored after a whole number of periods.
    let geom = CavityGeometry::from_length_and_h(1.0, h, 0.0, 0.0)?;
    let period = geom.degradation_period();
    println!("degradation period {period:.6} (cavity length 1)");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
