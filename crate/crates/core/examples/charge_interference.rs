// States entangled in the charge degree of freedom. Modes of opposite
// parity interfere and protect part of the entanglement.

use std::error::Error;

use dirac_cavity::bogoliubov::ClosedFormPhases;
use dirac_cavity::entanglement::negativity_charge;
use dirac_cavity::{CavityGeometry, UnitPhase};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = 0.1;
    let geom = CavityGeometry::from_length_and_h(1.0, h, 0.25, 0.0)?;
    println!("{:>5} {:>8} {:>14} {:>14}", "u", "(k, k')", "negativity", "interference");
    for u in [0.25, 0.5, 0.75] {
        let phases = ClosedFormPhases::Single { e1: UnitPhase::from_turns(u) };
        for (k, kp) in [(1, -1), (1, -2), (1, -3), (2, -1)] {
            let c = negativity_charge(&geom, k, kp, &phases, h)?;
            println!("{u:>5.2} {:>8} {:>14.10} {:>14.10}", format!("({k}, {kp})"), c.negativity, c.interference_term);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
