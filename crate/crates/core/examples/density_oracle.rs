// Negativity and CHSH from explicit reduced density matrices, next to the
// closed forms they should reproduce up to fourth order in `h`.

use std::error::Error;

use dirac_cavity::entanglement::{density_oracle, BellSign, EntanglementReport, StateSpec};
use dirac_cavity::{CavityGeometry, TravelScenario};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let state = StateSpec::two_mode(1).with_sign(BellSign::Minus);
    for h in [0.08, 0.04, 0.02, 0.01] {
        let geom = CavityGeometry::from_length_and_h(1.0, h, 0.0, 0.0)?;
        let scenario = TravelScenario::one_way(geom, geom.proper_time_from_u(0.37)?, geom.proper_time_from_v(0.2)?)?;
        let closed = EntanglementReport::closed_form(&scenario, &state, h, 1000)?;
        let oracle = density_oracle(&scenario.graft(200)?, h, &state)?;
        let (c, o) = (closed.chsh_max.unwrap_or_default(), oracle.chsh_max.unwrap_or_default());
        println!(
            "h = {h:<5} negativity {:.12} vs {:.12} ({:.1e}), CHSH {c:.12} vs {o:.12} ({:.1e})",
            closed.negativity,
            oracle.negativity,
            (closed.negativity - oracle.negativity).abs(),
            (c - o).abs()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
