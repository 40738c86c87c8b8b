// Polylogarithms on the unit circle and the `Q` function built from them.

use std::error::Error;
use std::f64::consts::PI;

use dirac_cavity::polylog::{q_function, re_polylog, re_polylog_series};
use dirac_cavity::UnitPhase;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for turns in [0.0, 0.1, 0.25, 0.5] {
        let z = UnitPhase::from_turns(turns);
        for order in [4, 6] {
            let closed = re_polylog(order, z)?;
            let series = re_polylog_series(order, z, 1000)?;
            println!(
                "Re Li_{order}(e^(2πi·{turns})) = {closed:.15}  series {:.15} ± {:.1e}",
                series.value, series.tail_bound
            );
        }
    }
    // At z = 1 only zeta values remain: Q(α, 1) = α²π²/480 + 1/48.
    let q = q_function(2.0, UnitPhase::ONE);
    println!("Q(2, 1) = {q:.15}, from zeta values {:.15}", PI * PI / 120.0 + 1.0 / 48.0);
    println!("peak degradation π²/30 + 1/12 = {:.10}", PI * PI / 30.0 + 1.0 / 12.0);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
