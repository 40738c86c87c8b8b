// The overlap integral of a Minkowski and a Rindler mode, against the
// second-order expansion of the same coefficient.

use std::error::Error;

use dirac_cavity::bogoliubov::{exact_coefficient, first_order_entry, second_order_entry, QuadratureOptions};
use dirac_cavity::CavityGeometry;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = QuadratureOptions::default();
    let s = 0.25;
    for (m, n) in [(1, 0), (2, 1), (0, 0)] {
        println!("A_{m}{n}");
        for h in [0.04, 0.02, 0.01] {
            let geom = CavityGeometry::from_length_and_h(1.0, h, s, 0.0)?;
            let exact = exact_coefficient(&geom, m, n, &opts)?;
            let diagonal = if m == n { 1.0 } else { 0.0 };
            let expansion = diagonal + h * first_order_entry(m, n, s) + h * h * second_order_entry(m, n, s);
            println!(
                "  h = {h:<5} quadrature {:.12} ({} panels), expansion {expansion:.12}, gap {:.2e}",
                exact.value.re,
                exact.panels,
                (exact.value.re - expansion).hypot(exact.value.im)
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
