//! Golden-section search for the best drive.

use cascade_squeezing::sweep::{maximize, BaseRates, Quantity};
use cascade_squeezing::Error;

fn main() -> cascade_squeezing::Result<()> {
    for gamma in [0.0, 0.3] {
        let base = BaseRates {
            gamma_c: 0.5,
            kappa: 0.8,
            gamma,
        };
        let best = maximize(&base, Quantity::SPlus, (0.0, 20.0), 1e-10)?;
        println!(
            "gamma = {gamma}: S+ max {:.10} at eps {:.8} ({} evaluations)",
            best.value_star, best.eps_star, best.evaluations
        );
    }
    println!("25/48 = {:.10}", 25.0 / 48.0);

    // S- keeps rising towards 1/3, so the search ends on the bracket
    let base = BaseRates {
        gamma_c: 0.5,
        kappa: 0.8,
        gamma: 0.3,
    };
    match maximize(&base, Quantity::SMinus, (0.0, 20.0), 1e-8) {
        Err(Error::BoundaryMaximum { side, at, value }) => {
            println!("S- has no interior maximum: {side} end, S-({at}) = {value:.6}")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
