//! How the adiabatic closed forms degrade as the cavity gets slower.
//!
//! Keeps gamma_c = eps = 0.04 and gamma = 0 while kappa/g falls from 40 to 5.
//! Each point runs the full master equation; expect about half a minute.

use cascade_squeezing::model::params_from_plot_set;
use cascade_squeezing::oracle::{steady_moments, FockConfig};

fn main() -> cascade_squeezing::Result<()> {
    let gamma_c = 0.04;
    println!(
        "{:>6} {:>10} {:>12} {:>10}",
        "kappa/g", "eta_a", "closed form", "rel dev"
    );
    for (ratio, dims) in [
        (40.0, (3, 2, 2)),
        (20.0, (4, 3, 3)),
        (10.0, (5, 3, 3)),
        (5.0, (7, 3, 3)),
    ] {
        let kappa = gamma_c * ratio * ratio / 4.0;
        let params = params_from_plot_set(gamma_c, kappa, 0.0, 0.04)?;
        let m = steady_moments(&params, &FockConfig::with_dims(dims.0, dims.1, dims.2))?;
        let dev = (m.eta_a - 0.25).abs() / 0.25;
        println!(
            "{ratio:>6} {:>10.6} {:>12} {:>9.3}%",
            m.eta_a,
            0.25,
            100.0 * dev
        );
    }
    Ok(())
}
