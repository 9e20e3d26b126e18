//! Full-model check of the closed forms deep in the adiabatic regime
//! (kappa/g = 20). Takes about half a minute in release mode.

use cascade_squeezing::model::params_from_plot_set;
use cascade_squeezing::oracle::{compare_with_analytic, FockConfig, Tolerances};

fn main() -> cascade_squeezing::Result<()> {
    let params = params_from_plot_set(0.01, 1.0, 0.0, 0.01)?;
    let report = compare_with_analytic(
        &params,
        &FockConfig::with_dims(6, 3, 3),
        &Tolerances::default(),
    )?;
    print!("{}", report.to_text());
    Ok(())
}
