//! A custom sweep: photon number and superposed squeezing for three
//! spontaneous emission rates, printed as CSV.

use cascade_squeezing::sweep::{sweep, Quantity, SweepSpec};

fn main() -> cascade_squeezing::Result<()> {
    let spec = SweepSpec {
        gamma_c: 0.5,
        kappa: 0.8,
        gammas: vec![0.0, 0.3, 1.0],
        eps_min: 0.0,
        eps_max: 3.0,
        points: 31,
        quantities: vec![Quantity::NBar, Quantity::SSup],
    };
    print!("{}", sweep(&spec)?.to_csv());
    Ok(())
}
