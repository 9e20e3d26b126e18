//! Relaxation of the atom from its ground state, as CSV on stdout.

use cascade_squeezing::bloch::{BlochState, Integrator};
use cascade_squeezing::model::params_from_plot_set;

fn main() -> cascade_squeezing::Result<()> {
    let params = params_from_plot_set(0.5, 0.8, 0.3, 0.6)?;
    let integrator = Integrator {
        record_every: 20,
        ..Integrator::default()
    };
    let run = integrator.run(&params, BlochState::ground(0.0))?;
    print!("{}", run.to_csv());
    eprintln!(
        "{} samples, step {:.4}, final residual {:.2e}",
        run.samples.len(),
        run.step,
        run.residual
    );
    Ok(())
}
