//! Atomic steady state at the plotted parameters, three ways.

use cascade_squeezing::bloch::{integrate_to_steady, steady_state_by_linear_solve, BlochState};
use cascade_squeezing::model::{atomic_steady_state, params_from_plot_set};

fn main() -> cascade_squeezing::Result<()> {
    let params = params_from_plot_set(0.5, 0.8, 0.3, 0.6)?;
    println!("g = {:.6}, eta = {:.6}", params.g(), params.eta());

    let closed = atomic_steady_state(&params)?;
    let solved = steady_state_by_linear_solve(&params)?;
    let run = integrate_to_steady(&params, BlochState::ground(0.0), 1e-10)?;
    let last = run.last();

    println!(
        "{:>10} {:>14} {:>14} {:>14}",
        "", "closed form", "linear solve", "integrated"
    );
    for (name, a, b, c) in [
        ("sigma_c", closed.sigma_c, solved.sigma_c, last.sigma_c.re),
        ("eta_a", closed.eta_a, solved.eta_a, last.eta_a),
        ("eta_b", closed.eta_b, solved.eta_b, last.eta_b),
        ("eta_c", closed.eta_c, solved.eta_c, last.eta_c()),
    ] {
        println!("{name:>10} {a:>14.10} {b:>14.10} {c:>14.10}");
    }
    println!(
        "settled at t = {:.1} after {} steps",
        last.time,
        run.samples.len() - 1
    );
    Ok(())
}
