//! Two identical driven cavities combined into `c = a + i b`.

use cascade_squeezing::model::params_from_plot_set;
use cascade_squeezing::single_mode::{mean_photon_number, quadrature_report};
use cascade_squeezing::superposed::superposed_report;

fn main() -> cascade_squeezing::Result<()> {
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10}",
        "eps", "n_s", "2 n_bar", "S_sup", "(S+ + S-)/2"
    );
    for eps in [0.0, 0.2, 0.6, 1.0, 5.0, 20.0] {
        let p = params_from_plot_set(0.5, 0.8, 0.3, eps)?;
        let s = superposed_report(&p)?;
        let q = quadrature_report(&p)?;
        let n = mean_photon_number(&p)?.n_bar;
        println!(
            "{eps:>6} {:>10.5} {:>10.5} {:>10.6} {:>10.6}",
            s.n_s,
            2.0 * n,
            s.s_sup_plus,
            (q.s_plus + q.s_minus) / 2.0
        );
    }
    Ok(())
}
