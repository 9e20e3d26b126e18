//! Photon number and quadrature squeezing of the driven mode, with the
//! drive that maximizes plus-quadrature squeezing.

use cascade_squeezing::model::params_from_plot_set;
use cascade_squeezing::single_mode::{mean_photon_number, quadrature_report};

fn main() -> cascade_squeezing::Result<()> {
    for gamma in [0.0, 0.3] {
        // S+ peaks where eps = (gamma_c + gamma) sqrt(5) / 3
        let eps = (0.5 + gamma) * 5f64.sqrt() / 3.0;
        let params = params_from_plot_set(0.5, 0.8, gamma, eps)?;
        let n = mean_photon_number(&params)?;
        let q = quadrature_report(&params)?;
        println!("gamma = {gamma}, eps = {eps:.6}");
        println!(
            "  n_bar = {:.6} (drive {:.6}, absorbed {:.6}, emitted {:.6})",
            n.n_bar, n.drive_term, n.absorbed_term, n.emitted_term
        );
        println!(
            "  var+ = {:.6}, var- = {:.6}, vacuum = {}",
            q.var_plus, q.var_minus, q.vacuum_level
        );
        println!(
            "  S+ = {:.4}%, S- = {:.4}%",
            100.0 * q.s_plus,
            100.0 * q.s_minus
        );
        println!("  dB+ dB- = {:.6} >= {:.6}", q.f_product, q.f_lower);
    }
    Ok(())
}
