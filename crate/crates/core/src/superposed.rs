//! The superposed mode `c = a + i b` of two independent, identically driven
//! cavity-plus-atom systems.
//!
//! The second (primed) system is an exact copy, so its steady-state
//! expectations equal the unprimed ones and cross-correlations vanish.

use serde::Serialize;

use crate::model::{atomic_steady_state, SystemParams};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuperposedReport {
    pub n_s: f64,
    pub var_plus: f64,
    pub var_minus: f64,
    pub vacuum_level: f64,
    pub f_lower: f64,
    pub f_product: f64,
    pub s_sup_plus: f64,
    pub s_sup_minus: f64,
}

pub fn superposed_report(params: &SystemParams) -> Result<SuperposedReport> {
    let atom = atomic_steady_state(params)?;
    let primed = atom;
    let (kappa, gamma_c, eta, g) = (params.kappa(), params.gamma_c(), params.eta(), params.g());

    let n_s = 8.0 * eta * eta / (kappa * kappa)
        - 8.0 * eta * g / (kappa * kappa) * (atom.sigma_c + primed.sigma_c)
        + gamma_c / kappa * (atom.eta_a + primed.eta_a);

    let (f_lower, variance) = superposed_uncertainty(params)?;
    let vacuum_level = 2.0 * params.vacuum_level();
    let squeezing = 1.0 - variance / vacuum_level;
    Ok(SuperposedReport {
        n_s,
        var_plus: variance,
        var_minus: variance,
        vacuum_level,
        f_lower,
        f_product: variance,
        s_sup_plus: squeezing,
        s_sup_minus: squeezing,
    })
}

/// Returns `(f_c, f_d)`: the commutator bound on `Δc- Δc+` and the product
/// itself. Both quadrature variances are equal, so the product is the variance.
pub fn superposed_uncertainty(params: &SystemParams) -> Result<(f64, f64)> {
    params.require_analytic()?;
    let big_g = params.total_decay();
    let eps = params.epsilon();
    let g2 = big_g * big_g;
    let e2 = eps * eps;
    let denom = 3.0 * e2 + g2;
    let vacuum = params.vacuum_level();
    let f_c = vacuum * (2.0 * g2 / denom);
    let f_d = 2.0 * vacuum * (1.0 - (3.0 * e2 * e2 + 3.0 * e2 * g2) / (denom * denom));
    Ok((f_c, f_d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::params_from_plot_set;
    use crate::single_mode::{mean_photon_number, quadrature_report};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn at(eps: f64) -> SystemParams {
        params_from_plot_set(0.5, 0.8, 0.3, eps).unwrap()
    }

    #[test]
    fn plot_point_values() {
        let r = superposed_report(&at(0.6)).unwrap();
        assert_abs_diff_eq!(r.n_s, 5.78720930232558, epsilon = 1e-12);
        assert_abs_diff_eq!(r.s_sup_plus, 0.365062195781504, epsilon = 1e-12);
        assert_eq!(r.s_sup_plus, r.s_sup_minus);
        assert_eq!(r.var_plus.to_bits(), r.var_minus.to_bits());
    }

    #[test]
    fn vacuum_values() {
        let r = superposed_report(&at(0.0)).unwrap();
        assert_eq!(r.var_plus, 1.25);
        assert_eq!(r.var_minus, 1.25);
        assert_eq!(r.vacuum_level, 1.25);
        assert_eq!((r.s_sup_plus, r.s_sup_minus, r.n_s), (0.0, 0.0, 0.0));
        let (f_c, f_d) = superposed_uncertainty(&at(0.0)).unwrap();
        assert_eq!((f_c, f_d), (1.25, 1.25));
    }

    #[test]
    fn saturates_at_one_third() {
        let r = superposed_report(&at(1e6)).unwrap();
        assert_abs_diff_eq!(r.s_sup_plus, 1.0 / 3.0, epsilon = 1e-9);
    }

    #[test]
    fn uncertainty_at_plot_point() {
        let (f_c, f_d) = superposed_uncertainty(&at(0.6)).unwrap();
        // 0.625 * 2 * 0.64 / 1.72 and 1.25 * (1 - 1.08 / 2.9584)
        assert_abs_diff_eq!(f_c, 0.465116279069767, epsilon = 1e-12);
        assert_abs_diff_eq!(f_d, 0.793672255273121, epsilon = 1e-12);
    }

    #[test]
    fn product_dominates_bound_on_dense_grid() {
        for i in 0..=2000 {
            let eps = 20.0 * i as f64 / 2000.0;
            let (f_c, f_d) = superposed_uncertainty(&at(eps)).unwrap();
            assert!(f_d >= f_c - 1e-12, "eps={eps}");
        }
    }

    #[test]
    fn vacuum_is_double_single_mode() {
        let p = at(0.6);
        let r = superposed_report(&p).unwrap();
        assert_eq!(
            r.vacuum_level,
            2.0 * quadrature_report(&p).unwrap().vacuum_level
        );
    }

    proptest! {
        #[test]
        fn superposition_laws(gc in 1e-2..5.0f64, k in 1e-2..5.0f64, gm in 0.0..3.0f64, eps in 0.0..20.0f64) {
            let p = params_from_plot_set(gc, k, gm, eps).unwrap();
            let r = superposed_report(&p).unwrap();
            let n = mean_photon_number(&p).unwrap().n_bar;
            prop_assert!((r.n_s - 2.0 * n).abs() <= 1e-12 * (2.0 * n).max(1.0));
            let q = quadrature_report(&p).unwrap();
            prop_assert!((r.s_sup_plus - (q.s_plus + q.s_minus) / 2.0).abs() <= 1e-12);
            prop_assert!(r.f_product >= r.f_lower - 1e-12);

            // the unsimplified plus-squeezing expression
            let g2 = p.total_decay().powi(2);
            let e2 = eps * eps;
            let d = 3.0 * e2 + g2;
            let alt = 1.0 - (6.0 * e2 * e2 + g2 * (3.0 * e2 + g2)) / (d * d);
            prop_assert!((alt - r.s_sup_plus).abs() <= 1e-12);

            // variance from populations and coherences of both copies
            let a = atomic_steady_state(&p).unwrap();
            let vac = p.vacuum_level();
            let moment = vac * (2.0 * a.eta_a + 2.0 * a.eta_c) - 2.0 * vac * (2.0 * a.sigma_c * a.sigma_c);
            prop_assert!((moment - r.var_plus).abs() <= 1e-12 * vac.max(1.0));
        }
    }
}
