//! Photon statistics and quadrature squeezing of the driven cavity mode `b`.
//!
//! Quadratures are `b+ = b^+ + b` and `b- = i(b^+ - b)`. Vacuum noise has
//! been dropped under normal ordering, so the vacuum variance of either
//! quadrature is `gamma_c / kappa` rather than 1.

use serde::Serialize;

use crate::model::{atomic_steady_state, SystemParams};
use crate::Result;

/// Mean photon number of mode `b` and its three contributions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhotonReport {
    pub n_bar: f64,
    /// Photons supplied by the coherent drive, `4 eta^2 / kappa^2`.
    pub drive_term: f64,
    /// Photons absorbed by the atom, `(8 eta g / kappa^2) <sigma_c>`.
    pub absorbed_term: f64,
    /// Photons emitted by the atom, `(gamma_c / kappa) <eta_a>`.
    pub emitted_term: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureReport {
    pub var_plus: f64,
    pub var_minus: f64,
    pub vacuum_level: f64,
    /// Lower bound on `Δb+ Δb-` from the commutator.
    pub f_lower: f64,
    /// The product `Δb+ Δb-` itself.
    pub f_product: f64,
    pub s_plus: f64,
    pub s_minus: f64,
}

/// Steady-state first and second moments of `b`, all real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldMoments {
    pub mean_b: f64,
    pub mean_b_squared: f64,
    pub n_bar: f64,
}

/// Shorthand for the recurring pieces `G = gamma_c + gamma`, `G^2`, `eps^2`
/// and `D = G^2 + 3 eps^2`.
struct Pieces {
    g2: f64,
    e2: f64,
    denom: f64,
}

impl Pieces {
    fn of(params: &SystemParams) -> Self {
        let big_g = params.total_decay();
        let eps = params.epsilon();
        let g2 = big_g * big_g;
        let e2 = eps * eps;
        Self {
            g2,
            e2,
            denom: g2 + 3.0 * e2,
        }
    }

    /// `6 eps^4 + G^2 (G^2 + eps^2)`, numerator of the plus-quadrature variance.
    fn plus_numerator(&self) -> f64 {
        6.0 * self.e2 * self.e2 + self.g2 * (self.g2 + self.e2)
    }
}

pub fn mean_photon_number(params: &SystemParams) -> Result<PhotonReport> {
    let atom = atomic_steady_state(params)?;
    let Pieces { e2, denom, .. } = Pieces::of(params);
    let (kappa, gamma_c, gamma) = (params.kappa(), params.gamma_c(), params.gamma());
    let n_bar = 4.0 * e2 / (kappa * gamma_c) - (e2 / kappa) * (3.0 * gamma_c + 4.0 * gamma) / denom;
    let (eta, g) = (params.eta(), params.g());
    Ok(PhotonReport {
        n_bar,
        drive_term: 4.0 * eta * eta / (kappa * kappa),
        absorbed_term: 8.0 * eta * g / (kappa * kappa) * atom.sigma_c,
        emitted_term: gamma_c / kappa * atom.eta_a,
    })
}

pub fn quadrature_report(params: &SystemParams) -> Result<QuadratureReport> {
    params.require_analytic()?;
    let p = Pieces::of(params);
    let vacuum = params.vacuum_level();
    let plus_ratio = p.plus_numerator() / (p.denom * p.denom);
    let minus_ratio = (2.0 * p.e2 + p.g2) / (3.0 * p.e2 + p.g2);
    let f_product =
        vacuum * (p.plus_numerator() * (p.g2 + 2.0 * p.e2) / (p.denom * p.denom * p.denom)).sqrt();
    Ok(QuadratureReport {
        var_plus: vacuum * plus_ratio,
        var_minus: vacuum * minus_ratio,
        vacuum_level: vacuum,
        f_lower: vacuum * p.g2 / (3.0 * p.e2 + p.g2),
        f_product,
        s_plus: 1.0 - plus_ratio,
        s_minus: 1.0 - minus_ratio,
    })
}

pub fn field_moments(params: &SystemParams) -> Result<FieldMoments> {
    let atom = atomic_steady_state(params)?;
    let (kappa, gamma_c, eps) = (params.kappa(), params.gamma_c(), params.epsilon());
    Ok(FieldMoments {
        mean_b: 2.0 / kappa * (params.eta() - params.g() * atom.sigma_c),
        mean_b_squared: 4.0 * eps * eps / (kappa * gamma_c) - 4.0 * eps / kappa * atom.sigma_c,
        n_bar: mean_photon_number(params)?.n_bar,
    })
}

/// Plus and minus variances assembled from the individual moments rather
/// than the simplified closed forms. Used to cross-check the latter.
pub fn variances_from_moments(params: &SystemParams) -> Result<(f64, f64)> {
    let atom = atomic_steady_state(params)?;
    let m = field_moments(params)?;
    let (kappa, gamma_c, eps) = (params.kappa(), params.gamma_c(), params.epsilon());
    // <b b^+> with the atomic factor sigma_c sigma_c^+ = eta_c
    let anti = 4.0 * eps * eps / (kappa * gamma_c) - 4.0 * eps / kappa * atom.sigma_c
        + gamma_c / kappa * atom.eta_c;
    let mean_sq = m.mean_b * m.mean_b;
    // every moment is real, so <b^+2> = <b^2> and <b^+> = <b>
    let plus = m.n_bar + anti + 2.0 * m.mean_b_squared - 2.0 * mean_sq - 2.0 * mean_sq;
    let minus = m.n_bar + anti - 2.0 * m.mean_b_squared + 2.0 * mean_sq - 2.0 * mean_sq;
    Ok((plus, minus))
}
