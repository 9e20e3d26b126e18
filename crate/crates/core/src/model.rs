//! System parameters and the closed-form atomic steady state.
//!
//! All rates share one arbitrary inverse-time unit. The two derived rates
//! are the stimulated emission decay constant `gamma_c = 4 g^2 / kappa` and
//! the effective drive `epsilon = 2 g eta / kappa`.

use serde::Serialize;

use crate::error::{invalid, Result};

/// Physical rates of the driven cavity plus the two derived rates.
///
/// Fields are private so that `gamma_c` and `epsilon` always agree with
/// `(g, kappa, eta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemParams {
    g: f64,
    kappa: f64,
    eta: f64,
    gamma: f64,
    gamma_c: f64,
    epsilon: f64,
}

fn require_finite(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(invalid(field, format!("must be finite, got {value}")))
    }
}

impl SystemParams {
    /// Builds parameters from the Hamiltonian rates `(g, kappa, eta, gamma)`.
    pub fn derive(g: f64, kappa: f64, eta: f64, gamma: f64) -> Result<Self> {
        for (field, v) in [("g", g), ("kappa", kappa), ("eta", eta), ("gamma", gamma)] {
            require_finite(field, v)?;
        }
        if kappa <= 0.0 {
            return Err(invalid("kappa", format!("must be > 0, got {kappa}")));
        }
        if g <= 0.0 {
            return Err(invalid("g", format!("must be > 0, got {g}")));
        }
        if eta < 0.0 {
            return Err(invalid("eta", format!("must be >= 0, got {eta}")));
        }
        if gamma < 0.0 {
            return Err(invalid("gamma", format!("must be >= 0, got {gamma}")));
        }
        Ok(Self::assemble(g, kappa, eta, gamma))
    }

    /// Builds parameters from the plotting set `(gamma_c, kappa, gamma, epsilon)`
    /// by inverting `gamma_c = 4 g^2 / kappa` and `epsilon = 2 g eta / kappa`.
    pub fn from_plot_set(gamma_c: f64, kappa: f64, gamma: f64, epsilon: f64) -> Result<Self> {
        for (field, v) in [
            ("gamma_c", gamma_c),
            ("kappa", kappa),
            ("gamma", gamma),
            ("epsilon", epsilon),
        ] {
            require_finite(field, v)?;
        }
        if gamma_c <= 0.0 {
            return Err(invalid("gamma_c", format!("must be > 0, got {gamma_c}")));
        }
        if kappa <= 0.0 {
            return Err(invalid("kappa", format!("must be > 0, got {kappa}")));
        }
        if gamma < 0.0 {
            return Err(invalid("gamma", format!("must be >= 0, got {gamma}")));
        }
        if epsilon < 0.0 {
            return Err(invalid("epsilon", format!("must be >= 0, got {epsilon}")));
        }
        let g = (gamma_c * kappa).sqrt() / 2.0;
        let eta = epsilon * kappa / (2.0 * g);
        Ok(Self::assemble(g, kappa, eta, gamma))
    }

    /// Parameters with the atom decoupled from every cavity mode (`g = 0`).
    ///
    /// Only the Fock-space oracle accepts these; the closed forms divide by
    /// `gamma_c` and reject them.
    pub fn uncoupled(kappa: f64, eta: f64, gamma: f64) -> Result<Self> {
        for (field, v) in [("kappa", kappa), ("eta", eta), ("gamma", gamma)] {
            require_finite(field, v)?;
        }
        if kappa <= 0.0 {
            return Err(invalid("kappa", format!("must be > 0, got {kappa}")));
        }
        if eta < 0.0 {
            return Err(invalid("eta", format!("must be >= 0, got {eta}")));
        }
        if gamma < 0.0 {
            return Err(invalid("gamma", format!("must be >= 0, got {gamma}")));
        }
        Ok(Self::assemble(0.0, kappa, eta, gamma))
    }

    /// Same `gamma_c`, `kappa` and `gamma`, different effective drive.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::from_plot_set(self.gamma_c, self.kappa, self.gamma, epsilon)
    }

    fn assemble(g: f64, kappa: f64, eta: f64, gamma: f64) -> Self {
        Self {
            g,
            kappa,
            eta,
            gamma,
            gamma_c: 4.0 * g * g / kappa,
            epsilon: 2.0 * g * eta / kappa,
        }
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn gamma_c(&self) -> f64 {
        self.gamma_c
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Total atomic decay rate `gamma_c + gamma`.
    pub fn total_decay(&self) -> f64 {
        self.gamma_c + self.gamma
    }

    /// Vacuum quadrature variance of one cavity mode, `gamma_c / kappa`.
    pub fn vacuum_level(&self) -> f64 {
        self.gamma_c / self.kappa
    }

    /// Errors unless the closed-form expressions are defined for these rates.
    pub(crate) fn require_analytic(&self) -> Result<()> {
        if self.gamma_c > 0.0 {
            Ok(())
        } else {
            Err(invalid(
                "gamma_c",
                "closed-form results need gamma_c > 0 (g > 0)",
            ))
        }
    }
}

/// Derives `gamma_c` and `epsilon` from the Hamiltonian rates.
pub fn derive_params(g: f64, kappa: f64, eta: f64, gamma: f64) -> Result<SystemParams> {
    SystemParams::derive(g, kappa, eta, gamma)
}

/// Inverts the plotting parameterization to Hamiltonian rates.
pub fn params_from_plot_set(
    gamma_c: f64,
    kappa: f64,
    gamma: f64,
    epsilon: f64,
) -> Result<SystemParams> {
    SystemParams::from_plot_set(gamma_c, kappa, gamma, epsilon)
}

/// Steady-state atomic expectation values under adiabatic elimination.
///
/// `sigma_*` are the lowering-operator expectations, `eta_*` the level
/// populations of the top (`a`), middle (`b`) and bottom (`c`) levels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AtomicSteadyState {
    pub sigma_a: f64,
    pub sigma_b: f64,
    pub sigma_c: f64,
    pub eta_a: f64,
    pub eta_b: f64,
    pub eta_c: f64,
}

impl AtomicSteadyState {
    pub fn population_sum(&self) -> f64 {
        self.eta_a + self.eta_b + self.eta_c
    }
}

/// Closed-form steady state of the adiabatically eliminated atom.
pub fn atomic_steady_state(params: &SystemParams) -> crate::Result<AtomicSteadyState> {
    params.require_analytic()?;
    let big_g = params.total_decay();
    let eps = params.epsilon();
    let g2 = big_g * big_g;
    let e2 = eps * eps;
    let denom = g2 + 3.0 * e2;
    let upper = e2 / denom;
    Ok(AtomicSteadyState {
        sigma_a: 0.0,
        sigma_b: 0.0,
        sigma_c: eps * big_g / denom,
        eta_a: upper,
        eta_b: upper,
        eta_c: (e2 + g2) / denom,
    })
}
