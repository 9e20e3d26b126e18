//! The published curves as sweep definitions, at γ_c = 0.5, κ = 0.8.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sweep::{sweep, Quantity, SweepSpec, SweepTable};

pub const PLOT_GAMMA_C: f64 = 0.5;
pub const PLOT_KAPPA: f64 = 0.8;
pub const FIGURE_POINTS: usize = 401;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Mean photon number, with and without spontaneous emission.
    Fig2,
    /// Both quadrature variances against the vacuum level.
    Fig3,
    /// Single-mode uncertainty product and its commutator bound.
    Fig4,
    /// Plus-quadrature squeezing.
    Fig5,
    /// Minus-quadrature squeezing out to large drive.
    Fig6,
    /// Superposed-mode uncertainty product and its bound.
    Fig7,
}

impl Figure {
    pub const ALL: [Figure; 6] = [
        Figure::Fig2,
        Figure::Fig3,
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
        }
    }

    pub fn spec(self) -> SweepSpec {
        use Quantity::*;
        let (quantities, gammas, eps_max) = match self {
            Figure::Fig2 => (vec![NBar], vec![0.0, 0.3], 2.0),
            Figure::Fig3 => (vec![VarMinus, VarPlus, Vacuum], vec![0.3], 2.0),
            Figure::Fig4 => (vec![FA, FB], vec![0.3], 2.0),
            Figure::Fig5 => (vec![SPlus], vec![0.0, 0.3], 2.0),
            Figure::Fig6 => (vec![SMinus], vec![0.0, 0.3], 20.0),
            Figure::Fig7 => (vec![FC, FD], vec![0.3], 2.0),
        };
        SweepSpec {
            gamma_c: PLOT_GAMMA_C,
            kappa: PLOT_KAPPA,
            gammas,
            eps_min: 0.0,
            eps_max,
            points: FIGURE_POINTS,
            quantities,
        }
    }

    pub fn table(self) -> Result<SweepTable> {
        sweep(&self.spec())
    }

    pub fn valid_ids() -> String {
        Self::ALL.map(Figure::id).join(", ")
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.id() == s.trim())
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown figure `{s}`; valid ids: {}",
                    Self::valid_ids()
                ))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_names_follow_curves() {
        assert_eq!(
            Figure::Fig5.spec().column_names(),
            ["s_plus_gamma0", "s_plus_gamma0.3"]
        );
        assert_eq!(
            Figure::Fig3.spec().column_names(),
            ["var_minus", "var_plus", "vacuum"]
        );
    }

    #[test]
    fn plus_squeezing_peaks_near_point_six() {
        let t = Figure::Fig5.table().unwrap();
        let s = t.column("s_plus_gamma0.3").unwrap();
        let (i, max) = s
            .iter()
            .enumerate()
            .fold((0, f64::MIN), |b, (i, &v)| if v > b.1 { (i, v) } else { b });
        assert!((max - 0.5208).abs() < 1e-4, "{max}");
        assert!((t.epsilons()[i] - 0.6).abs() <= 0.01);
    }

    #[test]
    fn minus_squeezing_rises_to_a_third() {
        let t = Figure::Fig6.table().unwrap();
        for name in ["s_minus_gamma0", "s_minus_gamma0.3"] {
            let s = t.column(name).unwrap();
            assert!(s.windows(2).all(|w| w[1] > w[0]), "{name}");
            let at15 = s[300];
            assert_eq!(t.epsilons()[300], 15.0);
            assert!((at15 - 0.3332).abs() < 1e-3, "{name} {at15}");
        }
    }

    #[test]
    fn photon_number_starts_at_zero() {
        let t = Figure::Fig2.table().unwrap();
        assert_eq!(t.rows[0].1, [0.0, 0.0]);
    }

    #[test]
    fn unknown_id_lists_valid_ones() {
        let err = "fig8".parse::<Figure>().unwrap_err().to_string();
        assert!(err.contains("fig2, fig3, fig4, fig5, fig6, fig7"), "{err}");
    }
}
