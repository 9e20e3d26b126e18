//! Sweeps of the closed-form quantities over the effective drive `epsilon`,
//! and golden-section maximization along the same axis.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, BracketSide, Error, Result};
use crate::model::SystemParams;
use crate::single_mode::{mean_photon_number, quadrature_report};
use crate::superposed::{superposed_report, superposed_uncertainty};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    NBar,
    VarPlus,
    VarMinus,
    Vacuum,
    FA,
    FB,
    FC,
    FD,
    SPlus,
    SMinus,
    SSup,
    NS,
}

impl Quantity {
    pub const ALL: [Quantity; 12] = [
        Quantity::NBar,
        Quantity::VarPlus,
        Quantity::VarMinus,
        Quantity::Vacuum,
        Quantity::FA,
        Quantity::FB,
        Quantity::FC,
        Quantity::FD,
        Quantity::SPlus,
        Quantity::SMinus,
        Quantity::SSup,
        Quantity::NS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::NBar => "n_bar",
            Quantity::VarPlus => "var_plus",
            Quantity::VarMinus => "var_minus",
            Quantity::Vacuum => "vacuum",
            Quantity::FA => "f_a",
            Quantity::FB => "f_b",
            Quantity::FC => "f_c",
            Quantity::FD => "f_d",
            Quantity::SPlus => "s_plus",
            Quantity::SMinus => "s_minus",
            Quantity::SSup => "s_sup",
            Quantity::NS => "n_s",
        }
    }

    pub fn evaluate(self, params: &SystemParams) -> Result<f64> {
        Ok(match self {
            Quantity::NBar => mean_photon_number(params)?.n_bar,
            Quantity::VarPlus => quadrature_report(params)?.var_plus,
            Quantity::VarMinus => quadrature_report(params)?.var_minus,
            Quantity::Vacuum => quadrature_report(params)?.vacuum_level,
            Quantity::FA => quadrature_report(params)?.f_lower,
            Quantity::FB => quadrature_report(params)?.f_product,
            Quantity::FC => superposed_uncertainty(params)?.0,
            Quantity::FD => superposed_uncertainty(params)?.1,
            Quantity::SPlus => quadrature_report(params)?.s_plus,
            Quantity::SMinus => quadrature_report(params)?.s_minus,
            Quantity::SSup => superposed_report(params)?.s_sup_plus,
            Quantity::NS => superposed_report(params)?.n_s,
        })
    }

    fn valid_list() -> String {
        Self::ALL.map(Quantity::name).join(", ")
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    /// Accepts `s_plus` as well as `s-plus`.
    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|q| q.name() == wanted)
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown quantity `{s}`; valid selectors: {}",
                    Self::valid_list()
                ))
            })
    }
}

/// The fixed rates of a sweep; `epsilon` is the swept variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BaseRates {
    pub gamma_c: f64,
    pub kappa: f64,
    pub gamma: f64,
}

impl BaseRates {
    pub fn at(&self, epsilon: f64) -> Result<SystemParams> {
        SystemParams::from_plot_set(self.gamma_c, self.kappa, self.gamma, epsilon)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub gamma_c: f64,
    pub kappa: f64,
    /// One column group per spontaneous emission rate.
    pub gammas: Vec<f64>,
    pub eps_min: f64,
    pub eps_max: f64,
    pub points: usize,
    pub quantities: Vec<Quantity>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.eps_min.is_nan() || self.eps_min < 0.0 {
            return Err(invalid(
                "eps_min",
                format!("must be >= 0, got {}", self.eps_min),
            ));
        }
        if !self.eps_max.is_finite() || self.eps_max <= self.eps_min {
            return Err(invalid(
                "eps_max",
                format!(
                    "must exceed eps_min = {}, got {}",
                    self.eps_min, self.eps_max
                ),
            ));
        }
        if self.points < 2 {
            return Err(invalid(
                "points",
                format!("need at least 2, got {}", self.points),
            ));
        }
        if self.gammas.is_empty() {
            return Err(invalid("gamma", "at least one value required"));
        }
        if self.quantities.is_empty() {
            return Err(Error::Config(format!(
                "no quantities selected; valid selectors: {}",
                Quantity::valid_list()
            )));
        }
        for &gamma in &self.gammas {
            SystemParams::from_plot_set(self.gamma_c, self.kappa, gamma, self.eps_min)?;
        }
        Ok(())
    }

    /// Uniform grid including both endpoints exactly.
    pub fn grid(&self) -> Vec<f64> {
        let span = self.eps_max - self.eps_min;
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    self.eps_max
                } else {
                    self.eps_min + span * i as f64 / last as f64
                }
            })
            .collect()
    }

    /// Column names after `epsilon`: quantity-major, then one per gamma.
    pub fn column_names(&self) -> Vec<String> {
        let tagged = self.gammas.len() > 1;
        let mut names = Vec::with_capacity(self.quantities.len() * self.gammas.len());
        for q in &self.quantities {
            for gamma in &self.gammas {
                if tagged {
                    names.push(format!("{}_gamma{}", q.name(), gamma));
                } else {
                    names.push(q.name().to_string());
                }
            }
        }
        names
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<(f64, Vec<f64>)>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|(_, v)| v[idx]).collect())
    }

    pub fn epsilons(&self) -> Vec<f64> {
        self.rows.iter().map(|(e, _)| *e).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("epsilon");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (eps, values) in &self.rows {
            let _ = write!(out, "{eps}");
            for v in values {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

pub fn sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let rows = spec
        .grid()
        .into_iter()
        .map(|eps| {
            let mut values = Vec::with_capacity(spec.quantities.len() * spec.gammas.len());
            for q in &spec.quantities {
                for &gamma in &spec.gammas {
                    let params = SystemParams::from_plot_set(spec.gamma_c, spec.kappa, gamma, eps)?;
                    values.push(q.evaluate(&params)?);
                }
            }
            Ok((eps, values))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        columns: spec.column_names(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimumResult {
    pub eps_star: f64,
    pub value_star: f64,
    /// Width of the final search interval.
    pub bracket: f64,
    pub evaluations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section maximization of a scalar function on `[lo, hi]`.
///
/// Reports [`Error::BoundaryMaximum`] when the search collapses onto an end
/// of the original bracket, which is what a monotone function produces.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<OptimumResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(invalid("tol", format!("must be > 0, got {tol}")));
    }
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(invalid(
            "bracket",
            format!("need finite lo < hi, got ({lo}, {hi})"),
        ));
    }
    let mut evaluations = 0usize;
    let mut eval = |x: f64| -> Result<f64> {
        evaluations += 1;
        f(x)
    };

    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    let (mut lower_moved, mut upper_moved) = (false, false);
    while b - a > tol {
        if f1 >= f2 {
            b = x2;
            upper_moved = true;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(x1)?;
        } else {
            a = x1;
            lower_moved = true;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(x2)?;
        }
    }

    let fa = eval(a)?;
    let fb = eval(b)?;
    if !upper_moved && fb >= f1.max(f2) {
        return Err(Error::BoundaryMaximum {
            side: BracketSide::Upper,
            at: hi,
            value: fb,
        });
    }
    if !lower_moved && fa >= f1.max(f2) {
        return Err(Error::BoundaryMaximum {
            side: BracketSide::Lower,
            at: lo,
            value: fa,
        });
    }
    let (eps_star, value_star) =
        [(a, fa), (x1, f1), (x2, f2), (b, fb)]
            .into_iter()
            .fold(
                (x1, f1),
                |best, cand| if cand.1 > best.1 { cand } else { best },
            );
    Ok(OptimumResult {
        eps_star,
        value_star,
        bracket: b - a,
        evaluations,
    })
}

/// Maximizes `quantity` over `epsilon` in `bracket` at fixed base rates.
pub fn maximize(
    base: &BaseRates,
    quantity: Quantity,
    bracket: (f64, f64),
    tol: f64,
) -> Result<OptimumResult> {
    base.at(bracket.0.max(0.0))?;
    golden_section_max(
        |eps| quantity.evaluate(&base.at(eps)?),
        bracket.0,
        bracket.1,
        tol,
    )
}
