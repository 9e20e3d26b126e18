use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("no convergence by t = {horizon}: residual {residual:e}")]
    NonConvergence { horizon: f64, residual: f64 },

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(
        "truncation leakage in mode {mode}: top Fock level holds {population:e} \
         (tolerance {tolerance:e}); increase the truncation dimension"
    )]
    Truncation {
        mode: &'static str,
        population: f64,
        tolerance: f64,
    },

    /// The maximum over the bracket sits on one of its ends.
    #[error("maximum attained at the {side} end of the bracket: f({at}) = {value}")]
    BoundaryMaximum {
        side: BracketSide,
        at: f64,
        value: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketSide {
    Lower,
    Upper,
}

impl std::fmt::Display for BracketSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BracketSide::Lower => f.write_str("lower"),
            BracketSide::Upper => f.write_str("upper"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        field,
        reason: reason.into(),
    }
}
