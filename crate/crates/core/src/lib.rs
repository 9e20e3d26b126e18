//! Steady-state photon statistics and quadrature squeezing of a coherently
//! driven three-level cascade atom in an open cavity.
//!
//! The closed forms live in [`model`], [`single_mode`] and [`superposed`];
//! [`bloch`] integrates the atomic equations they come from, [`sweep`] and
//! [`figures`] tabulate them, and [`oracle`] checks them against the full
//! master equation on a truncated Fock space.

pub mod bloch;
pub mod cli;
pub mod error;
pub mod figures;
pub mod model;
pub mod oracle;
pub mod report;
pub mod single_mode;
pub mod superposed;
pub mod sweep;

pub use error::{Error, Result};
