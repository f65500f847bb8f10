//! Resultants: Sylvester/Bareiss, subresultant PRS, exact cyclotomic norms,
//! iterated p-power cyclic resultants (fast path and literal baseline) and a
//! numerical root-product oracle.

mod cyclic;
mod cyclo;
mod oracle;
mod prs;
mod sylvester;

use thiserror::Error;

pub use cyclic::{
    cyclic_factors_with, cyclic_resultant, cyclic_resultant_baseline, cyclic_resultant_with, cyclotomic_factor,
    CyclicRequest, FactorMask,
};
pub use cyclo::{berkowitz_determinant, CycloInt};
pub use oracle::root_product_oracle;
pub use prs::{resultant_prs, resultant_reduced};
pub use sylvester::{bareiss_determinant, sylvester_dimension, sylvester_matrix, sylvester_resultant};

/// Environment variable overriding [`Budget::max_degree`].
pub const BUDGET_ENV: &str = "PADIC_RES_BUDGET";

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ResultantError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("level vector has {levels} entries but the polynomial has {nvars} variables")]
    ArityMismatch { nvars: usize, levels: usize },
    #[error("levels must be positive, got {0:?}")]
    InvalidLevels(Vec<u32>),
    #[error("mask index {index} for t{variable} exceeds its level {level}")]
    MaskOutOfRange { variable: usize, index: u32, level: u32 },
    #[error("budget exceeded: {what} {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64, what: &'static str },
    #[error("numerical oracle did not settle on an integer at {bits} bits (residual {residual})")]
    OracleImprecise { bits: u32, residual: f64 },
}

/// Work limits for the cyclic resultant routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest admissible `p^n` for a single variable.
    pub max_degree: u64,
    /// Largest admissible number of root-of-unity tuples `prod p^n_i`.
    pub max_points: u64,
    /// Largest Sylvester matrix the literal baseline may build.
    pub baseline_dimension: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 4096, max_points: 1 << 20, baseline_dimension: 256 }
    }
}

impl Budget {
    /// Default budget, with `max_degree` taken from `PADIC_RES_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(v) = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b.max_degree = v;
        }
        b
    }
}
