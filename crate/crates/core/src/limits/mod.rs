//! p-adic limits of cyclic resultants: certified estimates, zero and sign
//! predicates, Iwasawa invariants, the binomial family `a t1^n + g` and
//! order-invariance checks for multiple sequences.

mod estimate;
mod example36;
mod invariance;
mod iwasawa;

use thiserror::Error;

use crate::padic::PadicError;
use crate::resultant::ResultantError;

pub use estimate::{
    limit_estimate, limit_estimate_with, predicted_sign, zero_limit_predicate, Certified, LimitEstimate, MaskKind,
};
pub use example36::{binomial_cyclic_resultant, example36_closed_form, example36_poly, example36_verify, Example36Check};
pub use invariance::{order_invariance_check, InvarianceReport};
pub use iwasawa::{iwasawa_fit, lambda_mu_structural, univariate_cyclic_resultant, IwasawaInvariants};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum LimitsError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precision must be at least 1, got {0}")]
    InvalidPrecision(u32),
    #[error("the zero polynomial has no limit")]
    ZeroPolynomial,
    #[error("resultant vanishes at levels {levels:?}: a root is a p-power root of unity")]
    VanishingResultant { levels: Vec<u32> },
    #[error("diagonal values at levels {levels:?} violate the expected congruence")]
    CongruenceViolated { levels: Vec<u32> },
    #[error("n_max = {n_max} leaves fewer than 3 levels to fit")]
    WindowTooShort { n_max: u32 },
    #[error("no law lambda n + mu p^n + nu fits the last three levels up to n_max = {n_max}")]
    FitFailed { n_max: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
