//! p-adic scalars and truncated cyclotomic extensions of `Z_p`.

mod approx;
mod cyclo;

use thiserror::Error;

pub use approx::{log_unit, nonp_part, padic_log, power_limit, sign_of, teichmuller, vp, PadicApprox};
pub use cyclo::{nu_zeta, CycloPadic, NuZeta};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the valuation of zero is undefined")]
    ZeroValuation,
    #[error("division by zero")]
    DivisionByZero,
    #[error("result has negative valuation")]
    NegativeValuation,
    #[error("argument is not a principal unit")]
    NotPrincipalUnit,
    #[error("argument is not a unit")]
    NotAUnit,
    #[error("argument lies outside the convergence region of the logarithm series")]
    OutsideConvergence,
    #[error("working precision exhausted before the answer was determined")]
    PrecisionExhausted,
    #[error("invalid cyclotomic level {0}")]
    InvalidLevel(u32),
    #[error("degenerate input: the unit is a root of unity")]
    Degenerate,
}
