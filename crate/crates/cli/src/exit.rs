use std::fmt;

use padic_res::limits::LimitsError;
use padic_res::link::LinkError;
use padic_res::padic::PadicError;
use padic_res::poly::ParseError;
use padic_res::resultant::ResultantError;

/// The computation ran but produced no usable answer (vanishing resultant,
/// degenerate input, exhausted precision).
pub const UNDETERMINED: i32 = 1;
/// Malformed input or arguments.
pub const USER_ERROR: i32 = 2;
/// A configured work budget would be exceeded.
pub const BUDGET: i32 = 3;
/// Two independent computations disagree; always a bug.
pub const ORACLE_MISMATCH: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn user(message: impl Into<String>) -> Self {
        CliError { code: USER_ERROR, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError { code: ORACLE_MISMATCH, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn resultant_code(e: &ResultantError) -> i32 {
    match e {
        ResultantError::BudgetExceeded { .. } => BUDGET,
        ResultantError::OracleImprecise { .. } => UNDETERMINED,
        _ => USER_ERROR,
    }
}

fn padic_code(e: &PadicError) -> i32 {
    match e {
        PadicError::NotPrime(_) | PadicError::InvalidLevel(_) => USER_ERROR,
        _ => UNDETERMINED,
    }
}

fn limits_code(e: &LimitsError) -> i32 {
    match e {
        LimitsError::NotPrime(_)
        | LimitsError::InvalidPrecision(_)
        | LimitsError::ZeroPolynomial
        | LimitsError::InvalidInput(_)
        | LimitsError::WindowTooShort { .. } => USER_ERROR,
        LimitsError::VanishingResultant { .. } | LimitsError::FitFailed { .. } => UNDETERMINED,
        LimitsError::CongruenceViolated { .. } => ORACLE_MISMATCH,
        LimitsError::Resultant(r) => resultant_code(r),
        LimitsError::Padic(p) => padic_code(p),
    }
}

fn link_code(e: &LinkError) -> i32 {
    match e {
        LinkError::Json(_)
        | LinkError::Schema { .. }
        | LinkError::MissingSublink(_)
        | LinkError::Parse { .. }
        | LinkError::InvalidCovering(_)
        | LinkError::InvalidTwist(_)
        | LinkError::OracleScale { .. } => USER_ERROR,
        LinkError::SignMismatch { .. } | LinkError::PrefactorMismatch { .. } => ORACLE_MISMATCH,
        LinkError::OracleImprecise { .. } | LinkError::Degenerate | LinkError::InsufficientTruncation { .. } => {
            UNDETERMINED
        }
        LinkError::Resultant(r) => resultant_code(r),
        LinkError::Limits(l) => limits_code(l),
        LinkError::Padic(p) => padic_code(p),
    }
}

macro_rules! from_error {
    ($ty:ty, $code:expr) => {
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError { code: $code(&e), message: e.to_string() }
            }
        }
    };
}

from_error!(ResultantError, resultant_code);
from_error!(PadicError, padic_code);
from_error!(LimitsError, limits_code);
from_error!(LinkError, link_code);
from_error!(ParseError, |_: &ParseError| USER_ERROR);
