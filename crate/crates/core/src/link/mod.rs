//! First homology of branched abelian p-coverings of links in integral
//! homology spheres, their p-adic limits, and the twisted Whitehead family.

mod homology;
mod spec;
mod whitehead;

use thiserror::Error;

use crate::limits::LimitsError;
use crate::padic::PadicError;
use crate::poly::ParseError;
use crate::resultant::ResultantError;

pub use homology::{character_oracle, h1_nonp_limit, h1_nonp_limit_with, h1_order, h1_order_with, CoveringSpec, H1Result};
pub use spec::{load_link_spec, trefoil, whitehead_link, LinkSpec};
pub use whitehead::{
    g_partial_product, two_part_exponent_check, whitehead_closed_form, whitehead_delta, ExponentRow, TwoPartReport,
    WhiteheadClosedForm, DEFAULT_TRUNCATION,
};

/// Largest number of components accepted in a link description.
pub const MAX_COMPONENTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum LinkError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("missing sublink entry for components {0:?}")]
    MissingSublink(Vec<usize>),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("invalid twist parameter k = {0}")]
    InvalidTwist(i64),
    #[error("sign of r' for sublink {indices:?} is {found}, predicted {predicted}")]
    SignMismatch { indices: Vec<usize>, found: i32, predicted: i32 },
    #[error("meridian prefactor does not cancel: |G| = {group}, denominator = {denominator}")]
    PrefactorMismatch { group: String, denominator: String },
    #[error("character oracle limited to |G| <= {limit}, got {order}")]
    OracleScale { order: u64, limit: u64 },
    #[error("character oracle did not settle on an integer at {bits} bits (residual {residual})")]
    OracleImprecise { bits: u32, residual: f64 },
    #[error("m = 0 makes every logarithm vanish; the closed form is degenerate")]
    Degenerate,
    #[error("truncation at level {l_max} certifies {achieved} digits, {requested} requested")]
    InsufficientTruncation { l_max: u32, requested: u32, achieved: u32 },
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Limits(#[from] LimitsError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
