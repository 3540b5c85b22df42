//! Exact-arithmetic toolkit for Gale duality, Radon partitions, Kneser-family
//! conditions, hyperplane transversals, and equipartition certificates.
//!
//! Everything is computed over arbitrary-precision rationals; solvers return
//! certificates (witness points, convex coefficients, orthant counts) that can
//! be re-verified by exact substitution, independently of the search that
//! produced them.

pub mod equipartition;
pub mod gale;
pub mod generate;
pub mod kneser;
pub mod linalg;
pub mod lp;
pub(crate) mod par;
pub mod radon;
pub mod rat;
pub mod transversal;

pub use rat::Rat;

use thiserror::Error;

/// Crate-wide error type. Variants map onto the CLI exit-code contract:
/// hypothesis violations and exhausted searches are distinguished so callers
/// can tell bad inputs from falsification events.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("configuration does not affinely span its ambient space")]
    SpanDeficient,
    #[error("dual configuration is not a Gale dual of the primal: {0}")]
    GaleMismatch(String),
    #[error("hyperplane does not strictly separate the dual configuration")]
    NotSeparating,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),
    #[error("outside every proven regime: {0}")]
    RegimeViolation(String),
    #[error("desk-scale guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("search exhausted without a certificate: {0}")]
    Exhausted(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
