use thiserror::Error;

use crate::zeros::CacheError;

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("zeta has a pole at s = 1")]
    Pole,

    #[error("gamma-pole: log-gamma is undefined at the non-positive integer {0}")]
    GammaPole(i64),

    #[error("contour-contains-pole: circle of radius {radius} around {center} encloses s = 1")]
    ContourContainsPole { center: String, radius: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no-closed-form: {0}")]
    NoClosedForm(String),

    #[error("precision-unattainable: trials {first} and {second} disagree")]
    PrecisionUnattainable { first: String, second: String },

    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("imaginary residue {residue:e} of Z({t}) exceeds the working tolerance")]
    ImaginaryResidue { t: String, residue: f64 },

    #[error("possible-missed-zeros: found {found} sign changes up to T = {height}, expected about {expected:.2}")]
    PossibleMissedZeros {
        height: f64,
        found: usize,
        expected: f64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("need-more-zeros: target error unreachable with {available} zeros (estimated {estimated} needed)")]
    NeedMoreZeros { available: usize, estimated: usize },

    #[error("zero cache holds {available} records, {required} required")]
    CacheTooShort { required: usize, available: usize },

    #[error("zero cache certifies {available} digits, {required} required")]
    CacheTooCoarse { required: u32, available: u32 },

    #[error("zero cache is not contiguous")]
    CacheNotContiguous,

    #[error(transparent)]
    Cache(#[from] CacheError),
}
