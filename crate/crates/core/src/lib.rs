//! High-precision derivatives of ζ′/ζ at s = 1/2, their closed forms, and
//! the sums over the nontrivial zeros that appear in the even-order cases.
//!
//! The layers, bottom up:
//!
//! * [`precision`]: digit budgets, agreement counting, escalation.
//! * [`special`]: γ, Catalan's constant, Bernoulli and Euler numbers,
//!   log Γ, polygamma, the logarithmic integral.
//! * [`zeta`]: ζ(s) and L(s, χ₄) by Euler–Maclaurin, derivative bundles
//!   from Cauchy integrals, closed forms, the Gram series.
//! * [`zeros`]: Hardy's Z, zero isolation and refinement, the zero cache.
//! * [`spectral`]: Σ αₙ⁻ᵏ over zeros with a density tail.
//! * [`identities`]: ξ, the product formulas and identity verification.
//! * [`cli`]: the `zetamill` command.

pub mod cli;
pub mod complex;
pub mod error;
pub mod identities;
pub mod precision;
mod serde_float;
pub mod special;
pub mod spectral;
pub mod zeros;
pub mod zeta;

pub use complex::{Complex, Real};
pub use error::{Result, ZetaError};
pub use precision::{digits_agreement, evaluate_with_escalation, AgreementCount, WorkingPrecision};
