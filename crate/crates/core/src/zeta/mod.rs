//! ζ(s) and L(s, χ₄) by Euler–Maclaurin summation, their derivatives,
//! closed forms at integers and the Gram series.

pub mod closed;
pub mod derivatives;
pub mod engine;
pub mod gram;

pub use closed::{beta_odd_closed, zeta_even_closed};
pub use derivatives::{zeta_derivatives, zeta_derivatives_with_radius, DerivativeBundle};
pub use engine::ZetaEngine;
pub use gram::{gram_series, gram_series_mobius, mobius};

use crate::complex::Complex;
use crate::error::Result;
use crate::precision::WorkingPrecision;

/// ζ(s) for s ≠ 1.
pub fn zeta(s: &Complex, p: &WorkingPrecision) -> Result<Complex> {
    let bits = p.bits();
    let v = ZetaEngine::new(bits + 8).zeta(s)?;
    Ok(v.with_prec(bits))
}

/// L(s, χ₄) = Σ (−1)ⁿ (2n+1)^{−s}, entire in s.
pub fn dirichlet_beta(s: &Complex, p: &WorkingPrecision) -> Result<Complex> {
    let bits = p.bits();
    let v = ZetaEngine::new(bits + 8).dirichlet_beta(s)?;
    Ok(v.with_prec(bits))
}
