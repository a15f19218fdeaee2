//! ξ(s), Ξ(t) and the Hadamard products over the zero ordinates.

use rug::Float;
use serde::Serialize;

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::pi_bits;
use crate::special::gamma::log_gamma_bits;
use crate::spectral::{cutoff_height, tail_estimate, MIN_TAIL_HEIGHT};
use crate::zeros::ZeroCache;
use crate::zeta::ZetaEngine;

fn is_real_integer(s: &Complex) -> Option<i64> {
    (s.im.is_zero() && s.re.is_integer()).then(|| s.re.to_f64() as i64)
}

/// ξ(s) = (s − 1)·π^{−s/2}·Γ(1 + s/2)·ζ(s), entire; ξ(1) = ξ(0) = 1/2.
pub fn xi(s: &Complex, p: &WorkingPrecision) -> Result<Complex> {
    if !s.is_finite() {
        return Err(ZetaError::NonFinite("xi"));
    }
    let bits = p.bits();
    match is_real_integer(s) {
        Some(1) => return Ok(Complex::with_val(bits, 0.5, 0)),
        // Γ(1 + s/2) has a pole where ζ has a trivial zero; reflect
        Some(n) if n <= -2 && n % 2 == 0 => {
            let one = Float::with_val(bits, 1);
            return xi(&(-s.clone()).add_real(&one), p);
        }
        _ => {}
    }
    let wp = bits + 16;
    let s = s.clone().with_prec(wp);
    let zeta = ZetaEngine::new(wp).zeta(&s)?;
    let half_s = s.div_real(&Float::with_val(wp, 2));
    let one = Float::with_val(wp, 1);
    let log_gamma = log_gamma_bits(&half_s.add_real(&one), wp)?;
    let ln_pi = pi_bits(wp).ln();
    let log_factor = log_gamma - half_s.scale(&ln_pi);
    let s_minus_1 = s.add_real(&Float::with_val(wp, -1));
    Ok((s_minus_1 * log_factor.exp() * zeta).with_prec(bits))
}

/// Ξ(t) = ξ(1/2 + it).
pub fn big_xi(t: &Complex, p: &WorkingPrecision) -> Result<Complex> {
    let half = Float::with_val(t.prec().max(p.bits()), 0.5);
    xi(&t.mul_i().add_real(&half), p)
}

/// Ξ(0)·∏_{n≤M}(1 + 1/(4αₙ²)) against its exact value 1/2.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductCheck {
    pub zeros_used: usize,
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub xi_zero: Real,
    /// Ξ(0)·∏ without the tail factor.
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub truncated: Real,
    /// exp(Σ_{tail} 1/(4αₙ²)) from the density model; 1 when M = 0.
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub tail_factor: Real,
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub corrected: Real,
    /// |truncated − 1/2|.
    pub truncated_residual: f64,
    /// |corrected − 1/2|.
    pub residual: f64,
    /// Propagated tail-model error; infinite when no tail model applies.
    pub modeled_error: f64,
}

pub fn xi_product_check(m: usize, cache: &ZeroCache, p: &WorkingPrecision) -> Result<ProductCheck> {
    if m > 0 && (!cache.contiguous() || cache.len() < m) {
        return Err(if cache.contiguous() {
            ZetaError::CacheTooShort {
                required: m,
                available: cache.len(),
            }
        } else {
            ZetaError::CacheNotContiguous
        });
    }
    let bits = p.bits();
    let wp = bits + 16;
    let xi_zero = big_xi(&Complex::zero(wp), &p.with_guard_digits(p.guard_digits + 5))?.re;
    let mut product = Float::with_val(wp, 1);
    for r in &cache.records[..m] {
        let a = Float::with_val(wp, &r.ordinate);
        let inv = Float::with_val(wp, a.square_ref()).recip() / 4u32;
        product *= inv + 1u32;
    }
    let truncated = Float::with_val(wp, &xi_zero * &product);
    let half = Float::with_val(wp, 0.5);

    let mut tail_factor = Float::with_val(wp, 1);
    let mut modeled_error = f64::INFINITY;
    if m > 0 {
        let cutoff = cutoff_height(m, cache, wp)?;
        if cutoff > MIN_TAIL_HEIGHT {
            let q = WorkingPrecision::new(p.requested_digits);
            let (tail2, err2) = tail_estimate(2, &cutoff, &q)?;
            let (tail4, err4) = tail_estimate(4, &cutoff, &q)?;
            let (tail6, _) = tail_estimate(6, &cutoff, &q)?;
            // log(1 + x) = x − x²/2 + x³/3 − …, x = 1/(4α²)
            let log_tail = Float::with_val(wp, &tail2 / 4u32) - Float::with_val(wp, &tail4 / 32u32);
            tail_factor = log_tail.exp();
            let err_log = err2.to_f64() / 4.0 + err4.to_f64() / 32.0 + tail6.to_f64() / 192.0;
            modeled_error = 0.5 * err_log;
        }
    }
    let corrected = Float::with_val(wp, &truncated * &tail_factor);
    let residual = Float::with_val(64, &corrected - &half).abs().to_f64();
    let truncated_residual = Float::with_val(64, &truncated - &half).abs().to_f64();
    Ok(ProductCheck {
        zeros_used: m,
        xi_zero: Float::with_val(bits, xi_zero),
        truncated: Float::with_val(bits, truncated),
        tail_factor: Float::with_val(bits, tail_factor),
        corrected: Float::with_val(bits, corrected),
        truncated_residual,
        residual,
        modeled_error,
    })
}

/// ζ(s) from Ξ(0)·π^{s/2}/((s − 1)·Γ(1 + s/2))·∏(1 + (s − 1/2)²/αₙ²) with
/// the product over the first `m` zeros and the rest from the density model.
pub fn zeta_product_eval(s: &Complex, m: usize, cache: &ZeroCache, p: &WorkingPrecision) -> Result<Complex> {
    zeta_product_eval_with_error(s, m, cache, p).map(|(v, _)| v)
}

/// As [`zeta_product_eval`], also returning the modeled absolute error.
pub fn zeta_product_eval_with_error(
    s: &Complex,
    m: usize,
    cache: &ZeroCache,
    p: &WorkingPrecision,
) -> Result<(Complex, f64)> {
    if !s.is_finite() {
        return Err(ZetaError::NonFinite("zeta_product_eval"));
    }
    match is_real_integer(s) {
        Some(1) => return Err(ZetaError::Pole),
        Some(n) if n <= -2 && n % 2 == 0 => return Err(ZetaError::GammaPole(n / 2 + 1)),
        _ => {}
    }
    if m == 0 {
        return Err(ZetaError::Precondition("zeta_product_eval needs M ≥ 1".into()));
    }
    if !cache.contiguous() {
        return Err(ZetaError::CacheNotContiguous);
    }
    if cache.len() < m {
        return Err(ZetaError::CacheTooShort {
            required: m,
            available: cache.len(),
        });
    }
    let bits = p.bits();
    let wp = bits + 16;
    let s = s.clone().with_prec(wp);
    let xi_zero = big_xi(&Complex::zero(wp), &p.with_guard_digits(p.guard_digits + 5))?.re;

    let half = Float::with_val(wp, 0.5);
    let w = s.add_real(&(-half.clone())).square(); // (s − 1/2)²
    let mut product = Complex::one(wp);
    for r in &cache.records[..m] {
        let a2 = Float::with_val(wp, r.ordinate.square_ref());
        product *= &w.div_real(&a2).add_real(&Float::with_val(wp, 1));
    }

    let cutoff = cutoff_height(m, cache, wp)?;
    let mut modeled_error = f64::INFINITY;
    if cutoff > MIN_TAIL_HEIGHT {
        let q = WorkingPrecision::new(p.requested_digits);
        let (tail2, err2) = tail_estimate(2, &cutoff, &q)?;
        let (tail4, err4) = tail_estimate(4, &cutoff, &q)?;
        let (tail6, _) = tail_estimate(6, &cutoff, &q)?;
        // Σ log(1 + w/α²) ≈ w·Z₂ − w²/2·Z₄
        let w2 = w.square();
        let log_tail = w.scale(&tail2) - w2.scale(&tail4).div_real(&Float::with_val(wp, 2));
        product *= &log_tail.exp();
        let wa = w.abs().to_f64();
        let err_log = wa * err2.to_f64() + wa * wa / 2.0 * err4.to_f64() + wa.powi(3) / 3.0 * tail6.to_f64();
        modeled_error = err_log;
    }

    let ln_pi = pi_bits(wp).ln();
    let half_s = s.div_real(&Float::with_val(wp, 2));
    let log_gamma = log_gamma_bits(&half_s.add_real(&Float::with_val(wp, 1)), wp)?;
    let log_prefactor = half_s.scale(&ln_pi) - log_gamma;
    let s_minus_1 = s.add_real(&Float::with_val(wp, -1));
    let value = log_prefactor.exp().scale(&xi_zero) / s_minus_1 * product;
    let abs_error = modeled_error * value.abs().to_f64();
    Ok((value.with_prec(bits), abs_error))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::digits_agreement_complex;

    #[test]
    fn xi_at_zero_and_one() {
        let p = WorkingPrecision::new(30);
        let b = p.bits();
        let x0 = xi(&Complex::zero(b), &p).unwrap();
        assert!(Float::with_val(b, &x0.re - 0.5f64).abs() < 1e-40);
        let x1 = xi(&Complex::one(b), &p).unwrap();
        assert_eq!(x1.re, 0.5);
    }

    #[test]
    fn xi_functional_equation() {
        let p = WorkingPrecision::new(30);
        let b = p.bits();
        let s = Complex::with_val(b, 0.3, 2);
        let one = Float::with_val(b, 1);
        let a = xi(&s, &p).unwrap();
        let c = xi(&(-s).add_real(&one), &p).unwrap();
        assert!(digits_agreement_complex(&a, &c).unwrap().meets(30));
    }

    #[test]
    fn xi_at_trivial_zero_is_finite() {
        let p = WorkingPrecision::new(20);
        let b = p.bits();
        let a = xi(&Complex::with_val(b, -2, 0), &p).unwrap();
        let c = xi(&Complex::with_val(b, 3, 0), &p).unwrap();
        assert!(digits_agreement_complex(&a, &c).unwrap().meets(20));
    }

    #[test]
    fn big_xi_at_zero_is_real() {
        let p = WorkingPrecision::new(30);
        let v = big_xi(&Complex::zero(p.bits()), &p).unwrap();
        assert!(v.im.clone().abs() < 1e-40);
        assert!(v.re > 0.49 && v.re < 0.5);
    }

    #[test]
    fn product_rejects_excluded_points() {
        let p = WorkingPrecision::new(10);
        let cache = ZeroCache::new(10);
        let b = p.bits();
        assert!(matches!(
            zeta_product_eval(&Complex::one(b), 1, &cache, &p),
            Err(ZetaError::Pole)
        ));
        assert!(matches!(
            zeta_product_eval(&Complex::with_val(b, -4, 0), 1, &cache, &p),
            Err(ZetaError::GammaPole(_))
        ));
        assert!(matches!(
            zeta_product_eval(&Complex::with_val(b, -2, 0), 1, &cache, &p),
            Err(ZetaError::GammaPole(0))
        ));
    }

    #[test]
    fn empty_product_residual() {
        let p = WorkingPrecision::new(20);
        let c = xi_product_check(0, &ZeroCache::new(20), &p).unwrap();
        assert_eq!(c.truncated, c.xi_zero);
        assert!(c.residual > 1e-3);
        assert!(c.modeled_error.is_infinite());
    }
}
