//! Sums Σ αₙ⁻ᵏ over zero ordinates for even k ≥ 2: a partial sum over the
//! cache plus the integral of u⁻ᵏ against the smooth zero density
//! (1/2π)·log(u/2π) beyond the cutoff.
//!
//! The error bound assumes |S(u)| ≤ 2 for the oscillating part of the
//! zero-counting function and is heuristic, not certified.

use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use crate::complex::Real;
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::pi_bits;
use crate::zeros::ZeroCache;

/// Below this height the smooth density is too crude to use.
pub const MIN_TAIL_HEIGHT: f64 = 100.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SecondaryZetaValue {
    pub k: u32,
    pub zeros_used: usize,
    /// Height where the partial sum stops and the tail integral starts.
    pub cutoff: f64,
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub partial: Real,
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub tail: Real,
    /// Heuristic tail uncertainty plus the propagated ordinate rounding.
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub error_bound: Real,
    #[serde(serialize_with = "crate::serde_float::serialize")]
    pub value: Real,
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 || k % 2 == 1 {
        return Err(ZetaError::Domain(format!(
            "spectral sums are provided for even k ≥ 2, got {k}"
        )));
    }
    Ok(())
}

fn check_depth(m: usize, cache: &ZeroCache) -> Result<()> {
    if !cache.contiguous() {
        return Err(ZetaError::CacheNotContiguous);
    }
    if cache.len() < m {
        return Err(ZetaError::CacheTooShort {
            required: m,
            available: cache.len(),
        });
    }
    Ok(())
}

fn min_certified_digits(cache: &ZeroCache, m: usize) -> u32 {
    cache.records[..m]
        .iter()
        .map(|r| r.certified_digits)
        .min()
        .unwrap_or(cache.digits)
}

/// Σ_{n≤M} αₙ⁻ᵏ, summed in increasing n.
pub fn partial_power_sum(k: u32, m: usize, cache: &ZeroCache, p: &WorkingPrecision) -> Result<Real> {
    check_k(k)?;
    check_depth(m, cache)?;
    let bits = p.bits() + 8;
    let mut sum = Float::with_val(bits, 0);
    for r in &cache.records[..m] {
        let a = Float::with_val(bits, &r.ordinate);
        sum += a.pow(-(k as i32));
    }
    Ok(Float::with_val(p.bits(), sum))
}

/// Bound on the partial-sum error from ordinates known to `cd` significant
/// digits: relative error 10^(1−cd)/2 per ordinate, amplified k-fold, over
/// M terms each at most α₁⁻ᵏ.
pub fn partial_sum_rounding_bound(k: u32, m: usize, cache: &ZeroCache) -> Result<f64> {
    check_k(k)?;
    check_depth(m, cache)?;
    if m == 0 {
        return Ok(0.0);
    }
    let cd = min_certified_digits(cache, m);
    let a1 = cache.records[0].ordinate.to_f64();
    Ok(m as f64 * k as f64 * a1.powi(-(k as i32)) * 10f64.powi(1 - cd as i32) / 2.0)
}

/// Tail Σ_{αₙ > T} αₙ⁻ᵏ ≈ (1/2π)·[log(T/2π)/((k−1)T^{k−1}) + 1/((k−1)²T^{k−1})]
/// with error bound 4·(2 + log T)/(2π·T^k).
pub fn tail_estimate(k: u32, height: &Real, p: &WorkingPrecision) -> Result<(Real, Real)> {
    check_k(k)?;
    if !height.is_finite() || *height <= MIN_TAIL_HEIGHT {
        return Err(ZetaError::Precondition(format!(
            "tail estimate needs T > {MIN_TAIL_HEIGHT}, got {}",
            height.to_f64()
        )));
    }
    let bits = p.bits() + 8;
    let t = Float::with_val(bits, height);
    let two_pi = pi_bits(bits) * 2u32;
    let k1 = k - 1;
    let t_pow = Float::with_val(bits, (&t).pow(k1));
    let log_ratio = Float::with_val(bits, &t / &two_pi).ln();
    let mut tail = log_ratio / k1 + Float::with_val(bits, 1) / (k1 * k1);
    tail /= &t_pow;
    tail /= &two_pi;
    let log_t = Float::with_val(bits, t.ln_ref());
    let error = (log_t + 2u32) * 4u32 / (two_pi * t_pow * &t);
    Ok((Float::with_val(p.bits(), tail), Float::with_val(p.bits(), error)))
}

/// Midpoint between αₘ and αₘ₊₁ when the latter is cached, else αₘ + 1/2.
pub fn cutoff_height(m: usize, cache: &ZeroCache, bits: u32) -> Result<Float> {
    check_depth(m, cache)?;
    if m == 0 {
        return Err(ZetaError::Precondition("cutoff needs at least one zero".into()));
    }
    let a = &cache.records[m - 1].ordinate;
    Ok(match cache.records.get(m) {
        Some(next) => Float::with_val(bits, a + &next.ordinate) / 2u32,
        None => Float::with_val(bits, a + 0.5f64),
    })
}

/// Partial sum over the first `m` cached zeros plus the tail at the cutoff.
pub fn secondary_zeta_at_depth(
    k: u32,
    m: usize,
    cache: &ZeroCache,
    p: &WorkingPrecision,
) -> Result<SecondaryZetaValue> {
    check_k(k)?;
    check_depth(m, cache)?;
    let bits = p.bits();
    let cutoff = cutoff_height(m, cache, bits)?;
    let partial = partial_power_sum(k, m, cache, p)?;
    let (tail, tail_error) = tail_estimate(k, &cutoff, p)?;
    let rounding = partial_sum_rounding_bound(k, m, cache)?;
    let error_bound = tail_error + rounding;
    let value = Float::with_val(bits, &partial + &tail);
    Ok(SecondaryZetaValue {
        k,
        zeros_used: m,
        cutoff: cutoff.to_f64(),
        partial,
        tail,
        error_bound,
        value,
    })
}

/// Z(k) using the whole cache, provided its error bound meets `target_error`.
pub fn secondary_zeta(
    k: u32,
    target_error: f64,
    cache: &ZeroCache,
    p: &WorkingPrecision,
) -> Result<SecondaryZetaValue> {
    check_k(k)?;
    if !(target_error > 0.0) {
        return Err(ZetaError::Domain(format!(
            "target error must be positive, got {target_error}"
        )));
    }
    check_depth(0, cache)?;
    let m = cache.len();
    let first = cache.records.first().map(|r| r.ordinate.to_f64()).unwrap_or(f64::INFINITY);
    let top = cache.records.last().map(|r| r.ordinate.to_f64()).unwrap_or(0.0);
    if top + 0.5 <= MIN_TAIL_HEIGHT || heuristic_bound(k, top + 0.5) > target_error {
        return Err(ZetaError::NeedMoreZeros {
            available: m,
            estimated: estimate_zeros_needed(k, target_error),
        });
    }
    let value = secondary_zeta_at_depth(k, m, cache, p)?;
    if Float::with_val(64, &value.error_bound) > target_error {
        // the tail is fine, so the ordinates themselves are too coarse
        let needed = (m as f64 * k as f64 * first.powi(-(k as i32)) * 10.0 / target_error)
            .log10()
            .ceil() as u32
            + 1;
        return Err(ZetaError::CacheTooCoarse {
            required: needed,
            available: min_certified_digits(cache, m),
        });
    }
    Ok(value)
}

fn heuristic_bound(k: u32, t: f64) -> f64 {
    4.0 * (2.0 + t.ln()) / (2.0 * std::f64::consts::PI * t.powi(k as i32))
}

/// Zeros up to the height where the heuristic bound reaches `target_error`,
/// counted with θ(T)/π + 1 ≈ (T/2π)·log(T/2πe) + 7/8.
pub fn estimate_zeros_needed(k: u32, target_error: f64) -> usize {
    let mut t = MIN_TAIL_HEIGHT * 2.0;
    while heuristic_bound(k, t) > target_error && t < 1e300 {
        t *= 1.25;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let n = t / two_pi * (t / (two_pi * std::f64::consts::E)).ln() + 0.875;
    if n >= usize::MAX as f64 {
        usize::MAX
    } else {
        n.ceil() as usize
    }
}
