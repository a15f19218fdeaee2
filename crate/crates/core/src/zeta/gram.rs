//! The Gram series R(x) and its Möbius / logarithmic-integral form.

use rug::ops::Pow;
use rug::Float;

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::euler_gamma_bits;
use crate::special::li::logarithmic_integral_bits;
use crate::zeta::engine::ZetaEngine;

/// Largest n for which [`mobius`] is defined.
pub const MOBIUS_LIMIT: u32 = 64;

/// μ(n) by trial factorization, 1 ≤ n ≤ 64.
pub fn mobius(n: u32) -> Result<i32> {
    if n == 0 || n > MOBIUS_LIMIT {
        return Err(ZetaError::Domain(format!(
            "mobius is tabulated for 1 ≤ n ≤ {MOBIUS_LIMIT}, got {n}"
        )));
    }
    let mut rest = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            rest /= d;
            if rest % d == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        d += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

fn check_x(x: &Float) -> Result<()> {
    if !x.is_finite() {
        return Err(ZetaError::NonFinite("gram_series"));
    }
    if *x <= 1 {
        return Err(ZetaError::Domain(format!(
            "Gram series needs x > 1, got {}",
            x.to_f64()
        )));
    }
    Ok(())
}

/// R(x) = 1 + Σₖ (log x)ᵏ / (k!·k·ζ(k+1)).
pub fn gram_series(x: &Real, p: &WorkingPrecision) -> Result<Real> {
    check_x(x)?;
    let bits = p.bits();
    let wp = bits + 16;
    let log_x = Float::with_val(wp, x.ln_ref());
    let lx = log_x.to_f64();
    let mut engine = ZetaEngine::new(wp + 4);
    let mut sum = Float::with_val(wp, 1);
    let mut power = Float::with_val(wp, 1); // (log x)^k / k!
    for k in 1u32.. {
        power *= &log_x;
        power /= k;
        let bound = Float::with_val(wp, &power / k);
        // ζ(k+1) > 1, so (log x)^k/(k·k!) bounds the term
        if k as f64 > lx
            && (bound.is_zero()
                || bound.get_exp().unwrap_or(i32::MIN)
                    < sum.get_exp().unwrap_or(0).max(0) - wp as i32 - 2)
        {
            break;
        }
        let z = engine.zeta(&Complex::with_val(wp + 4, k + 1, 0))?;
        sum += bound / z.re;
    }
    Ok(Float::with_val(bits, sum))
}

/// Σ_{n≥1} μ(n)/n · li(x^{1/n}) with li the principal value. Terms with
/// n ≤ N are summed directly, where N is the first index with x^{1/N} < 2;
/// for n > N the series li(y) = γ + log log y + Σ (log y)ᵏ/(k·k!) is summed
/// over n analytically using Σ μ(n)/n = 0, Σ μ(n) log n / n = −1 and
/// Σ μ(n)/n^{k+1} = 1/ζ(k+1).
pub fn gram_series_mobius(x: &Real, p: &WorkingPrecision) -> Result<Real> {
    check_x(x)?;
    let bits = p.bits();
    let wp = bits + 24;
    let log_x = Float::with_val(wp, x.ln_ref());
    let lx = log_x.to_f64();
    let head_len = ((lx / std::f64::consts::LN_2).floor() as u32 + 1).max(1);
    if head_len > MOBIUS_LIMIT {
        return Err(ZetaError::Domain(format!(
            "Möbius form needs x < 2^{MOBIUS_LIMIT}"
        )));
    }
    let mu: Vec<(u32, i32)> = (1..=head_len)
        .map(|n| mobius(n).map(|m| (n, m)))
        .collect::<Result<_>>()?;

    let mut head = Float::with_val(wp, 0);
    for &(n, m) in &mu {
        if m == 0 {
            continue;
        }
        let y = Float::with_val(wp, &log_x / n).exp();
        let li = logarithmic_integral_bits(&y, wp)?;
        head += li * m / n;
    }

    // tail over n > N
    let gamma = euler_gamma_bits(wp);
    let log_log = Float::with_val(wp, log_x.ln_ref());
    let mut sum_mu_over_n = Float::with_val(wp, 0);
    let mut sum_mu_log_over_n = Float::with_val(wp, 0);
    for &(n, m) in &mu {
        if m == 0 {
            continue;
        }
        sum_mu_over_n += Float::with_val(wp, m) / n;
        sum_mu_log_over_n += Float::with_val(wp, n).ln() * m / n;
    }
    // Σ_{n>N} μ(n)/n · (γ + log log x − log n)
    let mut tail = Float::with_val(wp, &gamma + &log_log) * (-sum_mu_over_n);
    tail -= Float::with_val(wp, -1) - sum_mu_log_over_n;

    // Σₖ (log x)^k/(k·k!) · Σ_{n>N} μ(n)/n^{k+1}
    let mut engine = ZetaEngine::new(wp + 4);
    let mut power = Float::with_val(wp, 1);
    for k in 1u32.. {
        power *= &log_x;
        power /= k;
        let mut inner = Float::with_val(wp, 0);
        for &(n, m) in &mu {
            if m != 0 {
                inner += Float::with_val(wp, n).pow(-(k as i32) - 1) * m;
            }
        }
        let z = engine.zeta(&Complex::with_val(wp + 4, k + 1, 0))?;
        let rest = Float::with_val(wp, z.re.recip_ref()) - inner;
        let term = Float::with_val(wp, &power / k) * rest;
        let small = term.is_zero()
            || term.get_exp().unwrap_or(i32::MIN) < -(wp as i32) - 4;
        tail += term;
        if k as f64 > lx && small {
            break;
        }
    }
    Ok(Float::with_val(bits, head + tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(mobius(i as u32 + 1).unwrap(), *e);
        }
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
        assert!(mobius(65).is_err());
    }

    #[test]
    fn gram_series_near_one() {
        let p = WorkingPrecision::new(20);
        let x = Float::with_val(p.bits(), 1) + Float::with_val(p.bits(), 1e-30);
        let r = gram_series(&x, &p).unwrap();
        assert!((r - 1u32).abs() < 1e-25);
    }

    #[test]
    fn gram_series_domain() {
        let p = WorkingPrecision::new(10);
        assert!(gram_series(&Float::with_val(64, 1), &p).is_err());
    }
}
