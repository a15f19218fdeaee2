//! The principal-value logarithmic integral li(x) for x > 1.

use rug::Float;

use crate::complex::Real;
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::euler_gamma_bits;

pub fn logarithmic_integral(x: &Real, p: &WorkingPrecision) -> Result<Real> {
    logarithmic_integral_bits(x, p.bits())
}

/// li(x) = γ + log log x + Σₖ (log x)ᵏ / (k·k!).
pub fn logarithmic_integral_bits(x: &Float, bits: u32) -> Result<Float> {
    if !x.is_finite() {
        return Err(ZetaError::NonFinite("logarithmic_integral"));
    }
    if *x <= 1 {
        return Err(ZetaError::Domain(format!(
            "li(x) requires x > 1, got {}",
            x.to_f64()
        )));
    }
    // li has a zero near 1.4513; keep absolute accuracy there
    let wp = bits + 24;
    let log_x = Float::with_val(wp, x.ln_ref());
    let mut sum = euler_gamma_bits(wp) + Float::with_val(wp, log_x.ln_ref());
    let mut power = Float::with_val(wp, 1); // (log x)^k / k!
    let mut k: u64 = 1;
    let lx = log_x.to_f64();
    loop {
        power *= &log_x;
        power /= k;
        let term = Float::with_val(wp, &power / k);
        sum += &term;
        let negligible = term.get_exp().unwrap_or(i32::MIN)
            < sum.get_exp().unwrap_or(0).max(0) - wp as i32 - 2;
        if k as f64 > lx && negligible {
            break;
        }
        k += 1;
    }
    Ok(Float::with_val(bits, sum))
}
