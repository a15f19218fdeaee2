//! Closed forms L(2n+1, χ₄) and ζ(2n) from Euler and Bernoulli numbers.

use rug::ops::Pow;
use rug::Float;

use crate::complex::Real;
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::pi_bits;
use crate::special::numbers::{bernoulli, euler_number};

/// (π/2)^{2n+1} · |E₂ₙ| / (2·(2n)!) for the odd argument `arg` = 2n+1 ≥ 3.
pub fn beta_odd_closed(arg: u32, p: &WorkingPrecision) -> Result<Real> {
    if arg % 2 == 0 {
        return Err(ZetaError::NoClosedForm(format!(
            "L(s, χ) has no closed form at the even argument {arg}"
        )));
    }
    if arg < 3 {
        return Err(ZetaError::Precondition(format!(
            "odd closed form needs an argument ≥ 3, got {arg}"
        )));
    }
    let bits = p.bits();
    let wp = bits + 16;
    let two_n = arg - 1;
    let half_pi = pi_bits(wp) / 2u32;
    let e = Float::with_val(wp, euler_number(two_n).abs());
    let fact = Float::with_val(wp, Float::factorial(two_n));
    let v = half_pi.pow(arg) * e / (fact * 2u32);
    Ok(Float::with_val(bits, v))
}

/// (2π)^{2n} · |B₂ₙ| / (2·(2n)!) for the even argument `arg` = 2n ≥ 2.
pub fn zeta_even_closed(arg: u32, p: &WorkingPrecision) -> Result<Real> {
    if arg % 2 == 1 {
        return Err(ZetaError::NoClosedForm(format!(
            "ζ has no closed form at the odd argument {arg}"
        )));
    }
    if arg < 2 {
        return Err(ZetaError::Precondition(format!(
            "even closed form needs an argument ≥ 2, got {arg}"
        )));
    }
    let bits = p.bits();
    let wp = bits + 16;
    let two_pi = pi_bits(wp) * 2u32;
    let b = Float::with_val(wp, bernoulli(arg).abs());
    let fact = Float::with_val(wp, Float::factorial(arg));
    let v = two_pi.pow(arg) * b / (fact * 2u32);
    Ok(Float::with_val(bits, v))
}
