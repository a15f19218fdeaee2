//! Log-gamma on the cut plane and polygamma at positive rationals.
//!
//! Both shift the argument upward until the Stirling-type asymptotic series
//! reaches the target accuracy, then undo the shift with the recurrence.

use std::f64::consts::{LN_2, PI};

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::pi_bits;
use crate::special::numbers::even_bernoulli;

/// Modulus the shifted argument must reach so that the smallest Stirling
/// term, about e^{−2π|z|}, drops below 2^{−bits}.
fn stirling_radius(bits: u32) -> f64 {
    bits as f64 * LN_2 / (2.0 * PI) + 2.0
}

fn log2_abs(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (m, e) = x.to_f64_exp();
    m.abs().log2() + e as f64
}

pub fn log_gamma(z: &Complex, p: &WorkingPrecision) -> Result<Complex> {
    log_gamma_bits(z, p.bits())
}

/// Principal log Γ(z): analytic on ℂ minus (−∞, 0], real on the positive axis.
pub fn log_gamma_bits(z: &Complex, bits: u32) -> Result<Complex> {
    if !z.is_finite() {
        return Err(ZetaError::NonFinite("log_gamma"));
    }
    if z.im.is_zero() && z.re <= 0 && z.re.is_integer() {
        let n = z.re.to_f64() as i64;
        return Err(ZetaError::GammaPole(n));
    }
    let zr = z.re.to_f64();
    let zi = z.im.to_f64();
    // absolute accuracy on a result of size |z|·log|z|
    let magnitude = (zr.abs() + zi.abs() + 2.0).log2();
    let wp = bits + 16 + (2.0 * magnitude).ceil() as u32;
    let radius = stirling_radius(wp);

    let mut shift = 0u32;
    loop {
        let re = zr + shift as f64;
        if re > 0.5 && (re * re + zi * zi).sqrt() >= radius {
            break;
        }
        shift += 1;
    }

    let z = z.clone().with_prec(wp);
    let w = z.add_real(&Float::with_val(wp, shift));
    let mut value = stirling_log_gamma(&w, wp);

    if shift > 0 {
        // log Π (z + j) with the branch fixed by summing the arguments
        let mut product = Complex::one(wp);
        let mut total_arg = 0.0f64;
        for j in 0..shift {
            let zj = z.add_real(&Float::with_val(wp, j));
            total_arg += zi.atan2(zr + j as f64);
            product = &product * &zj;
        }
        let mut log_product = product.ln();
        let two_pi = Float::with_val(wp, pi_bits(wp) * 2u32);
        let turns = ((total_arg - log_product.im.to_f64()) / (2.0 * PI)).round();
        if turns != 0.0 {
            log_product.im += Float::with_val(wp, &two_pi * turns);
        }
        value = &value - &log_product;
    }
    Ok(value.with_prec(bits))
}

/// (w − ½)·log w − w + ½·log 2π + Σⱼ B₂ⱼ / (2j(2j−1)·w^{2j−1}) for Re w > 0,
/// |w| at least the Stirling radius.
fn stirling_log_gamma(w: &Complex, wp: u32) -> Complex {
    let half = Float::with_val(wp, 0.5);
    let log_w = w.ln();
    let mut value = &w.add_real(&-half.clone()) * &log_w;
    value = &value - w;
    let log_two_pi = Float::with_val(wp, pi_bits(wp) * 2u32).ln() * half;
    value.re += log_two_pi;

    let inv = w.recip();
    let inv_sq = inv.square();
    let mut power = inv; // w^{−(2j−1)}
    let target = -(wp as f64) - 4.0;
    for j in 1usize.. {
        let b = Float::with_val(wp, &even_bernoulli(j));
        let denom = (2 * j * (2 * j - 1)) as u64;
        let coeff = b / denom;
        let term = power.scale(&coeff);
        let size = log2_abs(&term.re).max(log2_abs(&term.im));
        value += &term;
        if size < target || j > 4 * wp as usize {
            break;
        }
        power = &power * &inv_sq;
    }
    value
}

/// Γ(x) for real x > 0 via the exponential of log Γ.
pub fn gamma_real_bits(x: &Float, bits: u32) -> Result<Float> {
    let lg = log_gamma_bits(&Complex::from_real(x.clone()), bits + 8)?;
    Ok(Float::with_val(bits, lg.re.exp()))
}

/// ψ⁽ᵐ⁾(x) at a positive rational x; m = 0 is the digamma function.
pub fn polygamma(m: u32, x: &Rational, p: &WorkingPrecision) -> Result<Real> {
    if *x <= 0 {
        return Err(ZetaError::Domain(format!(
            "polygamma needs x > 0, got {x}"
        )));
    }
    let bits = p.bits();
    let xf = Float::with_val(bits + 64, x);
    polygamma_real_bits(m, &xf, bits)
}

/// ψ⁽ᵐ⁾(x) for real x > 0.
pub fn polygamma_real_bits(m: u32, x: &Float, bits: u32) -> Result<Float> {
    if !x.is_finite() || *x <= 0 {
        return Err(ZetaError::Domain("polygamma needs a finite x > 0".into()));
    }
    // ψ⁽ᵐ⁾ near 0 grows like m!/x^{m+1}; budget for factorial growth as well
    let wp = bits + 24 + 2 * m + (m as f64 * (m as f64 + 1.0).log2()).ceil() as u32;
    let x = Float::with_val(wp, x);
    let radius = stirling_radius(wp) + m as f64;
    let x0 = x.to_f64();
    let shift = if x0 >= radius {
        0
    } else {
        (radius - x0).ceil() as u32
    };

    // Σ_{j<shift} (x + j)^{−(m+1)}
    let mut recurrence = Float::with_val(wp, 0);
    for j in 0..shift {
        let xj = Float::with_val(wp, &x + j);
        recurrence += xj.pow(-(m as i32) - 1);
    }

    let y = Float::with_val(wp, &x + shift);
    let inv = Float::with_val(wp, y.recip_ref());
    let inv_sq = Float::with_val(wp, inv.square_ref());
    let target = -(wp as f64) - 4.0;

    let value = if m == 0 {
        // ψ(y) ≈ log y − 1/(2y) − Σ B₂ₖ / (2k y^{2k})
        let mut v = Float::with_val(wp, y.ln_ref()) - Float::with_val(wp, &inv / 2u32);
        let mut power = inv_sq.clone();
        for k in 1usize.. {
            let b = Float::with_val(wp, &even_bernoulli(k));
            let term = b * &power / (2 * k as u64);
            let size = log2_abs(&term);
            v -= term;
            if size < target {
                break;
            }
            power *= &inv_sq;
        }
        v - recurrence
    } else {
        // (−1)^{m+1}·[m!·Σ (x+j)^{−m−1} + (m−1)!/y^m + m!/(2y^{m+1})
        //              + Σ B₂ₖ (2k+m−1)! / ((2k)! y^{2k+m})]
        let m_fact = Float::with_val(wp, Float::factorial(m));
        let m1_fact = Float::with_val(wp, Float::factorial(m - 1));
        let y_pow_m = Float::with_val(wp, (&inv).pow(m));
        let mut v = Float::with_val(wp, &m1_fact * &y_pow_m);
        v += Float::with_val(wp, &m_fact * &y_pow_m) * &inv / 2u32;
        // ratio (2k+m−1)!/(2k)! built incrementally
        let mut ratio = Float::with_val(wp, &m1_fact); // k = 0: (m−1)!/0!
        let mut power = y_pow_m; // y^{−(2k+m)}
        for k in 1usize.. {
            let kk = 2 * k as u64;
            // (2k+m−1)!/(2k)! = previous · (2k+m−2)(2k+m−1) / ((2k−1)(2k))
            ratio *= (kk + m as u64 - 2) * (kk + m as u64 - 1);
            ratio /= (kk - 1) * kk;
            power *= &inv_sq;
            let b = Float::with_val(wp, &even_bernoulli(k));
            let term = b * &ratio * &power;
            let size = log2_abs(&term);
            v += term;
            if size < target {
                break;
            }
        }
        v += m_fact * recurrence;
        if m % 2 == 0 {
            -v
        } else {
            v
        }
    };
    Ok(Float::with_val(bits, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::digits_agreement;
    use crate::special::constants::{catalan_bits, euler_gamma_bits, log2_bits};

    fn wp(d: u32) -> WorkingPrecision {
        WorkingPrecision::new(d)
    }

    fn c(bits: u32, re: f64, im: f64) -> Complex {
        Complex::with_val(bits, re, im)
    }

    #[test]
    fn log_gamma_at_one_and_half() {
        let p = wp(40);
        let one = log_gamma(&c(p.bits(), 1.0, 0.0), &p).unwrap();
        assert!(one.re.clone().abs() < 1e-50 && one.im.is_zero());
        let half = log_gamma(&c(p.bits(), 0.5, 0.0), &p).unwrap();
        let expect = pi_bits(p.bits()).ln() / 2u32;
        assert!(digits_agreement(&half.re, &expect).unwrap().meets(40));
    }

    #[test]
    fn log_gamma_quarter_satisfies_recurrence() {
        let p = wp(30);
        let b = p.bits();
        let q = log_gamma(&c(b, 0.25, 0.0), &p).unwrap();
        let q5 = log_gamma(&c(b, 1.25, 0.0), &p).unwrap();
        // Γ(5/4) = Γ(1/4)/4
        let lhs = q5.re.exp();
        let rhs = q.re.clone().exp() / 4u32;
        assert!(digits_agreement(&lhs, &rhs).unwrap().meets(30));
        let reference = Float::with_val(b, 0.25).gamma();
        assert!(digits_agreement(&q.re.exp(), &reference).unwrap().meets(30));
    }

    #[test]
    fn log_gamma_poles() {
        let p = wp(20);
        for n in [0.0, -1.0, -7.0] {
            assert!(matches!(
                log_gamma(&c(p.bits(), n, 0.0), &p),
                Err(ZetaError::GammaPole(_))
            ));
        }
    }

    #[test]
    fn log_gamma_conjugate_symmetry() {
        let p = wp(30);
        for (re, im) in [(0.25, 3.0), (-2.5, 0.75), (3.0, -40.0), (0.25, 700.0)] {
            let z = c(p.bits(), re, im);
            let a = log_gamma(&z.conj(), &p).unwrap();
            let b = log_gamma(&z, &p).unwrap().conj();
            assert!(digits_agreement(&a.re, &b.re).unwrap().meets(30));
            assert!(digits_agreement(&a.im, &b.im).unwrap().meets(30));
        }
    }

    #[test]
    fn log_gamma_is_continuous_branch() {
        // Stirling form directly vs. shifted evaluation must agree on the
        // imaginary part, not just modulo 2π.
        let p = wp(30);
        let z = c(p.bits(), -3.7, 0.2);
        let lg = log_gamma(&z, &p).unwrap();
        // log Γ(z+5) − Σ log(z+j), each principal log
        let mut expect = log_gamma(&z.add_real(&Float::with_val(p.bits(), 5)), &p).unwrap();
        for j in 0..5 {
            expect = &expect - &z.add_real(&Float::with_val(p.bits(), j)).ln();
        }
        assert!(digits_agreement(&lg.im, &expect.im).unwrap().meets(28));
    }

    #[test]
    fn digamma_at_quarter_matches_closed_form() {
        let p = wp(50);
        let b = p.bits() + 10;
        let psi = polygamma(0, &Rational::from((1, 4)), &p).unwrap();
        let expect = -pi_bits(b) / 2u32 - euler_gamma_bits(b) - log2_bits(b) * 3u32;
        assert!(digits_agreement(&psi, &expect).unwrap().meets(50));
    }

    #[test]
    fn trigamma_at_quarter_matches_closed_form() {
        let p = wp(50);
        let b = p.bits() + 10;
        let psi1 = polygamma(1, &Rational::from((1, 4)), &p).unwrap();
        let pi = pi_bits(b);
        let expect = Float::with_val(b, pi.square_ref()) + catalan_bits(b) * 8u32;
        assert!(digits_agreement(&psi1, &expect).unwrap().meets(50));
    }

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let p = wp(40);
        let psi = polygamma(0, &Rational::from(1), &p).unwrap();
        let expect = -euler_gamma_bits(p.bits() + 10);
        assert!(digits_agreement(&psi, &expect).unwrap().meets(40));
    }

    #[test]
    fn polygamma_recurrence() {
        let p = wp(40);
        for (num, den) in [(1, 4), (1, 2), (1, 1), (3, 2)] {
            let x = Rational::from((num, den));
            let x1 = Rational::from(&x + 1u32);
            for m in 0..4u32 {
                let a = polygamma(m, &x1, &p).unwrap();
                let b = polygamma(m, &x, &p).unwrap();
                // ψ⁽ᵐ⁾(x+1) − ψ⁽ᵐ⁾(x) = (−1)^m m! / x^{m+1}
                let xf = Float::with_val(p.bits(), &x);
                let mut expect = Float::with_val(p.bits(), Float::factorial(m)) / xf.pow(m + 1);
                if m % 2 == 1 {
                    expect = -expect;
                }
                let diff = a - b;
                assert!(
                    digits_agreement(&diff, &expect).unwrap().meets(38),
                    "m = {m}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn trigamma_reflection() {
        // ψ′(1/4) + ψ′(3/4) = π² / sin²(π/4) = 2π²
        let p = wp(45);
        let a = polygamma(1, &Rational::from((1, 4)), &p).unwrap();
        let b = polygamma(1, &Rational::from((3, 4)), &p).unwrap();
        let pi = pi_bits(p.bits());
        let expect = Float::with_val(p.bits(), pi.square_ref()) * 2u32;
        assert!(digits_agreement(&(a + b), &expect).unwrap().meets(45));
    }

    #[test]
    fn higher_polygamma_matches_mpfr_zeta_series() {
        // ψ⁽ᵐ⁾(1) = (−1)^{m+1} m! ζ(m+1)
        let p = wp(40);
        for m in 1..6u32 {
            let v = polygamma(m, &Rational::from(1), &p).unwrap();
            let z = Float::with_val(p.bits() + 10, m + 1).zeta();
            let mut expect = z * Float::with_val(p.bits() + 10, Float::factorial(m));
            if m % 2 == 0 {
                expect = -expect;
            }
            assert!(digits_agreement(&v, &expect).unwrap().meets(40), "m = {m}");
        }
    }
}
