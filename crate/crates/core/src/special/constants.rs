//! Named constants: γ, Catalan's G, π and log 2.
//!
//! π and log 2 come straight from MPFR. γ uses the Brent–McMillan
//! Bessel-function algorithm; G uses Ramanujan's central-binomial series.

use std::fmt;

use rug::float::Constant;
use rug::Float;

use crate::complex::Real;
use crate::precision::WorkingPrecision;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantName {
    EulerGamma,
    Catalan,
    Pi,
    Log2,
}

impl ConstantName {
    pub const ALL: [ConstantName; 4] = [
        ConstantName::EulerGamma,
        ConstantName::Catalan,
        ConstantName::Pi,
        ConstantName::Log2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConstantName::EulerGamma => "euler_gamma",
            ConstantName::Catalan => "catalan",
            ConstantName::Pi => "pi",
            ConstantName::Log2 => "log2",
        }
    }
}

impl fmt::Display for ConstantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedConstant {
    pub name: ConstantName,
    pub value: Real,
}

impl NamedConstant {
    pub fn compute(name: ConstantName, p: &WorkingPrecision) -> Self {
        let bits = p.bits();
        let value = match name {
            ConstantName::EulerGamma => euler_gamma_bits(bits),
            ConstantName::Catalan => catalan_bits(bits),
            ConstantName::Pi => pi_bits(bits),
            ConstantName::Log2 => log2_bits(bits),
        };
        NamedConstant { name, value }
    }
}

pub fn pi_bits(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi)
}

pub fn log2_bits(bits: u32) -> Float {
    Float::with_val(bits, Constant::Log2)
}

pub fn pi(p: &WorkingPrecision) -> Real {
    pi_bits(p.bits())
}

pub fn log2(p: &WorkingPrecision) -> Real {
    log2_bits(p.bits())
}

pub fn euler_gamma(p: &WorkingPrecision) -> Real {
    euler_gamma_bits(p.bits())
}

pub fn catalan(p: &WorkingPrecision) -> Real {
    catalan_bits(p.bits())
}

/// γ = U/V with U = Σ (nᵏ/k!)² (Hₖ − log n), V = Σ (nᵏ/k!)²; the truncation
/// error is about π·e^{−4n}.
pub fn euler_gamma_bits(bits: u32) -> Float {
    let n = ((bits as f64) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 2;
    // terms reach e^{2n} before decaying
    let wp = bits + 32 + (2.0 * n as f64 * std::f64::consts::LOG2_E) as u32;
    let n_sq = Float::with_val(wp, n * n);
    let mut a = -Float::with_val(wp, n).ln();
    let mut b = Float::with_val(wp, 1);
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k: u64 = 1;
    loop {
        b *= &n_sq;
        b /= k * k;
        a *= &n_sq;
        a /= k;
        a += &b;
        a /= k;
        u += &a;
        v += &b;
        if k > n {
            let tiny_b = b.get_exp().unwrap_or(i32::MIN) < v.get_exp().unwrap_or(0) - wp as i32;
            let tiny_a = a.is_zero()
                || a.get_exp().unwrap_or(i32::MIN) < u.get_exp().unwrap_or(0) - wp as i32;
            if tiny_a && tiny_b {
                break;
            }
        }
        k += 1;
    }
    Float::with_val(bits, u / v)
}

/// G = (π/8)·log(2 + √3) + (3/8)·Σₙ 1 / ((2n+1)²·C(2n, n)).
pub fn catalan_bits(bits: u32) -> Float {
    let wp = bits + 16;
    let mut sum = Float::with_val(wp, 0);
    // r = 1 / C(2n, n)
    let mut r = Float::with_val(wp, 1);
    let mut n: u64 = 0;
    loop {
        let odd = 2 * n + 1;
        let term = Float::with_val(wp, &r / (odd * odd));
        sum += &term;
        if term.is_zero() || term.get_exp().unwrap_or(i32::MIN) < -(wp as i32) - 4 {
            break;
        }
        r *= n + 1;
        r /= 2 * (2 * n + 1);
        n += 1;
    }
    let sqrt3 = Float::with_val(wp, 3).sqrt();
    let log_term = Float::with_val(wp, sqrt3 + 2u32).ln();
    let pi = pi_bits(wp);
    let g = pi * log_term / 8u32 + sum * 3u32 / 8u32;
    Float::with_val(bits, g)
}
