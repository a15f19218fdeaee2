//! Euler–Maclaurin evaluation of ζ(s) and L(s, χ₄).
//!
//! ζ(s) = Σ_{n<N} n^{−s} + N^{1−s}/(s−1) + N^{−s}/2
//!        + Σ_{j≤J} B₂ⱼ/(2j)! · (s)₂ⱼ₋₁ · N^{−s−2j+1} + R,
//!
//! with |R| ≤ 4/(2π)^{2J} · |(s)₂ⱼ| · N^{−σ−2J+1} / (σ+2J−1). N and J are
//! picked per call to minimize work subject to |R| < 2^{−bits}.
//!
//! The character sum uses the same expansion applied to the paired terms
//! (4x+1)^{−s} − (4x+3)^{−s}.

use std::f64::consts::LN_2;

use rug::Float;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::special::numbers::even_bernoulli;

const LOG2_TWO_PI: f64 = 2.651_496_129_472_319; // log2(2π)

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Plan {
    pub n: u64,
    pub j: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Series {
    Zeta,
    Beta,
}

fn log2_hypot(a: f64, b: f64) -> f64 {
    (a * a + b * b).sqrt().log2()
}

/// Cheapest (N, J) whose Euler–Maclaurin remainder bound is below 2^{−bits}.
fn plan_terms(sigma: f64, t: f64, bits: u32, series: Series) -> Plan {
    let target = -(bits as f64) - 2.0;
    let offset = match series {
        Series::Zeta => 0.0,
        Series::Beta => 0.25,
    };
    // log2 of the constant in front of the bound
    let prefactor = match series {
        Series::Zeta => 3.0,
        Series::Beta => 4.0 - 2.0 * sigma,
    };
    let s_abs = (sigma * sigma + t * t).sqrt();
    let n_max = (2.0 * (s_abs + bits as f64) + 64.0) as u64;

    let mut best: Option<(f64, Plan)> = None;
    let mut n_f = 1.0f64;
    loop {
        let n = n_f.ceil() as u64;
        if n > n_max {
            break;
        }
        let log2_n = (n as f64 + offset).log2();
        let mut log2_poch = 0.0f64; // log2 |(s)_{2J}|
        let mut exact = false;
        let mut prev = f64::INFINITY;
        for j in 1..=(4 * bits as usize + 16) {
            for i in [2 * j - 2, 2 * j - 1] {
                let r = sigma + i as f64;
                if r == 0.0 && t == 0.0 {
                    exact = true;
                }
                log2_poch += log2_hypot(r, t);
            }
            let d = sigma + 2.0 * j as f64 - 1.0;
            if d <= 0.0 {
                continue;
            }
            let bound = if exact {
                f64::NEG_INFINITY
            } else {
                prefactor + log2_poch - 2.0 * j as f64 * LOG2_TWO_PI - (d * log2_n) - d.log2()
            };
            if bound < target {
                let cost = match series {
                    Series::Zeta => {
                        let primes = if n < 3 {
                            1.0
                        } else {
                            n as f64 / (n as f64).ln()
                        };
                        12.0 * primes + n as f64 + 3.0 * j as f64
                    }
                    Series::Beta => 24.0 * n as f64 + 6.0 * j as f64,
                };
                if best.map_or(true, |(c, _)| cost < c) {
                    best = Some((cost, Plan { n, j }));
                }
                break;
            }
            if bound > prev {
                break;
            }
            prev = bound;
        }
        n_f = (n_f * 1.12).max(n_f + 1.0);
    }
    best.map(|(_, p)| p).unwrap_or(Plan {
        n: n_max,
        j: 4 * bits as usize,
    })
}

/// Reusable evaluator at a fixed target accuracy of 2^{−bits} (absolute).
///
/// Keeps the Bernoulli coefficients, a smallest-prime-factor sieve and the
/// logarithms of primes between calls, so repeated evaluations at nearby
/// heights stay cheap.
#[derive(Clone, Debug)]
pub struct ZetaEngine {
    bits: u32,
    coeffs: Vec<Float>,
    coeff_prec: u32,
    spf: Vec<u32>,
    ln_primes: Vec<Option<Float>>,
    ln_prec: u32,
}

impl ZetaEngine {
    pub fn new(bits: u32) -> Self {
        ZetaEngine {
            bits,
            coeffs: Vec::new(),
            coeff_prec: 0,
            spf: Vec::new(),
            ln_primes: Vec::new(),
            ln_prec: 0,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// B₂ⱼ/(2j)! for j = 1..=count at precision ≥ wp (index j−1).
    fn bernoulli_coeffs(&mut self, count: usize, wp: u32) -> &[Float] {
        if wp > self.coeff_prec {
            self.coeffs.clear();
            self.coeff_prec = wp.next_multiple_of(64);
        }
        while self.coeffs.len() < count {
            let j = self.coeffs.len() + 1;
            let b = Float::with_val(self.coeff_prec, &even_bernoulli(j));
            let f = Float::with_val(self.coeff_prec, Float::factorial(2 * j as u32));
            self.coeffs.push(b / f);
        }
        &self.coeffs[..count]
    }

    fn ensure_sieve(&mut self, n: usize) {
        if self.spf.len() > n {
            return;
        }
        let size = (n + 1).max(2 * self.spf.len());
        let mut spf = vec![0u32; size];
        for i in 2..size {
            if spf[i] == 0 {
                let mut k = i;
                while k < size {
                    if spf[k] == 0 {
                        spf[k] = i as u32;
                    }
                    k += i;
                }
            }
        }
        self.spf = spf;
        self.ln_primes.resize(size, None);
    }

    fn ln_prime(&mut self, p: usize, wp: u32) -> &Float {
        if wp > self.ln_prec {
            self.ln_prec = wp.next_multiple_of(64);
            for slot in self.ln_primes.iter_mut() {
                *slot = None;
            }
        }
        let prec = self.ln_prec;
        self.ln_primes[p].get_or_insert_with(|| Float::with_val(prec, p as u32).ln())
    }

    /// n^{−s} for n = 0..=n_max (index 0 unused), built multiplicatively from
    /// prime powers.
    fn inverse_powers(&mut self, s: &Complex, n_max: usize, wp: u32) -> Vec<Complex> {
        self.ensure_sieve(n_max);
        let real = s.im.is_zero();
        let half_line = s.re == 0.5;
        let mut out: Vec<Complex> = Vec::with_capacity(n_max + 1);
        out.push(Complex::zero(wp));
        if n_max >= 1 {
            out.push(Complex::one(wp));
        }
        for n in 2..=n_max {
            let p = self.spf[n] as usize;
            let value = if p == n {
                let ln_p = Float::with_val(wp, self.ln_prime(p, wp));
                let modulus = if half_line {
                    Float::with_val(wp, p as u32).sqrt().recip()
                } else {
                    (Float::with_val(wp, &s.re * &ln_p) * -1i32).exp()
                };
                if real {
                    Complex::from_real(modulus)
                } else {
                    let angle = Float::with_val(wp, &s.im * &ln_p);
                    let (sin, cos) = angle.sin_cos(Float::new(wp));
                    Complex::new(cos * &modulus, -(sin * &modulus))
                }
            } else {
                &out[p] * &out[n / p]
            };
            out.push(value);
        }
        out
    }

    /// ζ(s) with absolute error below about 2^{−bits}.
    pub fn zeta(&mut self, s: &Complex) -> Result<Complex> {
        if !s.is_finite() {
            return Err(ZetaError::NonFinite("zeta"));
        }
        if s.im.is_zero() && s.re == 1 {
            return Err(ZetaError::Pole);
        }
        let sigma = s.re.to_f64();
        let t = s.im.to_f64();
        let plan = plan_terms(sigma, t, self.bits, Series::Zeta);
        let n = plan.n as usize;
        let ln_n = (n as f64).ln().max(1.0);
        let growth = ((1.0 - sigma).max(0.0) * ln_n / LN_2).ceil();
        let wp = self.bits
            + 12
            + growth as u32
            + (n as f64).log2().ceil() as u32
            + (1.0 + t.abs() * ln_n).log2().ceil() as u32;
        let s = s.clone().with_prec(wp);
        let powers = self.inverse_powers(&s, n, wp);

        let mut sum = Complex::zero(wp);
        for power in &powers[1..n] {
            sum += power;
        }

        let n_f = Float::with_val(wp, n as u32);
        let s_minus_1 = s.add_real(&Float::with_val(wp, -1));
        let mut bracket = &Complex::from_real(n_f.clone()) / &s_minus_1;
        bracket.re += 0.5;

        let inv_n = Float::with_val(wp, n_f.recip_ref());
        let inv_n_sq = Float::with_val(wp, inv_n.square_ref());
        let coeffs = self.bernoulli_coeffs(plan.j, wp).to_vec();
        let mut q = s.scale(&inv_n); // (s)_{2j−1} / N^{2j−1}
        for (idx, c) in coeffs.iter().enumerate() {
            let j = idx + 1;
            if j > 1 {
                let a = s.add_real(&Float::with_val(wp, 2 * j - 3));
                let b = s.add_real(&Float::with_val(wp, 2 * j - 2));
                q = (&q * &(&a * &b)).scale(&inv_n_sq);
            }
            bracket += q.scale(c);
        }
        sum += &powers[n] * &bracket;
        Ok(sum)
    }

    /// L(s, χ₄) = Σ (−1)ᵏ (2k+1)^{−s}, entire.
    pub fn dirichlet_beta(&mut self, s: &Complex) -> Result<Complex> {
        if !s.is_finite() {
            return Err(ZetaError::NonFinite("dirichlet_beta"));
        }
        let sigma = s.re.to_f64();
        let t = s.im.to_f64();
        let plan = plan_terms(sigma, t, self.bits, Series::Beta);
        let n = plan.n;
        let ln_n = ((4 * n + 3) as f64).ln();
        let growth = ((1.0 - sigma).max(0.0) * ln_n / LN_2).ceil();
        let wp = self.bits
            + 12
            + growth as u32
            + (n as f64).log2().ceil() as u32
            + (1.0 + t.abs() * ln_n).log2().ceil() as u32;
        let s = s.clone().with_prec(wp);
        let neg_s = -&s;

        let power = |base: u64| -> Complex {
            let ln = Float::with_val(wp, base).ln();
            neg_s.scale(&ln).exp()
        };

        let mut sum = Complex::zero(wp);
        for k in 0..n {
            sum += power(4 * k + 1);
            sum -= &power(4 * k + 3);
        }

        let a = 4 * n + 1;
        let b = 4 * n + 3;
        let a_f = Float::with_val(wp, a);
        let b_f = Float::with_val(wp, b);
        let pow_a = power(a);
        let pow_b = power(b);

        // ∫_N^∞ = (A^{1−s} − B^{1−s}) / (4(s−1))
        let w = Complex::one(wp) - &s;
        let ell = Float::with_val(wp, Float::with_val(wp, 2u32) / &a_f).ln_1p();
        let x = w.scale(&ell);
        let a_pow_w = (&pow_a).scale(&a_f);
        let integral = if x.abs().to_f64() < 0.5 {
            // (B^w − A^w)/w = A^w · ℓ · Σₘ (wℓ)^m / (m+1)!
            let mut series = Complex::one(wp);
            let mut term = Complex::one(wp);
            for m in 1u32.. {
                term = (&term * &x).div_real(&Float::with_val(wp, m + 1));
                series += &term;
                if term.abs().get_exp().unwrap_or(i32::MIN) < -(wp as i32) - 4 {
                    break;
                }
            }
            a_pow_w.scale(&ell) * series
        } else {
            let b_pow_w = (&pow_b).scale(&b_f);
            &(&b_pow_w - &a_pow_w) / &w
        };
        sum += integral.div_real(&Float::with_val(wp, 4u32));

        let mut half = &pow_a - &pow_b;
        half.re /= 2u32;
        half.im /= 2u32;
        sum += half;

        let inv_a = Float::with_val(wp, a_f.recip_ref());
        let inv_b = Float::with_val(wp, b_f.recip_ref());
        let inv_a_sq = Float::with_val(wp, inv_a.square_ref());
        let inv_b_sq = Float::with_val(wp, inv_b.square_ref());
        let mut pa = pow_a.scale(&inv_a); // A^{−s−2j+1}
        let mut pb = pow_b.scale(&inv_b);
        let mut q = s.scale_i64(4); // (s)_{2j−1} · 4^{2j−1}
        let coeffs = self.bernoulli_coeffs(plan.j, wp).to_vec();
        for (idx, c) in coeffs.iter().enumerate() {
            let j = idx + 1;
            if j > 1 {
                let x1 = s.add_real(&Float::with_val(wp, 2 * j - 3));
                let x2 = s.add_real(&Float::with_val(wp, 2 * j - 2));
                q = (&q * &(&x1 * &x2)).scale_i64(16);
                pa = pa.scale(&inv_a_sq);
                pb = pb.scale(&inv_b_sq);
            }
            let diff = &pa - &pb;
            sum += (&q * &diff).scale(c);
        }
        Ok(sum)
    }
}
