//! ζ⁽ᵏ⁾(s) from the Cauchy integral on a circle, by the trapezoidal rule.
//!
//! With M nodes on |z − s| = r the k-th Taylor coefficient is recovered with
//! an aliasing error of order (r/R)^M, R = |s − 1| being the distance to the
//! pole. The radius is min(1/4, |s − 1|/2), so R/r ≥ 2.

use rug::Float;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::{Approximant, WorkingPrecision};
use crate::special::constants::pi_bits;
use crate::zeta::engine::ZetaEngine;

#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeBundle {
    pub point: Complex,
    pub order: usize,
    /// ζ(s), ζ′(s), …, ζ⁽ᴷ⁾(s).
    pub values: Vec<Complex>,
    pub precision: WorkingPrecision,
    /// Quadrature nodes used (0 when only ζ(s) was needed).
    pub nodes: usize,
}

impl DerivativeBundle {
    pub fn value(&self, k: usize) -> &Complex {
        &self.values[k]
    }
}

impl Approximant for DerivativeBundle {
    fn agrees_to(&self, other: &Self, digits: u32) -> bool {
        self.values.agrees_to(&other.values, digits)
    }

    fn describe(&self) -> String {
        self.values.describe()
    }
}

pub fn default_radius(s: &Complex) -> f64 {
    let d = Complex::with_val(64, &s.re - 1u32, &s.im).abs().to_f64();
    (d / 2.0).min(0.25)
}

pub fn zeta_derivatives(s: &Complex, order: usize, p: &WorkingPrecision) -> Result<DerivativeBundle> {
    if s.im.is_zero() && s.re == 1 {
        return Err(ZetaError::Pole);
    }
    zeta_derivatives_with_radius(s, order, default_radius(s), p)
}

/// As [`zeta_derivatives`] with an explicit contour radius.
pub fn zeta_derivatives_with_radius(
    s: &Complex,
    order: usize,
    radius: f64,
    p: &WorkingPrecision,
) -> Result<DerivativeBundle> {
    if !s.is_finite() {
        return Err(ZetaError::NonFinite("zeta_derivatives"));
    }
    let dist = Complex::with_val(64, &s.re - 1u32, &s.im).abs().to_f64();
    if !(radius > 0.0) || dist <= radius {
        return Err(ZetaError::ContourContainsPole {
            center: format!("{:.12}", s),
            radius,
        });
    }
    let bits = p.bits();
    let mut engine = ZetaEngine::new(bits + 8);
    let center_value = engine.zeta(&s.clone().with_prec(bits + 8))?;
    let mut values = vec![center_value.with_prec(bits)];
    if order == 0 {
        return Ok(DerivativeBundle {
            point: s.clone(),
            order,
            values,
            precision: *p,
            nodes: 0,
        });
    }

    // k!/r^k amplifies node errors; rounding across M nodes costs log2 M more
    let k = order as f64;
    let amplification = (1..=order).map(|i| (i as f64).log2()).sum::<f64>() - k * radius.log2();
    let node_bits = bits + 16 + amplification.ceil() as u32;
    let ratio = (dist / radius).log2();
    let m = (((node_bits + 16) as f64 / ratio).ceil() as usize + order + 2).next_multiple_of(2);
    let wp = node_bits + (m as f64).log2().ceil() as u32;

    let mut engine = ZetaEngine::new(wp);
    let two_pi = Float::with_val(wp, pi_bits(wp) * 2u32);
    let r = Float::with_val(wp, radius);
    let center = s.clone().with_prec(wp);
    let real_axis = s.im.is_zero();

    // unit roots e^{2πij/M}
    let roots: Vec<Complex> = (0..m)
        .map(|j| {
            let angle = Float::with_val(wp, &two_pi * j as u32) / m as u32;
            let (sin, cos) = angle.sin_cos(Float::new(wp));
            Complex::new(cos, sin)
        })
        .collect();

    let mut samples: Vec<Option<Complex>> = vec![None; m];
    for j in 0..m {
        if samples[j].is_some() {
            continue;
        }
        let z = &center + &roots[j].scale(&r);
        let v = engine.zeta(&z)?;
        if real_axis && j != 0 && 2 * j != m {
            // ζ(z̄) = conj ζ(z)
            samples[m - j] = Some(v.conj());
        }
        samples[j] = Some(v);
    }
    let samples: Vec<Complex> = samples.into_iter().map(|v| v.expect("filled")).collect();

    let mut scale = Float::with_val(wp, 1); // k! / r^k
    for kk in 1..=order {
        scale *= kk as u32;
        scale /= &r;
        let mut acc = Complex::zero(wp);
        for (j, f) in samples.iter().enumerate() {
            let root = &roots[(m - (j * kk) % m) % m];
            acc += f * root;
        }
        let mut v = acc.scale(&scale).div_real(&Float::with_val(wp, m as u32));
        if real_axis {
            v.im = Float::new(wp);
        }
        values.push(v.with_prec(bits));
    }

    Ok(DerivativeBundle {
        point: s.clone(),
        order,
        values,
        precision: *p,
        nodes: m,
    })
}
