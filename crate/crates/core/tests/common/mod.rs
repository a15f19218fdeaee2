//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use rug::ops::Pow;
use rug::Float;
use zetamill::zeros::{cache_load, cache_store, compute_zeros, ZeroCache};
use zetamill::WorkingPrecision;

pub const CACHE_ZEROS: usize = 1001;
pub const CACHE_DIGITS: u32 = 30;

fn cache_file() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("zeros-1001-30.zc")
}

/// The first 1001 zeros at 30 digits, computed once and kept in the target
/// directory so every test binary shares it.
pub fn zero_cache() -> &'static ZeroCache {
    static CACHE: OnceLock<ZeroCache> = OnceLock::new();
    CACHE.get_or_init(|| {
        let path = cache_file();
        if let Ok(c) = cache_load(&path) {
            if c.len() >= CACHE_ZEROS && c.digits >= CACHE_DIGITS && c.contiguous() {
                return c;
            }
        }
        let c = compute_zeros(CACHE_ZEROS, &WorkingPrecision::new(CACHE_DIGITS)).expect("zeros");
        cache_store(&c, &path).expect("store cache");
        c
    })
}

pub fn cache_path() -> PathBuf {
    zero_cache();
    cache_file()
}

pub fn f(bits: u32, v: f64) -> Float {
    Float::with_val(bits, v)
}

/// |a − b| ≤ tol·max(1, |b|).
pub fn close(a: &Float, b: &Float, tol: f64) -> bool {
    let d = Float::with_val(a.prec().max(b.prec()), a - b).abs();
    let scale = Float::with_val(64, b.abs_ref()).to_f64().max(1.0);
    d.to_f64() <= tol * scale
}

/// Decimal digits two values share, computed independently of the library.
pub fn shared_digits(a: &Float, b: &Float) -> f64 {
    let bits = a.prec().max(b.prec());
    let d = Float::with_val(bits, a - b).abs();
    if d.is_zero() {
        return f64::INFINITY;
    }
    let rel = d / Float::with_val(bits, b.abs_ref());
    -rel.log10().to_f64()
}

/// Σ_{k≥0} (−1)ᵏ a(k) by the Cohen–Villegas–Zagier acceleration with `n`
/// terms; the error is about 5.8⁻ⁿ relative to the largest term.
pub fn alternating_sum(bits: u32, n: u32, a: impl Fn(u32) -> Float) -> Float {
    let sqrt8 = Float::with_val(bits, 8).sqrt();
    let mut d = Float::with_val(bits, Float::with_val(bits, sqrt8 + 3u32).pow(n));
    d = Float::with_val(bits, &d + Float::with_val(bits, d.recip_ref())) / 2u32;
    let mut b = Float::with_val(bits, -1);
    let mut c = Float::with_val(bits, -&d);
    let mut s = Float::with_val(bits, 0);
    for k in 0..n {
        c = Float::with_val(bits, &b - &c);
        s += Float::with_val(bits, &c * a(k));
        let (kf, nf) = (k as f64, n as f64);
        b *= (kf + nf) * (kf - nf);
        b /= (kf + 0.5) * (kf + 1.0);
    }
    s / d
}

/// f′(x) by Richardson extrapolation of central differences, h = h0/2^j.
pub fn richardson_derivative(bits: u32, x: &Float, h0: f64, levels: usize, f: impl Fn(&Float) -> Float) -> Float {
    let mut prev: Vec<Float> = Vec::new();
    let mut h = Float::with_val(bits, h0);
    for _ in 0..levels {
        let up = f(&Float::with_val(bits, x + &h));
        let down = f(&Float::with_val(bits, x - &h));
        let mut row = vec![Float::with_val(bits, up - down) / Float::with_val(bits, &h * 2u32)];
        let mut factor = Float::with_val(bits, 1);
        for (m, p) in prev.iter().enumerate() {
            factor *= 4u32;
            let last = &row[m];
            let step = Float::with_val(bits, last - p) / Float::with_val(bits, &factor - 1u32);
            row.push(Float::with_val(bits, last + &step));
        }
        prev = row;
        h /= 2u32;
    }
    prev.pop().expect("levels ≥ 1")
}
