//! Ordinates of the nontrivial zeros on the critical line: θ and Hardy's Z,
//! sign-change isolation with a zero-count check, refinement, and the cache.

pub mod cache;

use rug::ops::Pow;
use rug::Float;

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::precision::{bits_to_digits, digits_to_bits, WorkingPrecision};
use crate::special::constants::pi_bits;
use crate::special::gamma::log_gamma_bits;
use crate::zeta::ZetaEngine;

pub use cache::{
    cache_load, cache_store, format_significant, CacheError, ZeroCache, ZeroRecord,
};

/// Digits used for the coarse sign scan.
const SCAN_DIGITS: u32 = 25;
/// Below this |Z| the scan re-evaluates at full precision before trusting a sign.
const SCAN_NEAR_ZERO: f64 = 1e-15;
/// Bracket width handed from bisection to Newton.
const NEWTON_START_WIDTH: f64 = 1e-3;
/// Circle radius and node count for Z′ in complex t.
const DERIV_RADIUS: f64 = 1e-2;
const DERIV_NODES: usize = 8;
const NEWTON_FIRST_STAGE_DIGITS: u32 = 20;
const NEWTON_MAX_STEPS: usize = 8;
/// Allowed |found − expected| in the zero-count check.
pub const COUNT_SLACK: f64 = 2.0;

/// θ(t) = Im log Γ(1/4 + it/2) − (t/2)·log π, unwrapped.
pub fn rs_theta(t: &Real, p: &WorkingPrecision) -> Result<Real> {
    let bits = p.bits();
    let th = theta_bits(t, bits + 8)?;
    Ok(Float::with_val(bits, th))
}

/// θ to about `bits` bits of absolute accuracy.
fn theta_bits(t: &Float, bits: u32) -> Result<Float> {
    if !t.is_finite() {
        return Err(ZetaError::NonFinite("rs_theta"));
    }
    let wp = bits + 16;
    let z = Complex::with_val(wp, 0.25, Float::with_val(wp, t / 2u32));
    let lg = log_gamma_bits(&z, wp)?;
    let ln_pi = pi_bits(wp).ln();
    Ok(lg.im - Float::with_val(wp, t * ln_pi) / 2u32)
}

/// Hardy's Z at a fixed precision, holding one ζ engine for repeated calls.
pub struct HardyZ {
    bits: u32,
    engine: ZetaEngine,
    ln_pi: Float,
    tolerance: Float,
}

impl HardyZ {
    pub fn new(bits: u32) -> Self {
        let wp = bits + 16;
        HardyZ {
            bits,
            engine: ZetaEngine::new(wp),
            ln_pi: pi_bits(wp).ln(),
            tolerance: Float::with_val(64, 10).pow(-(bits_to_digits(bits) as i32)),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    fn wp(&self) -> u32 {
        self.bits + 16
    }

    /// Z(t) for real t; an imaginary residue above 10^(−digits) is an error.
    pub fn eval(&mut self, t: &Float) -> Result<Float> {
        let wp = self.wp();
        let t = Float::with_val(wp, t);
        let z = self.eval_complex(&Complex::from_real(t.clone()))?;
        let scale = Float::with_val(64, z.re.abs_ref()).max(&Float::with_val(64, 1));
        let residue = Float::with_val(64, z.im.abs_ref());
        if residue > Float::with_val(64, &self.tolerance * &scale) {
            return Err(ZetaError::ImaginaryResidue {
                t: t.to_string_radix(10, Some(20)),
                residue: residue.to_f64(),
            });
        }
        Ok(Float::with_val(self.bits, z.re))
    }

    /// Z continued to complex t, e^{iθ(t)}·ζ(1/2 + it) with
    /// θ(t) = [log Γ(1/4 + it/2) − log Γ(1/4 − it/2)]/(2i) − (t/2)·log π.
    pub fn eval_complex(&mut self, t: &Complex) -> Result<Complex> {
        let wp = self.wp();
        let t = t.clone().with_prec(wp);
        let it = t.mul_i();
        let half = Float::with_val(wp, 0.5);
        let s = it.add_real(&half);
        let zeta = self.engine.zeta(&s)?;
        let quarter = Float::with_val(wp, 0.25);
        let half_it = it.div_real(&Float::with_val(wp, 2));
        let a = log_gamma_bits(&half_it.add_real(&quarter), wp)?;
        let b = log_gamma_bits(&(-half_it).add_real(&quarter), wp)?;
        // (a − b)/(2i) = −i(a − b)/2
        let diff = (a - b).div_real(&Float::with_val(wp, 2));
        let mut theta = -diff.mul_i();
        theta -= &t.scale(&self.ln_pi).div_real(&Float::with_val(wp, 2));
        let phase = theta.mul_i().exp();
        Ok(phase * zeta)
    }

    /// Z′(t) for real t from the trapezoidal Cauchy integral on a small
    /// circle in the complex t-plane; Z(t̄) = conj Z(t) halves the work.
    pub fn derivative(&mut self, t: &Float) -> Result<Float> {
        let wp = self.wp();
        let r = Float::with_val(wp, DERIV_RADIUS);
        let two_pi = pi_bits(wp) * 2u32;
        let m = DERIV_NODES;
        let mut acc = Float::with_val(wp, 0);
        for j in 0..=m / 2 {
            let angle = Float::with_val(wp, &two_pi * j as u32) / m as u32;
            let (sin, cos) = angle.sin_cos(Float::new(wp));
            let node = Complex::new(Float::with_val(wp, t + &r * &cos), Float::with_val(wp, &r * &sin));
            let z = self.eval_complex(&node)?;
            // Re(Z(node)·e^{−iφ}); the mirrored node contributes the same
            let contrib = Float::with_val(wp, &z.re * &cos) + Float::with_val(wp, &z.im * &sin);
            if j == 0 || 2 * j == m {
                acc += contrib;
            } else {
                acc += contrib * 2u32;
            }
        }
        Ok(acc / (r * m as u32))
    }
}

/// Z(t) = e^{iθ(t)}·ζ(1/2 + it) for real t, escalating precision when the
/// imaginary residue is not negligible.
pub fn hardy_z(t: &Real, p: &WorkingPrecision) -> Result<Real> {
    let mut q = *p;
    let mut level = 0;
    loop {
        match HardyZ::new(q.bits()).eval(t) {
            Err(ZetaError::ImaginaryResidue { .. }) if level < p.max_escalations => {
                level += 1;
                q = q.escalated();
            }
            other => return other.map(|z| Float::with_val(p.bits(), z)),
        }
    }
}

/// An interval [lo, hi] on which Z changes sign, holding the zero `index`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    pub index: usize,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanOptions {
    pub step_low: f64,
    pub step_high: f64,
    /// Height at which the scan switches from `step_low` to `step_high`.
    pub switch_height: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            step_low: 0.05,
            step_high: 0.03,
            switch_height: 1000.0,
        }
    }
}

impl ScanOptions {
    pub fn uniform(step: f64) -> Self {
        ScanOptions {
            step_low: step,
            step_high: step,
            switch_height: f64::INFINITY,
        }
    }

    fn halved(&self) -> Self {
        ScanOptions {
            step_low: self.step_low / 2.0,
            step_high: self.step_high / 2.0,
            switch_height: self.switch_height,
        }
    }

    fn step_at(&self, t: f64) -> f64 {
        if t < self.switch_height {
            self.step_low
        } else {
            self.step_high
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CountCheck {
    pub passed: bool,
    /// θ(T)/π + 1.
    pub expected: f64,
}

/// Compares `found` with θ(T)/π + 1 allowing a slack of ±2.
pub fn zero_count_check(height: f64, found: usize) -> Result<CountCheck> {
    if !height.is_finite() || height <= 14.0 {
        return Err(ZetaError::Precondition(format!(
            "zero count check needs T > 14, got {height}"
        )));
    }
    let bits = 64;
    let theta = theta_bits(&Float::with_val(bits, height), bits)?;
    let expected = (theta / pi_bits(bits)).to_f64() + 1.0;
    Ok(CountCheck {
        passed: (found as f64 - expected).abs() <= COUNT_SLACK,
        expected,
    })
}

/// Grid scanner shared by the isolation entry points.
struct Scanner {
    coarse: HardyZ,
    fine: HardyZ,
    options: ScanOptions,
    t: f64,
    z: Float,
    brackets: Vec<Bracket>,
}

impl Scanner {
    fn new(p: &WorkingPrecision, options: ScanOptions) -> Result<Self> {
        let coarse_bits = digits_to_bits(p.internal_digits().min(SCAN_DIGITS));
        let mut s = Scanner {
            coarse: HardyZ::new(coarse_bits),
            fine: HardyZ::new(p.bits()),
            options,
            t: 0.0,
            z: Float::new(64),
            brackets: Vec::new(),
        };
        s.z = s.sign_value(0.0)?;
        Ok(s)
    }

    fn sign_value(&mut self, t: f64) -> Result<Float> {
        let tf = Float::with_val(64, t);
        let z = self.coarse.eval(&tf)?;
        if z.clone().abs() < SCAN_NEAR_ZERO {
            return self.fine.eval(&tf);
        }
        Ok(z)
    }

    /// Advances one grid step, recording a bracket on a sign change.
    fn step(&mut self) -> Result<()> {
        let next = self.t + self.options.step_at(self.t);
        let z = self.sign_value(next)?;
        if z.is_zero() || self.z.is_sign_negative() != z.is_sign_negative() {
            self.brackets.push(Bracket {
                index: self.brackets.len() + 1,
                lo: self.t,
                hi: next,
            });
        }
        self.t = next;
        self.z = z;
        Ok(())
    }
}

/// One bracket per sign change of Z on (0, t_max], with default steps.
pub fn isolate_zeros(t_max: f64, p: &WorkingPrecision) -> Result<Vec<Bracket>> {
    isolate_zeros_with(t_max, p, ScanOptions::default())
}

/// As [`isolate_zeros`] with explicit scan steps. On a failed count check
/// the scan is repeated with halved steps, twice, before giving up.
pub fn isolate_zeros_with(
    t_max: f64,
    p: &WorkingPrecision,
    options: ScanOptions,
) -> Result<Vec<Bracket>> {
    if !t_max.is_finite() || t_max <= 14.0 {
        return Err(ZetaError::Precondition(format!(
            "isolate_zeros needs t_max > 14, got {t_max}"
        )));
    }
    let mut options = options;
    let mut last = None;
    for _ in 0..3 {
        let mut scan = Scanner::new(p, options)?;
        while scan.t + scan.options.step_at(scan.t) <= t_max {
            scan.step()?;
        }
        let check = zero_count_check(scan.t.max(t_max), scan.brackets.len())?;
        if check.passed {
            return Ok(scan.brackets);
        }
        last = Some((scan.brackets.len(), check.expected));
        options = options.halved();
    }
    let (found, expected) = last.expect("at least one scan ran");
    Err(ZetaError::PossibleMissedZeros {
        height: t_max,
        found,
        expected,
    })
}

/// Brackets for the first `n` zeros.
pub fn isolate_first_n(
    n: usize,
    p: &WorkingPrecision,
    options: ScanOptions,
) -> Result<Vec<Bracket>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut options = options;
    let mut last = None;
    for _ in 0..3 {
        let mut scan = Scanner::new(p, options)?;
        while scan.brackets.len() < n || scan.t <= 14.0 {
            scan.step()?;
        }
        let check = zero_count_check(scan.t, scan.brackets.len())?;
        if check.passed {
            scan.brackets.truncate(n);
            return Ok(scan.brackets);
        }
        last = Some((scan.t, scan.brackets.len(), check.expected));
        options = options.halved();
    }
    let (height, found, expected) = last.expect("at least one scan ran");
    Err(ZetaError::PossibleMissedZeros {
        height,
        found,
        expected,
    })
}

/// Refines brackets at one working precision, reusing ζ engines.
pub struct ZeroRefiner {
    p: WorkingPrecision,
    coarse: HardyZ,
    stages: Vec<HardyZ>,
}

impl ZeroRefiner {
    pub fn new(p: &WorkingPrecision) -> Self {
        let internal = p.internal_digits();
        let mut stage_digits = Vec::new();
        let mut d = NEWTON_FIRST_STAGE_DIGITS.min(internal);
        loop {
            stage_digits.push(d);
            if d >= internal {
                break;
            }
            d = (2 * d).min(internal);
        }
        ZeroRefiner {
            p: *p,
            coarse: HardyZ::new(digits_to_bits(internal.min(SCAN_DIGITS))),
            stages: stage_digits
                .into_iter()
                .map(|d| HardyZ::new(digits_to_bits(d)))
                .collect(),
        }
    }

    fn full(&mut self) -> &mut HardyZ {
        self.stages.last_mut().expect("at least one stage")
    }

    /// Bisection to width 10⁻³, Newton with precision doubling, then a
    /// sign-straddle certificate at ±10^(−digits)·t; falls back to pure
    /// bisection when Newton leaves the bracket or the certificate fails.
    pub fn refine(&mut self, bracket: &Bracket) -> Result<ZeroRecord> {
        let bits = self.p.bits();
        let (mut lo, mut hi) = (Float::with_val(bits, bracket.lo), Float::with_val(bits, bracket.hi));
        let mut z_lo = self.coarse.eval(&lo)?;
        let z_hi = self.coarse.eval(&hi)?;
        if z_lo.is_sign_negative() == z_hi.is_sign_negative() && !z_lo.is_zero() && !z_hi.is_zero() {
            return Err(ZetaError::Precondition(format!(
                "no sign change on [{}, {}]",
                bracket.lo, bracket.hi
            )));
        }
        while Float::with_val(64, &hi - &lo) > NEWTON_START_WIDTH {
            let mid = Float::with_val(bits, &lo + &hi) / 2u32;
            let z_mid = self.coarse.eval(&mid)?;
            if z_mid.is_sign_negative() == z_lo.is_sign_negative() {
                lo = mid;
                z_lo = z_mid;
            } else {
                hi = mid;
            }
        }
        let mut t = Float::with_val(bits, &lo + &hi) / 2u32;
        if let Some(root) = self.newton(&mut t, &lo, &hi)? {
            if let Some(record) = self.certify(bracket.index, root)? {
                return Ok(record);
            }
        }
        self.bisect(bracket.index, lo, hi)
    }

    /// Returns `None` when an iterate escapes [lo, hi].
    fn newton(&mut self, t: &mut Float, lo: &Float, hi: &Float) -> Result<Option<Float>> {
        let bits = self.p.bits();
        for stage in 0..self.stages.len() {
            let hz = &mut self.stages[stage];
            let stage_bits = hz.bits();
            let tol = Float::with_val(64, &*t) * Float::with_val(64, 2).pow(-(stage_bits as i32) + 6);
            let d = hz.derivative(t)?;
            if d.is_zero() {
                return Ok(None);
            }
            for _ in 0..NEWTON_MAX_STEPS {
                let z = hz.eval(t)?;
                let delta = Float::with_val(bits, &z / &d);
                *t -= &delta;
                if *t <= *lo || *t >= *hi {
                    return Ok(None);
                }
                if delta.abs() <= tol {
                    break;
                }
            }
        }
        Ok(Some(t.clone()))
    }

    fn certify(&mut self, index: usize, t: Float) -> Result<Option<ZeroRecord>> {
        let bits = self.p.bits();
        let eps = Float::with_val(bits, &t)
            * Float::with_val(bits, 10).pow(-(self.p.requested_digits as i32))
            / 4u32;
        let hz = self.full();
        let a = hz.eval(&Float::with_val(bits, &t - &eps))?;
        let b = hz.eval(&Float::with_val(bits, &t + &eps))?;
        if a.is_sign_negative() == b.is_sign_negative() {
            return Ok(None);
        }
        let residual = hz.eval(&t)?.abs().to_f64();
        Ok(Some(ZeroRecord {
            index,
            ordinate: t,
            certified_digits: self.p.requested_digits,
            residual: Some(residual),
        }))
    }

    /// Bisection at full precision to width 10^(−digits−5)·t.
    fn bisect(&mut self, index: usize, mut lo: Float, mut hi: Float) -> Result<ZeroRecord> {
        let bits = self.p.bits();
        let target = Float::with_val(64, &lo)
            * Float::with_val(64, 10).pow(-(self.p.requested_digits as i32) - 5);
        let hz = self.full();
        let mut z_lo = hz.eval(&lo)?;
        while Float::with_val(64, &hi - &lo) > target {
            let mid = Float::with_val(bits, &lo + &hi) / 2u32;
            if mid == lo || mid == hi {
                break;
            }
            let z_mid = hz.eval(&mid)?;
            if z_mid.is_zero() {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if z_mid.is_sign_negative() == z_lo.is_sign_negative() {
                lo = mid;
                z_lo = z_mid;
            } else {
                hi = mid;
            }
        }
        let t = Float::with_val(bits, &lo + &hi) / 2u32;
        let residual = hz.eval(&t)?.abs().to_f64();
        Ok(ZeroRecord {
            index,
            ordinate: t,
            certified_digits: self.p.requested_digits,
            residual: Some(residual),
        })
    }
}

/// Refined ordinate of the zero in `bracket`, certified to the requested digits.
pub fn refine_zero(bracket: &Bracket, p: &WorkingPrecision) -> Result<ZeroRecord> {
    ZeroRefiner::new(p).refine(bracket)
}

/// Pure bisection at full precision; the oracle for [`refine_zero`].
pub fn refine_zero_bisection(bracket: &Bracket, p: &WorkingPrecision) -> Result<ZeroRecord> {
    let bits = p.bits();
    let mut r = ZeroRefiner::new(p);
    let lo = Float::with_val(bits, bracket.lo);
    let hi = Float::with_val(bits, bracket.hi);
    let (a, b) = (r.full().eval(&lo)?, r.full().eval(&hi)?);
    if a.is_sign_negative() == b.is_sign_negative() {
        return Err(ZetaError::Precondition(format!(
            "no sign change on [{}, {}]",
            bracket.lo, bracket.hi
        )));
    }
    r.bisect(bracket.index, lo, hi)
}

fn refine_all(brackets: &[Bracket], p: &WorkingPrecision) -> Result<ZeroCache> {
    let mut refiner = ZeroRefiner::new(p);
    let mut cache = ZeroCache::new(p.requested_digits);
    for b in brackets {
        cache.records.push(refiner.refine(b)?);
    }
    cache.validate()?;
    Ok(cache)
}

/// All zeros with ordinate up to `t_max`.
pub fn compute_zeros_upto(t_max: f64, p: &WorkingPrecision) -> Result<ZeroCache> {
    refine_all(&isolate_zeros(t_max, p)?, p)
}

/// The first `count` zeros.
pub fn compute_zeros(count: usize, p: &WorkingPrecision) -> Result<ZeroCache> {
    refine_all(&isolate_first_n(count, p, ScanOptions::default())?, p)
}

/// Extends `cache` to `count` zeros, keeping the existing records when
/// their precision suffices.
pub fn extend_zeros(cache: &ZeroCache, count: usize, p: &WorkingPrecision) -> Result<ZeroCache> {
    if cache.contiguous() && cache.digits >= p.requested_digits && cache.len() >= count {
        return Ok(cache.truncated(count));
    }
    let brackets = isolate_first_n(count, p, ScanOptions::default())?;
    let reuse = cache.contiguous() && cache.digits >= p.requested_digits;
    let mut refiner = ZeroRefiner::new(p);
    let mut out = ZeroCache::new(p.requested_digits);
    for b in &brackets {
        match cache.records.get(b.index - 1) {
            Some(r) if reuse => out.records.push(r.clone()),
            _ => out.records.push(refiner.refine(b)?),
        }
    }
    out.validate()?;
    Ok(out)
}
