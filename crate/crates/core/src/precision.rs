//! Working precision, the digit-agreement metric and two-trial escalation.
//!
//! Precision is expressed to users in decimal digits. Internally each value
//! is computed at `requested + guard` digits, converted to binary precision
//! as `ceil(digits · log2 10) + 8` bits.

use std::fmt;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};

pub const DEFAULT_GUARD_DIGITS: u32 = 15;
pub const DEFAULT_MAX_ESCALATIONS: u32 = 3;
/// Extra digits used by the second trial of [`evaluate_with_escalation`].
pub const TRIAL_OFFSET_DIGITS: u32 = 10;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 8
}

/// Decimal digits carried by a binary precision, rounded down.
pub fn bits_to_digits(bits: u32) -> u32 {
    (bits as f64 / LOG2_10).floor() as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WorkingPrecision {
    pub requested_digits: u32,
    pub guard_digits: u32,
    pub max_escalations: u32,
}

impl WorkingPrecision {
    /// Panics when `requested_digits` is zero.
    pub fn new(requested_digits: u32) -> Self {
        Self::try_new(requested_digits).expect("requested digits must be positive")
    }

    pub fn try_new(requested_digits: u32) -> Result<Self> {
        if requested_digits == 0 {
            return Err(ZetaError::Precondition(
                "requested digits must be positive".into(),
            ));
        }
        Ok(WorkingPrecision {
            requested_digits,
            guard_digits: DEFAULT_GUARD_DIGITS,
            max_escalations: DEFAULT_MAX_ESCALATIONS,
        })
    }

    /// Guard digits are clamped to at least one so internal digits always
    /// exceed the request.
    pub fn with_guard_digits(mut self, guard: u32) -> Self {
        self.guard_digits = guard.max(1);
        self
    }

    pub fn with_max_escalations(mut self, n: u32) -> Self {
        self.max_escalations = n;
        self
    }

    pub fn internal_digits(&self) -> u32 {
        self.requested_digits + self.guard_digits.max(1)
    }

    pub fn bits(&self) -> u32 {
        digits_to_bits(self.internal_digits())
    }

    /// Same request, internal digits doubled.
    pub fn escalated(&self) -> Self {
        let doubled = 2 * self.internal_digits();
        self.with_guard_digits(doubled - self.requested_digits)
    }

    /// Absolute tolerance `10^(−internal digits)` as an `f64` (saturating to 0).
    pub fn epsilon(&self) -> f64 {
        10f64.powi(-(self.internal_digits() as i32))
    }
}

impl fmt::Display for WorkingPrecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} digits (+{} guard)",
            self.requested_digits, self.guard_digits
        )
    }
}

/// Number of leading significant decimal digits two values share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AgreementCount {
    Digits(u32),
    AllAtPrecision,
}

impl AgreementCount {
    pub fn meets(&self, threshold: u32) -> bool {
        match self {
            AgreementCount::Digits(d) => *d >= threshold,
            AgreementCount::AllAtPrecision => true,
        }
    }

    /// Numeric value, with `AllAtPrecision` mapped to `cap`.
    pub fn value_or(&self, cap: u32) -> u32 {
        match self {
            AgreementCount::Digits(d) => *d,
            AgreementCount::AllAtPrecision => cap,
        }
    }
}

impl fmt::Display for AgreementCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AgreementCount::Digits(d) => write!(f, "{d}"),
            AgreementCount::AllAtPrecision => f.write_str("all-at-precision"),
        }
    }
}

/// `floor(−log10(|a − b| / max(|a|, |b|)))`, clamped to `[0, digits carried
/// by the less precise input]`.
pub fn digits_agreement(a: &Real, b: &Real) -> Result<AgreementCount> {
    if !a.is_finite() || !b.is_finite() {
        return Err(ZetaError::NonFinite("digits_agreement"));
    }
    if a == b {
        return Ok(AgreementCount::AllAtPrecision);
    }
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    let scale = Float::with_val(prec, a.abs_ref()).max(&Float::with_val(prec, b.abs_ref()));
    Ok(agreement_from_ratio(diff, scale, a.prec().min(b.prec())))
}

/// Agreement of complex values, measured on the modulus of the difference.
pub fn digits_agreement_complex(a: &Complex, b: &Complex) -> Result<AgreementCount> {
    if !a.is_finite() || !b.is_finite() {
        return Err(ZetaError::NonFinite("digits_agreement"));
    }
    if a == b {
        return Ok(AgreementCount::AllAtPrecision);
    }
    let diff = (a - b).abs();
    let scale = a.abs().max(&b.abs());
    Ok(agreement_from_ratio(diff, scale, a.prec().min(b.prec())))
}

fn agreement_from_ratio(diff: Float, scale: Float, min_bits: u32) -> AgreementCount {
    let cap = bits_to_digits(min_bits);
    let digits = -(diff / scale).log10().to_f64();
    if digits <= 0.0 {
        AgreementCount::Digits(0)
    } else {
        AgreementCount::Digits((digits.floor() as u32).min(cap))
    }
}

/// A value whose two trials can be compared by [`evaluate_with_escalation`].
pub trait Approximant {
    fn agrees_to(&self, other: &Self, digits: u32) -> bool;
    fn describe(&self) -> String;
}

impl Approximant for Float {
    fn agrees_to(&self, other: &Self, digits: u32) -> bool {
        digits_agreement(self, other)
            .map(|a| a.meets(digits))
            .unwrap_or(false)
    }

    fn describe(&self) -> String {
        self.to_string_radix(10, Some(bits_to_digits(self.prec()) as usize))
    }
}

impl Approximant for Complex {
    fn agrees_to(&self, other: &Self, digits: u32) -> bool {
        digits_agreement_complex(self, other)
            .map(|a| a.meets(digits))
            .unwrap_or(false)
    }

    fn describe(&self) -> String {
        format!("{:.*}", bits_to_digits(self.prec()) as usize, self)
    }
}

impl<T: Approximant> Approximant for Vec<T> {
    fn agrees_to(&self, other: &Self, digits: u32) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.agrees_to(b, digits))
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.iter().map(Approximant::describe).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Evaluate `f` at the internal precision of `p` and again at ten more
/// digits; accept when the trials agree to the requested digits, otherwise
/// double the internal digits up to `p.max_escalations` times.
///
/// The returned value is the more precise of the two accepted trials.
pub fn evaluate_with_escalation<T, F>(p: &WorkingPrecision, f: F) -> Result<T>
where
    T: Approximant,
    F: Fn(&WorkingPrecision) -> Result<T>,
{
    let mut trial = *p;
    let mut level = 0;
    loop {
        let first = f(&trial)?;
        let finer = trial.with_guard_digits(trial.guard_digits + TRIAL_OFFSET_DIGITS);
        let second = f(&finer)?;
        if first.agrees_to(&second, p.requested_digits) {
            return Ok(second);
        }
        if level >= p.max_escalations {
            return Err(ZetaError::PrecisionUnattainable {
                first: first.describe(),
                second: second.describe(),
            });
        }
        level += 1;
        trial = trial.escalated();
    }
}
