//! Verification reports: left side from a derivative bundle at s = 1/2,
//! right side from [`rhs_closed`], and an honest verdict.

use std::fmt;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::identities::{log_deriv_bell, rhs_closed, IdentityId, MAX_ORDER};
use crate::precision::{digits_agreement, AgreementCount, WorkingPrecision};
use crate::serde_float::{from_decimal, to_decimal};
use crate::spectral::secondary_zeta_at_depth;
use crate::zeros::ZeroCache;
use crate::zeta::{zeta_derivatives, DerivativeBundle};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub lhs: Real,
    pub rhs: Real,
    pub abs_diff: Real,
    pub digits_matched: AgreementCount,
    /// 0 for identities without a sum over zeros.
    pub zeros_used: usize,
    /// Uncertainty of the right side carried by the zero-sum tail; 0 when
    /// there is none.
    pub tail_error: Real,
    pub precision: WorkingPrecision,
    pub threshold: u32,
    pub verdict: Verdict,
    /// Digits the tail error permits; present for identities with a sum
    /// over zeros.
    pub achievable_digits: Option<u32>,
}

#[derive(Serialize, Deserialize)]
struct ReportRecord {
    schema: u32,
    id: IdentityId,
    verdict: Verdict,
    threshold: u32,
    digits_matched: AgreementCount,
    achievable_digits: Option<u32>,
    zeros_used: usize,
    lhs: String,
    rhs: String,
    abs_diff: String,
    tail_error: String,
    precision: WorkingPrecision,
}

impl IdentityReport {
    /// One JSON object, fields in a fixed order.
    pub fn to_json(&self) -> String {
        let record = ReportRecord {
            schema: REPORT_SCHEMA,
            id: self.id,
            verdict: self.verdict,
            threshold: self.threshold,
            digits_matched: self.digits_matched,
            achievable_digits: self.achievable_digits,
            zeros_used: self.zeros_used,
            lhs: to_decimal(&self.lhs),
            rhs: to_decimal(&self.rhs),
            abs_diff: to_decimal(&self.abs_diff),
            tail_error: to_decimal(&self.tail_error),
            precision: self.precision,
        };
        serde_json::to_string(&record).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<IdentityReport> {
        let bad = |what: &str| ZetaError::Domain(format!("invalid report json: {what}"));
        let r: ReportRecord = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
        if r.schema != REPORT_SCHEMA {
            return Err(bad(&format!("unsupported schema {}", r.schema)));
        }
        let bits = r.precision.bits();
        let num = |s: &str, name: &str| from_decimal(s, bits).ok_or_else(|| bad(name));
        Ok(IdentityReport {
            id: r.id,
            lhs: num(&r.lhs, "lhs")?,
            rhs: num(&r.rhs, "rhs")?,
            abs_diff: num(&r.abs_diff, "abs_diff")?,
            digits_matched: r.digits_matched,
            zeros_used: r.zeros_used,
            tail_error: num(&r.tail_error, "tail_error")?,
            precision: r.precision,
            threshold: r.threshold,
            verdict: r.verdict,
            achievable_digits: r.achievable_digits,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = (self.threshold + 5) as usize;
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        writeln!(f, "identity {} {verdict}", self.id)?;
        writeln!(f, "  lhs            {}", self.lhs.to_string_radix(10, Some(shown)))?;
        writeln!(f, "  rhs            {}", self.rhs.to_string_radix(10, Some(shown)))?;
        writeln!(f, "  |lhs - rhs|    {}", self.abs_diff.to_string_radix(10, Some(6)))?;
        writeln!(f, "  digits matched {} (threshold {})", self.digits_matched, self.threshold)?;
        if self.zeros_used > 0 {
            writeln!(f, "  zeros used     {}", self.zeros_used)?;
            writeln!(f, "  tail error     {}", self.tail_error.to_string_radix(10, Some(6)))?;
        }
        if let Some(d) = self.achievable_digits {
            writeln!(f, "  achievable     {d} digits")?;
        }
        write!(f, "  precision      {}", self.precision)
    }
}

/// The bundle the identities need at s = 1/2: ζ, ζ′, …, ζ⁽ᵒʳᵈᵉʳ⁾.
pub fn half_line_bundle(order: u32, p: &WorkingPrecision) -> Result<DerivativeBundle> {
    let s = Complex::with_val(p.bits(), 0.5, 0);
    zeta_derivatives(&s, order as usize, p)
}

/// Checks one identity against a `digits` threshold. Identities with a sum
/// over zeros use the first `zeros` cached ordinates.
pub fn verify_identity(
    id: IdentityId,
    digits: u32,
    zeros: usize,
    cache: Option<&ZeroCache>,
    p: &WorkingPrecision,
) -> Result<IdentityReport> {
    let bundle = half_line_bundle(id.order(), p)?;
    verify_with_bundle(id, digits, zeros, cache, &bundle, p)
}

/// As [`verify_identity`] with a precomputed bundle at s = 1/2.
pub fn verify_with_bundle(
    id: IdentityId,
    digits: u32,
    zeros: usize,
    cache: Option<&ZeroCache>,
    bundle: &DerivativeBundle,
    p: &WorkingPrecision,
) -> Result<IdentityReport> {
    let n = id.order();
    if n > MAX_ORDER {
        return Err(ZetaError::Domain(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let bits = p.bits();
    let lhs = Float::with_val(bits, &log_deriv_bell(bundle, n as usize)?.re);

    let (sums, zeros_used) = if id.needs_zeros() {
        let cache = cache.ok_or_else(|| {
            ZetaError::Precondition(format!("identity {id} needs a zero cache"))
        })?;
        if zeros == 0 {
            return Err(ZetaError::Precondition(format!(
                "identity {id} needs at least one zero"
            )));
        }
        (Some(secondary_zeta_at_depth(n, zeros, cache, p)?), zeros)
    } else {
        (None, 0)
    };
    let rhs = rhs_closed(id, sums.as_ref(), p)?;

    // the zero sum enters with weight 2^{n−1}(n−1)!·4/2ⁿ = 2·(n−1)!
    let tail_error = match &sums {
        Some(v) => {
            let weight = Float::with_val(bits, Float::factorial(n - 1)) * 2u32;
            Float::with_val(bits, &v.error_bound * weight)
        }
        None => Float::with_val(bits, 0),
    };
    let abs_diff = Float::with_val(bits, &lhs - &rhs).abs();
    let digits_matched = digits_agreement(&lhs, &rhs)?;
    let achievable_digits = sums.as_ref().map(|_| {
        let ratio = Float::with_val(64, rhs.abs_ref()) / Float::with_val(64, &tail_error);
        if ratio <= 1 {
            0
        } else {
            ratio.log10().to_f64().floor() as u32
        }
    });
    let pass = digits_matched.meets(digits) && achievable_digits.map_or(true, |a| digits <= a);
    Ok(IdentityReport {
        id,
        lhs,
        rhs,
        abs_diff,
        digits_matched,
        zeros_used,
        tail_error,
        precision: *p,
        threshold: digits,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        achievable_digits,
    })
}

/// Identities 1..5 and the general identity at n = 6, 7, sharing one bundle.
pub fn verify_all(
    digits_odd: u32,
    digits_even: u32,
    zeros: usize,
    cache: Option<&ZeroCache>,
    p: &WorkingPrecision,
) -> Result<Vec<IdentityReport>> {
    let ids: Vec<IdentityId> = IdentityId::NUMBERED
        .into_iter()
        .chain([IdentityId::General(6), IdentityId::General(7)])
        .collect();
    let order = ids.iter().map(IdentityId::order).max().unwrap_or(1);
    let bundle = half_line_bundle(order, p)?;
    ids.into_iter()
        .map(|id| {
            let digits = if id.needs_zeros() { digits_even } else { digits_odd };
            verify_with_bundle(id, digits, zeros, cache, &bundle, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_identity_at_forty_digits() {
        let p = WorkingPrecision::new(60);
        let r = verify_identity(IdentityId::Numbered(1), 40, 0, None, &p).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.zeros_used, 0);
        assert!(r.digits_matched.meets(40));
    }

    #[test]
    fn json_round_trip() {
        let p = WorkingPrecision::new(30);
        let r = verify_identity(IdentityId::Numbered(3), 25, 0, None, &p).unwrap();
        let text = r.to_json();
        assert!(text.starts_with("{\"schema\":1,"));
        let back = IdentityReport::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn even_identity_without_cache_is_an_error() {
        let p = WorkingPrecision::new(20);
        assert!(verify_identity(IdentityId::Numbered(2), 5, 1000, None, &p).is_err());
    }
}
