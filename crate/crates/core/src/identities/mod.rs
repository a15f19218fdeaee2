//! Closed-form evaluations of the derivatives of ζ′/ζ at s = 1/2 and the
//! checks that compare them with derivative bundles and sums over zeros.

pub mod report;
pub mod xi;

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Float, Integer};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{Complex, Real};
use crate::error::{Result, ZetaError};
use crate::precision::WorkingPrecision;
use crate::special::constants::{catalan_bits, euler_gamma_bits, pi_bits};
use crate::spectral::SecondaryZetaValue;
use crate::zeta::{beta_odd_closed, zeta_even_closed, DerivativeBundle, ZetaEngine};

pub use report::{verify_all, verify_identity, IdentityReport, Verdict};
pub use xi::{
    big_xi, xi, xi_product_check, zeta_product_eval, zeta_product_eval_with_error, ProductCheck,
};

/// Highest derivative order the suite evaluates.
pub const MAX_ORDER: u32 = 8;

/// One of the five displayed identities, or the general one at order n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Numbered(u8),
    General(u32),
}

impl IdentityId {
    pub const NUMBERED: [IdentityId; 5] = [
        IdentityId::Numbered(1),
        IdentityId::Numbered(2),
        IdentityId::Numbered(3),
        IdentityId::Numbered(4),
        IdentityId::Numbered(5),
    ];

    pub fn new(n: u8) -> Result<Self> {
        if (1..=5).contains(&n) {
            Ok(IdentityId::Numbered(n))
        } else {
            Err(ZetaError::Domain(format!("identities are numbered 1..5, got {n}")))
        }
    }

    pub fn general(n: u32) -> Result<Self> {
        if (2..=MAX_ORDER).contains(&n) {
            Ok(IdentityId::General(n))
        } else {
            Err(ZetaError::Domain(format!(
                "general identity needs 2 ≤ n ≤ {MAX_ORDER}, got {n}"
            )))
        }
    }

    /// The left side is the (order − 1)-th derivative of ζ′/ζ at 1/2.
    pub fn order(&self) -> u32 {
        match *self {
            IdentityId::Numbered(n) => n as u32,
            IdentityId::General(n) => n,
        }
    }

    /// Even orders carry a sum over zeros.
    pub fn needs_zeros(&self) -> bool {
        self.order() % 2 == 0
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::Numbered(n) => write!(f, "{n}"),
            IdentityId::General(n) => write!(f, "general:{n}"),
        }
    }
}

impl FromStr for IdentityId {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || ZetaError::Domain(format!("unknown identity {s:?}"));
        if let Some(n) = s.strip_prefix("general:") {
            return IdentityId::general(n.parse().map_err(|_| bad())?);
        }
        IdentityId::new(s.parse().map_err(|_| bad())?)
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// g⁽ᵐ⁻¹⁾ for g = ζ′/ζ, solving ζ⁽ʲ⁺¹⁾ = Σ_{i≤j} C(j,i)·g⁽ⁱ⁾·ζ⁽ʲ⁻ⁱ⁾ forward.
pub fn log_deriv_bell(bundle: &DerivativeBundle, m: usize) -> Result<Complex> {
    if m == 0 {
        return Err(ZetaError::Precondition("log_deriv_bell needs m ≥ 1".into()));
    }
    if bundle.order < m || bundle.values.len() <= m {
        return Err(ZetaError::Precondition(format!(
            "bundle of order {} cannot give derivative order {m}",
            bundle.order
        )));
    }
    let z = &bundle.values;
    if z[0].is_zero() {
        return Err(ZetaError::DivisionByZero("zeta vanishes at the bundle point"));
    }
    let inv = z[0].recip();
    let mut g: Vec<Complex> = Vec::with_capacity(m);
    for j in 0..m {
        let mut acc = z[j + 1].clone();
        for (i, gi) in g.iter().enumerate() {
            let c = Integer::binomial_u(j as u32, i as u32).into();
            let c: Integer = c;
            let term = (gi * &z[j - i]).scale(&Float::with_val(acc.prec(), &c));
            acc -= &term;
        }
        g.push(acc * &inv);
    }
    Ok(g.pop().expect("m ≥ 1"))
}

fn check_sums(id: IdentityId, sums: Option<&SecondaryZetaValue>) -> Result<Option<&SecondaryZetaValue>> {
    let n = id.order();
    match (id.needs_zeros(), sums) {
        (false, Some(_)) => Err(ZetaError::Precondition(format!(
            "identity {id} has no sum over zeros; none may be supplied"
        ))),
        (false, None) => Ok(None),
        (true, None) => Err(ZetaError::Precondition(format!(
            "identity {id} needs the sum over zeros of order {n}"
        ))),
        (true, Some(v)) if v.k != n => Err(ZetaError::Precondition(format!(
            "identity {id} needs the order-{n} sum, got order {}",
            v.k
        ))),
        (true, Some(v)) => Ok(Some(v)),
    }
}

fn zeta_int(engine: &mut ZetaEngine, n: u32) -> Result<Float> {
    Ok(engine.zeta(&Complex::with_val(engine.bits(), n, 0))?.re)
}

/// Right side of an identity. Even orders take the sum Σ αₙ⁻ⁿ in `sums`;
/// odd orders reject it.
///
/// The numbered forms are evaluated from their displayed constants, the
/// general form from ζ(n), L(n, χ₄) and the 2^{n−1}(n−1)! normalization.
pub fn rhs_closed(id: IdentityId, sums: Option<&SecondaryZetaValue>, p: &WorkingPrecision) -> Result<Real> {
    if let IdentityId::General(n) = id {
        if n < 2 {
            return Err(ZetaError::Domain(format!("general identity needs n ≥ 2, got {n}")));
        }
    }
    let sums = check_sums(id, sums)?;
    let bits = p.bits();
    let wp = bits + 20;
    let q = WorkingPrecision::new(p.requested_digits).with_guard_digits(p.guard_digits + 6);
    let pi = pi_bits(wp);
    let z_sum = sums.map(|v| Float::with_val(wp, &v.value));
    let mut engine = ZetaEngine::new(wp);
    let value = match id {
        IdentityId::Numbered(1) => {
            let gamma = euler_gamma_bits(wp);
            let log_8pi = Float::with_val(wp, &pi * 8u32).ln();
            Float::with_val(wp, &pi / 4u32) + gamma / 2u32 + log_8pi / 2u32
        }
        IdentityId::Numbered(2) => {
            let pi2 = Float::with_val(wp, pi.square_ref());
            let g = catalan_bits(wp);
            Float::with_val(wp, 8) - pi2 / 4u32 - g * 2u32 + z_sum.expect("checked") * 2u32
        }
        IdentityId::Numbered(3) => {
            let pi3 = Float::with_val(wp, (&pi).pow(3u32));
            pi3 / 4u32 + zeta_int(&mut engine, 3)? * 7u32
        }
        IdentityId::Numbered(4) => {
            let pi4 = Float::with_val(wp, (&pi).pow(4u32));
            let l4 = engine.dirichlet_beta(&Complex::with_val(wp, 4, 0))?.re;
            Float::with_val(wp, 192) - pi4 / 2u32 - l4 * 48u32 - z_sum.expect("checked") * 12u32
        }
        IdentityId::Numbered(5) => {
            let pi5 = Float::with_val(wp, (&pi).pow(5u32));
            (zeta_int(&mut engine, 5)? * 31u32 + pi5 * 5u32 / 48u32) * 12u32
        }
        IdentityId::Numbered(n) => {
            return Err(ZetaError::Domain(format!("identities are numbered 1..5, got {n}")))
        }
        IdentityId::General(n) => {
            // 2^{n−1}(n−1)!
            let norm = Float::with_val(wp, Float::factorial(n - 1)) << (n - 1);
            let one_minus = Float::with_val(wp, 1) - Float::with_val(wp, Float::with_val(wp, 2).pow(-(n as i32)));
            if n % 2 == 1 {
                let zeta_n = zeta_int(&mut engine, n)?;
                let l_n = beta_odd_closed(n, &q)?;
                norm * (one_minus * zeta_n + l_n)
            } else {
                let zeta_n = Float::with_val(wp, zeta_even_closed(n, &q)?);
                let l_n = engine.dirichlet_beta(&Complex::with_val(wp, n, 0))?.re;
                let sign = if (n / 2) % 2 == 0 { 1i32 } else { -1 };
                let spectral = z_sum.expect("checked") * 4u32 * sign >> n;
                norm * (Float::with_val(wp, 4) - spectral - l_n - one_minus * zeta_n)
            }
        }
    };
    Ok(Float::with_val(bits, value))
}
