//! Floats in JSON as decimal strings with enough digits to round-trip at
//! their own precision.

use rug::Float;
use serde::Serializer;

pub fn to_decimal(x: &Float) -> String {
    x.to_string_radix(10, None)
}

/// Inverse of [`to_decimal`] for a value that had `bits` of precision.
pub fn from_decimal(s: &str, bits: u32) -> Option<Float> {
    Float::parse(s).ok().map(|v| Float::with_val(bits, v))
}

pub fn serialize<S: Serializer>(x: &Float, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_decimal(x))
}
