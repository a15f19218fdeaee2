//! Special values consumed by the identities: γ, G, exact Bernoulli and
//! Euler numbers, log-gamma, polygamma and the logarithmic integral.

pub mod constants;
pub mod gamma;
pub mod li;
pub mod numbers;

pub use constants::{catalan, euler_gamma, log2, pi, ConstantName, NamedConstant};
pub use gamma::{log_gamma, polygamma};
pub use li::logarithmic_integral;
pub use numbers::{bernoulli, euler_number, ExactRational};
