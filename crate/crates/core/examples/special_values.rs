//! Bernoulli and Euler numbers, polygamma at 1/4 and log Γ off the real axis.

use rug::Rational;
use zetamill::special::{bernoulli, euler_number, log_gamma, logarithmic_integral, polygamma};
use zetamill::{Complex, WorkingPrecision};

fn main() -> zetamill::Result<()> {
    for n in [2, 4, 12, 30] {
        println!("B_{n:<3} = {}", bernoulli(n));
    }
    for n in [2, 4, 10, 20] {
        println!("E_{n:<3} = {}", euler_number(n));
    }

    let p = WorkingPrecision::new(40);
    let quarter = Rational::from((1, 4));
    for m in 0..3 {
        let v = polygamma(m, &quarter, &p)?;
        println!("psi^({m})(1/4) = {}", v.to_string_radix(10, Some(40)));
    }

    let z = Complex::with_val(p.bits(), 0.25, 10);
    println!("log Gamma(1/4 + 10i) = {:.30}", log_gamma(&z, &p)?);

    let x = rug::Float::with_val(p.bits(), 1e6);
    println!("li(10^6) = {}", logarithmic_integral(&x, &p)?.to_string_radix(10, Some(30)));
    Ok(())
}
