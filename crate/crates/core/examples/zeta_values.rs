//! ζ and L(s, χ₄) at a few points, reusing one engine for a scan.

use zetamill::zeta::{beta_odd_closed, dirichlet_beta, zeta, zeta_even_closed, ZetaEngine};
use zetamill::{Complex, WorkingPrecision};

fn main() -> zetamill::Result<()> {
    let p = WorkingPrecision::new(40);
    let b = p.bits();

    for (re, im) in [(2.0, 0.0), (0.5, 0.0), (-1.0, 0.0), (0.5, 14.134725), (3.0, 100.0)] {
        let v = zeta(&Complex::with_val(b, re, im), &p)?;
        println!("zeta({re} + {im}i) = {v:.30}");
    }
    println!("zeta(4) closed  = {}", zeta_even_closed(4, &p)?.to_string_radix(10, Some(40)));
    println!("L(2)  (Catalan) = {:.40}", dirichlet_beta(&Complex::with_val(b, 2, 0), &p)?);
    println!("L(3)  closed    = {}", beta_odd_closed(3, &p)?.to_string_radix(10, Some(40)));

    // repeated evaluations at one precision share their tables
    let mut engine = ZetaEngine::new(b);
    for t in [1000.0, 1000.5, 1001.0] {
        let v = engine.zeta(&Complex::with_val(b, 0.5, t))?;
        println!("|zeta(1/2 + {t}i)| = {}", v.abs().to_string_radix(10, Some(20)));
    }
    Ok(())
}
