//! Σ αₙ⁻ᵏ over the first 300 zeros plus the density tail, at growing depth.

use zetamill::spectral::{secondary_zeta, secondary_zeta_at_depth};
use zetamill::zeros::compute_zeros;
use zetamill::WorkingPrecision;

fn main() -> zetamill::Result<()> {
    let p = WorkingPrecision::new(20);
    let cache = compute_zeros(300, &p)?;
    for k in [2, 4] {
        for m in [50, 100, 200, 300] {
            let v = secondary_zeta_at_depth(k, m, &cache, &p)?;
            println!(
                "k={k} M={m:<4} value {}  bound {}",
                v.value.to_string_radix(10, Some(16)),
                v.error_bound.to_string_radix(10, Some(3))
            );
        }
    }
    match secondary_zeta(2, 1e-9, &cache, &p) {
        Ok(v) => println!("target met: {}", v.value.to_string_radix(10, Some(16))),
        Err(e) => println!("target 1e-9: {e}"),
    }
    Ok(())
}
