//! Ξ(0)·∏(1 + 1/(4αₙ²)) against 1/2, and ζ rebuilt from its zeros.

use zetamill::identities::{xi_product_check, zeta_product_eval_with_error};
use zetamill::zeros::compute_zeros;
use zetamill::zeta::zeta;
use zetamill::{Complex, WorkingPrecision};

fn main() -> zetamill::Result<()> {
    let p = WorkingPrecision::new(20);
    let cache = compute_zeros(401, &p)?;
    for m in [100, 200, 400] {
        let c = xi_product_check(m, &cache, &p)?;
        println!(
            "M={m:<4} uncorrected {:.3e}  corrected {:.3e}  model {:.3e}",
            c.truncated_residual, c.residual, c.modeled_error
        );
    }
    let s = Complex::with_val(p.bits(), 0.3, 2);
    let (v, err) = zeta_product_eval_with_error(&s, 400, &cache, &p)?;
    println!("product  zeta(0.3 + 2i) = {v:.12} (+/- {err:.1e})");
    println!("direct   zeta(0.3 + 2i) = {:.12}", zeta(&s, &p)?);
    Ok(())
}
