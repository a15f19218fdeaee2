//! ζ⁽ᵏ⁾(1/2) for k ≤ 7 and the derivatives of ζ′/ζ built from them.

use zetamill::identities::log_deriv_bell;
use zetamill::identities::report::half_line_bundle;
use zetamill::WorkingPrecision;

fn main() -> zetamill::Result<()> {
    let p = WorkingPrecision::new(50);
    let bundle = half_line_bundle(7, &p)?;
    println!("{} quadrature nodes", bundle.nodes);
    for (k, v) in bundle.values.iter().enumerate() {
        println!("zeta^({k})(1/2) = {}", v.re.to_string_radix(10, Some(45)));
    }
    for m in 1..=7 {
        let g = log_deriv_bell(&bundle, m)?;
        println!("(zeta'/zeta)^({})(1/2) = {}", m - 1, g.re.to_string_radix(10, Some(45)));
    }
    Ok(())
}
