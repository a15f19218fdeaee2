//! R(x) by the power series and by Σ μ(n)/n·li(x^{1/n}).

use rug::Float;
use zetamill::zeta::{gram_series, gram_series_mobius};
use zetamill::WorkingPrecision;

fn main() -> zetamill::Result<()> {
    let p = WorkingPrecision::new(30);
    for x in [10u64, 100, 1000, 1_000_000] {
        let xf = Float::with_val(p.bits(), x);
        let a = gram_series(&xf, &p)?;
        let b = gram_series_mobius(&xf, &p)?;
        println!(
            "R({x:<8}) = {}  {}",
            a.to_string_radix(10, Some(25)),
            b.to_string_radix(10, Some(25))
        );
    }
    Ok(())
}
