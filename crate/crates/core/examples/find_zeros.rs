//! Zeros of ζ on the critical line up to height 100, written to a cache file.
//!
//! Usage: find_zeros [path]

use zetamill::zeros::{cache_load, cache_store, compute_zeros_upto, refine_zero_bisection, Bracket};
use zetamill::WorkingPrecision;

fn main() -> zetamill::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "zeros-100.zc".into());
    let p = WorkingPrecision::new(30);
    let cache = compute_zeros_upto(100.0, &p)?;
    for r in &cache.records {
        println!("{:>3}  {}", r.index, r.ordinate.to_string_radix(10, Some(30)));
    }
    cache_store(&cache, path.as_ref())?;
    let back = cache_load(path.as_ref())?;
    println!("{} zeros stored in {path}", back.len());

    let bisected = refine_zero_bisection(&Bracket { index: 1, lo: 14.0, hi: 14.2 }, &p)?;
    println!("first zero by bisection {}", bisected.ordinate.to_string_radix(10, Some(30)));
    Ok(())
}
