//! Checks every identity: odd orders to 40 digits, even orders to what 200
//! zeros allow.

use zetamill::identities::verify_all;
use zetamill::zeros::compute_zeros;
use zetamill::WorkingPrecision;

fn main() -> zetamill::Result<()> {
    let cache = compute_zeros(201, &WorkingPrecision::new(20))?;
    let p = WorkingPrecision::new(60);
    for r in verify_all(40, 4, 200, Some(&cache), &p)? {
        println!("{r}\n");
    }
    Ok(())
}
