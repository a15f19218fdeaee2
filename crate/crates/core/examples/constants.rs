//! γ, Catalan's constant, π and log 2 at 60 digits.

use zetamill::special::{ConstantName, NamedConstant};
use zetamill::WorkingPrecision;

fn main() {
    let p = WorkingPrecision::new(60);
    for name in ConstantName::ALL {
        let c = NamedConstant::compute(name, &p);
        println!("{:<12} {}", name.as_str(), c.value.to_string_radix(10, Some(60)));
    }
}
