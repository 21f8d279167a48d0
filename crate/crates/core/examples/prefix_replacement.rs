//! The non-linear (20,8) code of size 256 built by prefix replacement, its
//! distance distribution, and a check that it is not equivalent to the
//! four-times shortened Golay code.
//!
//!     cargo run --release --example prefix_replacement

use codecert::canon::{are_equivalent, code_label};
use codecert::golay::{build_prefix_replacement_code, build_shortened};
use codecert::rational::format_rational;

fn main() -> codecert::Result<()> {
    let c = build_prefix_replacement_code()?;
    let dist = c.distance_distribution()?;
    println!(
        "size {}, min distance {}",
        c.size(),
        c.min_distance().unwrap_or(0)
    );
    for i in dist.support() {
        println!("    a_{i:<2} = {}", format_rational(&dist.a(i)));
    }
    let b = build_shortened(4)?.to_code()?;
    println!("equivalent to shortened Golay: {}", are_equivalent(&c, &b)?);
    println!(
        "labels: {} vs {}",
        &code_label(&c)?.digest()[..16],
        &code_label(&b)?.digest()[..16]
    );
    Ok(())
}
