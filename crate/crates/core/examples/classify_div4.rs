//! Classifies all 2^16 coset-flip codes of length 20 up to equivalence.
//! Takes well under a minute in release mode.
//!
//!     cargo run --release --example classify_div4

use std::time::Instant;

use codecert::classify20::{build_base, classify_all, mask_orbits};

fn main() -> codecert::Result<()> {
    let start = Instant::now();
    let base = build_base()?;
    println!("weight-16 words:");
    for w in base.d.iter() {
        println!("    {w}");
    }
    println!("coset representatives:");
    for r in &base.reps {
        println!("    {r}");
    }
    println!("{} mask orbits", mask_orbits(&base)?.len());

    let cls = classify_all(&base)?;
    println!("{} of 65536 flip codes verified", cls.verified);
    println!("classes: {}", cls.classes.len());
    for (k, c) in cls.classes.iter().enumerate() {
        println!(
            "    {:>2}  mask {:04x}  {:>5} codes",
            k + 1,
            c.representative.0,
            c.size
        );
    }
    println!("total {} in {:.1?}", cls.total(), start.elapsed());
    Ok(())
}
