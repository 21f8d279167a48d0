//! Builds the extended Golay code, its punctured form and the four
//! shortenings, and prints their parameters and weight enumerators.
//!
//!     cargo run --example golay_family

use codecert::golay::GolayFamily;
use codecert::LinearCode;

fn describe(name: &str, g: &LinearCode) -> codecert::Result<()> {
    let c = g.to_code()?;
    let weights: Vec<String> = c
        .weight_enumerator()
        .nonzero()
        .iter()
        .map(|(w, k)| format!("A_{w}={k}"))
        .collect();
    println!(
        "{name:<14} [{}, {}] size {:>5}  d={}  self-dual={}  {}",
        g.len(),
        g.dimension(),
        c.size(),
        c.min_distance().unwrap_or(0),
        g.is_self_dual(),
        weights.join(" ")
    );
    Ok(())
}

fn main() -> codecert::Result<()> {
    let family = GolayFamily::build()?;
    describe("extended", &family.extended24)?;
    describe("punctured", &family.punctured23)?;
    for i in 1..=4 {
        describe(
            &format!("shortened x{i}"),
            family.shortened(i).expect("built above"),
        )?;
    }
    Ok(())
}
