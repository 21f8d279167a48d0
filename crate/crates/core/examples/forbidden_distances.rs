//! Distances that no code of a given size can contain, each certified by
//! re-solving the LP with `a_i >= 2/M`.
//!
//!     cargo run --release --example forbidden_distances

use codecert::lpbound::{forbidden_distances, Constraint, Scheme};
use codecert::rational::format_rational;

fn report(scheme: Scheme, d: usize, target: u64, extra: &[Constraint]) -> codecert::Result<()> {
    println!("{scheme}, d={d}, size {target}:");
    for f in forbidden_distances(scheme, d, target, extra)? {
        let why = if f.proof.is_optimal() {
            format!("optimum drops to {}", format_rational(&f.proof.optimum))
        } else {
            "infeasible".to_string()
        };
        println!("    a_{} = 0  ({why})", f.distance);
    }
    Ok(())
}

fn main() -> codecert::Result<()> {
    report(Scheme::johnson(24, 12)?, 8, 2576, &[])?;
    let div4: Vec<Constraint> = (1..=20)
        .filter(|i| i % 4 != 0)
        .map(Constraint::force_zero)
        .collect();
    report(Scheme::hamming(20)?, 8, 256, &div4)?;
    Ok(())
}
