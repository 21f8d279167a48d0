//! The four optimal constant-weight codes cut out of the Golay code.
//!
//!     cargo run --example constant_weight

use codecert::golay::build_optimal_cw;
use codecert::rational::format_rational;

fn main() -> codecert::Result<()> {
    for (n, d, w) in [(24, 8, 12), (23, 8, 11), (22, 8, 11), (22, 8, 10)] {
        let c = build_optimal_cw(n, d, w)?;
        let dist = c.distance_distribution()?;
        let a: Vec<String> = dist
            .support()
            .iter()
            .map(|&i| format!("a_{i}={}", format_rational(&dist.a(i))))
            .collect();
        println!(
            "({n},{d},{w}): {} words, min distance {}, {}",
            c.size(),
            c.min_distance().unwrap_or(0),
            a.join(" ")
        );
    }
    Ok(())
}
