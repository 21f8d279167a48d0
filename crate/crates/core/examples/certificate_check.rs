//! Turns the exact LP for length-20 codes with distances divisible by 4
//! into a certificate file pair, reads it back, and checks it. Then rounds
//! the dual to six decimals, as an SDP solver would, and checks again.
//!
//!     cargo run --release --example certificate_check

use std::collections::BTreeMap;

use codecert::certcheck::{
    compute_epsilons, forbidden_orbits, format_dual, format_problem, lp_as_certificate,
    orbit_bounds, parse_certificate, slot_identity, Certificate, SymBlock,
};
use codecert::lpbound::{solve_lp, Constraint, LpProblem, Scheme};
use codecert::rational::{format_decimal, format_rational, frac, q, Q};
use num_bigint::BigInt;
use num_integer::Integer;

const QUERY: [&str; 4] = ["a_8", "a_12", "a_16", "a_20"];

fn round6(x: &Q) -> Q {
    let scale = BigInt::from(1_000_000);
    let scaled = x * Q::from_integer(scale.clone());
    Q::new(scaled.numer().div_floor(scaled.denom()), scale)
}

fn summarize(c: &Certificate, target: &Q) -> codecert::Result<()> {
    let report = orbit_bounds(c, target)?;
    println!(
        "    dual objective {}",
        format_decimal(&report.dual_objective, 9)
    );
    println!(
        "    sum of epsilons {}",
        format_decimal(&report.sum_abs_epsilon, 9)
    );
    let f = forbidden_orbits(c, target, &frac(2, 256))?;
    let shown = |v: &[String]| {
        v.iter()
            .filter(|l| QUERY.contains(&l.as_str()))
            .cloned()
            .collect::<Vec<_>>()
    };
    println!(
        "    forbidden {:?}, conservative {:?}",
        shown(&f.forbidden),
        shown(&f.conservative)
    );
    Ok(())
}

fn main() -> codecert::Result<()> {
    let extra: Vec<Constraint> = (1..=20)
        .filter(|i| i % 4 != 0)
        .map(Constraint::force_zero)
        .collect();
    let problem = LpProblem::delsarte(Scheme::hamming(20)?, 8, extra);
    let result = solve_lp(&problem)?;
    let (cert, _) = lp_as_certificate(&problem, &result, &[8, 12, 16, 20])?;

    let dir = std::env::temp_dir().join("codecert-example");
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("problem.txt"), format_problem(&cert.problem))?;
    std::fs::write(dir.join("dual.txt"), format_dual(&cert.dual))?;
    println!("wrote {}", dir.display());

    let text = |f: &str| std::fs::read_to_string(dir.join(f));
    let exact = parse_certificate(&text("problem.txt")?, &text("dual.txt")?)?;
    let eps = compute_epsilons(&exact);
    println!(
        "exact dual, all epsilons zero: {}",
        eps.values().all(|e| *e == q(0))
    );
    summarize(&exact, &q(256))?;
    let y: BTreeMap<String, Q> = result
        .primal
        .iter()
        .map(|(i, v)| (format!("a_{i}"), v.clone()))
        .collect();
    println!(
        "    slot identity holds for {} orbits",
        slot_identity(&exact, &y)?.len()
    );

    let mut rounded = exact.clone();
    for b in rounded.dual.blocks.values_mut() {
        let mut r = SymBlock::new(b.label.clone(), 1);
        r.set(0, 0, round6(&b.get(0, 0)))?;
        *b = r;
    }
    println!("rounded dual:");
    for (label, e) in compute_epsilons(&rounded)
        .iter()
        .filter(|(_, e)| **e != q(0))
        .take(4)
    {
        println!("    epsilon[{label}] = {}", format_rational(e));
    }
    summarize(&rounded, &q(256))?;
    Ok(())
}
