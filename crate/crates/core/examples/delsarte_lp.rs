//! Exact Delsarte LP bounds in the Johnson and Hamming schemes, plus the
//! distance distribution forced on size-256 codes of length 20 whose
//! distances are all multiples of 4.
//!
//!     cargo run --release --example delsarte_lp

use codecert::lpbound::{
    delsarte_bound, solve_lp, Constraint, LinearForm, LpProblem, Scheme, Sense,
};
use codecert::rational::{format_decimal, format_rational};

fn show(name: &str, r: &codecert::lpbound::LpResult) {
    let support: Vec<String> = r
        .primal
        .iter()
        .filter(|(_, v)| *v != num_traits::Zero::zero())
        .map(|(i, v)| format!("a_{i}={}", format_rational(v)))
        .collect();
    println!(
        "{name}: {} ~ {}",
        format_rational(&r.optimum),
        format_decimal(&r.optimum, 6)
    );
    println!("    {}", support.join(" "));
}

fn main() -> codecert::Result<()> {
    show(
        "J(24,12) d=8",
        &delsarte_bound(Scheme::johnson(24, 12)?, 8, &[])?,
    );
    show(
        "J(23,11) d=8",
        &delsarte_bound(Scheme::johnson(23, 11)?, 8, &[])?,
    );
    show("H(20) d=8", &delsarte_bound(Scheme::hamming(20)?, 8, &[])?);

    let div4: Vec<Constraint> = (1..=20)
        .filter(|i| i % 4 != 0)
        .map(Constraint::force_zero)
        .collect();
    let h20 = Scheme::hamming(20)?;
    show(
        "H(20) d=8, distances = 0 mod 4",
        &delsarte_bound(h20, 8, &div4)?,
    );

    let mut sized = div4.clone();
    sized.push(Constraint::total_size(256));
    for i in [8, 12, 16] {
        let p = LpProblem::delsarte(h20, 8, sized.clone())
            .with_objective(LinearForm::var(i), Sense::Maximize);
        println!(
            "size 256: max a_{i} = {}",
            format_rational(&solve_lp(&p)?.optimum)
        );
    }
    Ok(())
}
