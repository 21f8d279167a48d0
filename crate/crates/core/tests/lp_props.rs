use codecert::lpbound::{
    delsarte_bound, eberlein, krawtchouk, orbit_pair_value, solve_lp, Constraint, LinearForm,
    LpProblem, Scheme, Sense,
};
use codecert::rational::{binomial, frac, q, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficient of `x^k` in `(1 - x)^i (1 + x)^(n - i)`.
fn krawtchouk_by_expansion(n: usize, k: usize, i: usize) -> BigInt {
    let mut poly = vec![BigInt::one()];
    for f in 0..n {
        let s: i64 = if f < i { -1 } else { 1 };
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] += c * s;
        }
        poly = next;
    }
    poly[k].clone()
}

#[test]
fn krawtchouk_matches_generating_function() {
    for n in 1..=12 {
        for k in 0..=n {
            for i in 0..=n {
                assert_eq!(
                    krawtchouk(n, k, i).unwrap(),
                    krawtchouk_by_expansion(n, k, i)
                );
            }
        }
    }
}

#[test]
fn krawtchouk_orthogonality() {
    for n in 1..=12usize {
        for k in 0..=n {
            for l in 0..=n {
                let s: BigInt = (0..=n)
                    .map(|i| {
                        binomial(n as i64, i as i64)
                            * krawtchouk(n, k, i).unwrap()
                            * krawtchouk(n, l, i).unwrap()
                    })
                    .sum();
                let expected = if k == l {
                    (BigInt::one() << n) * binomial(n as i64, k as i64)
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expected, "n={n} k={k} l={l}");
            }
        }
    }
}

#[test]
fn eberlein_orthogonality() {
    for n in 2..=12usize {
        for w in 1..=n / 2 {
            let total = binomial(n as i64, w as i64);
            let mult = |j: usize| binomial(n as i64, j as i64) - binomial(n as i64, j as i64 - 1);
            for k in 0..=w {
                for l in 0..=w {
                    let s: BigInt = (0..=w)
                        .map(|j| {
                            mult(j) * eberlein(n, w, k, j).unwrap() * eberlein(n, w, l, j).unwrap()
                        })
                        .sum();
                    let valency = binomial(w as i64, k as i64) * binomial((n - w) as i64, k as i64);
                    let expected = if k == l {
                        &total * valency
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, expected, "n={n} w={w} k={k} l={l}");
                }
            }
        }
    }
}

#[test]
fn adding_constraints_never_raises_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let scheme = Scheme::hamming(14).unwrap();
    let base = delsarte_bound(scheme, 4, &[]).unwrap();
    for _ in 0..25 {
        let mut extra = Vec::new();
        let mut last = base.optimum.clone();
        for _ in 0..4 {
            let i = rng.gen_range(4..=14);
            extra.push(if rng.gen_bool(0.5) {
                Constraint::force_zero(i)
            } else {
                Constraint::at_most(i, frac(rng.gen_range(0..40), rng.gen_range(1..4)))
            });
            let r = delsarte_bound(scheme, 4, &extra).unwrap();
            assert!(r.is_optimal());
            let problem = LpProblem::delsarte(scheme, 4, extra.clone());
            r.verify(&problem).unwrap();
            assert_eq!(r.dual_objective(&problem).unwrap(), r.optimum);
            assert!(r.optimum <= last, "{} > {}", r.optimum, last);
            last = r.optimum;
        }
    }
}

#[test]
fn quoted_inequalities_are_scaled_krawtchouk_rows() {
    // With only a_0, a_8, a_12, a_16 nonzero the k-th Delsarte row reads
    // K_k(0) + K_k(8) a_8 + K_k(12) a_12 + K_k(16) a_16 >= 0.
    let targets: [[i64; 4]; 2] = [[5, 1, -1, -3], [95, -1, -1, 31]];
    for t in targets {
        let found = (1..=20).any(|k| {
            let row: Vec<BigInt> = [0, 8, 12, 16]
                .iter()
                .map(|&i| krawtchouk(20, k, i).unwrap())
                .collect();
            let scale = Q::new(row[1].clone(), BigInt::from(t[1]));
            scale > q(0)
                && row
                    .iter()
                    .zip(t)
                    .all(|(r, x)| Q::from_integer(r.clone()) == &scale * q(x))
        });
        assert!(found, "{t:?}");
    }
}

#[test]
fn minimization_and_custom_objectives() {
    let scheme = Scheme::hamming(20).unwrap();
    let mut extra: Vec<Constraint> = (1..=20)
        .filter(|i| i % 4 != 0)
        .map(Constraint::force_zero)
        .collect();
    extra.push(Constraint::total_size(256));
    for (i, v) in [(8, 130), (12, 120), (16, 5), (20, 0)] {
        for sense in [Sense::Maximize, Sense::Minimize] {
            let p = LpProblem::delsarte(scheme, 8, extra.clone())
                .with_objective(LinearForm::var(i), sense);
            let r = solve_lp(&p).unwrap();
            assert_eq!(r.optimum, q(v), "a_{i} {sense:?}");
            assert_eq!(r.dual_objective(&p).unwrap(), r.optimum);
        }
    }
}

#[test]
fn orbit_values() {
    let h = orbit_pair_value(Scheme::hamming(20).unwrap(), 16, 256, &q(5)).unwrap();
    let expected = Q::new(
        BigInt::from(256 * 5),
        (BigInt::one() << 20) * binomial(20, 16),
    );
    assert_eq!(h, expected);
    let j = orbit_pair_value(Scheme::johnson(22, 11).unwrap(), 0, 672, &q(1)).unwrap();
    assert_eq!(j, Q::new(BigInt::from(672), binomial(22, 11)));
}

#[test]
fn infeasible_side_constraints() {
    let scheme = Scheme::johnson(12, 6).unwrap();
    let extra = vec!["a_4>=3".parse().unwrap(), "total<=2".parse().unwrap()];
    let r = delsarte_bound(scheme, 4, &extra).unwrap();
    assert!(!r.is_optimal());
}
