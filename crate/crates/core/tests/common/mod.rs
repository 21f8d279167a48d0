#![allow(dead_code, clippy::needless_range_loop)]

use codecert::canon::Equivalence;
use codecert::rational::{frac, q, Q};
use codecert::{Code, Word};
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coset representatives `u_1..u_16` of the printed classification table.
pub const TABLE1_REPS: [&str; 16] = [
    "00000000000000000000",
    "00000101010101011010",
    "00001001011001101100",
    "00001100001100110110",
    "10100000010101101001",
    "10100101000000110011",
    "10101001001100000101",
    "10101100011001011111",
    "11000000011000110101",
    "11000101001101101111",
    "11001001000001011001",
    "11001100010100000011",
    "01100000001101011100",
    "01100101011000000110",
    "01101001010100110000",
    "01101100000001101010",
];

/// Printed weight-16 words.
pub const TABLE1_D: [&str; 5] = [
    "00001111111111111111",
    "11110000111111111111",
    "11111111000011111111",
    "11111111111100001111",
    "11111111111111110000",
];

/// For each of the 15 printed codes, the (1-based) representatives whose
/// cosets are complemented.
pub const TABLE1_FLIPS: [&[usize]; 15] = [
    &[],
    &[1],
    &[1, 2],
    &[1, 2, 3],
    &[1, 2, 3, 4],
    &[1, 2, 5],
    &[1, 2, 3, 5],
    &[1, 2, 5, 6],
    &[1, 2, 5, 7],
    &[1, 2, 3, 5, 9],
    &[2, 3, 4, 5, 9],
    &[2, 3, 5, 6, 9],
    &[2, 3, 5, 7, 9, 10],
    &[1, 3, 6, 7, 9, 10],
    &[2, 4, 6, 7, 9, 10],
];

pub fn word(s: &str) -> Word {
    s.parse().expect("fixture word")
}

/// All 16 elements of the span of the printed weight-16 words.
pub fn table1_span() -> Vec<Word> {
    let d: Vec<Word> = TABLE1_D.iter().map(|s| word(s)).collect();
    (0..16u32)
        .map(|m| {
            (0..4)
                .filter(|k| m >> k & 1 == 1)
                .fold(Word::zero(20).unwrap(), |acc, k| acc + d[k])
        })
        .collect()
}

/// The printed code `C_j` (1-based).
pub fn table1_code(j: usize) -> Code {
    let span = table1_span();
    let ones = Word::ones(20).unwrap();
    let flips = TABLE1_FLIPS[j - 1];
    let words = TABLE1_REPS.iter().enumerate().flat_map(|(i, u)| {
        let u = word(u);
        let shift = if flips.contains(&(i + 1)) {
            u + ones
        } else {
            u
        };
        span.iter().map(move |x| shift + *x).collect::<Vec<_>>()
    });
    Code::new(20, words).unwrap()
}

/// Distance by comparing coordinates one at a time.
pub fn naive_distance(u: &Word, v: &Word) -> usize {
    (0..u.len()).filter(|&i| u.bit(i) != v.bit(i)).count()
}

pub fn random_word(rng: &mut impl Rng, n: usize) -> Word {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Word::from_packed(n, rng.gen::<u64>() & mask).unwrap()
}

pub fn random_code(rng: &mut impl Rng, n: usize, size: usize) -> Code {
    let mut words = std::collections::BTreeSet::new();
    while words.len() < size {
        words.insert(random_word(rng, n));
    }
    Code::new(n, words).unwrap()
}

pub fn random_equivalence(rng: &mut impl Rng, n: usize) -> Equivalence {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Equivalence {
        perm,
        flip: random_word(rng, n),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted image of the code over every coordinate permutation and
/// translation, computed without the graph machinery.
pub fn brute_force_canonical(c: &Code) -> Vec<u64> {
    let n = c.len();
    let mut best: Option<Vec<u64>> = None;
    for p in permutations(n) {
        let moved: Vec<u64> = c
            .iter()
            .map(|w| {
                (0..n)
                    .filter(|&i| w.bit(i))
                    .fold(0u64, |acc, i| acc | 1 << (n - 1 - p[i]))
            })
            .collect();
        for t in 0..1u64 << n {
            let mut img: Vec<u64> = moved.iter().map(|x| x ^ t).collect();
            img.sort_unstable();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let f = a[r][col].clone() / a[col][col].clone();
            for k in col..n {
                let v = a[col][k].clone() * f.clone();
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Symmetric matrix is PSD iff every principal minor is nonnegative.
pub fn psd_by_minors(m: &[Vec<Q>]) -> bool {
    let n = m.len();
    (1u32..1 << n).all(|s| {
        let idx: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        let sub: Vec<Vec<Q>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
            .collect();
        !determinant(&sub).is_negative()
    })
}

/// Random symmetric rational matrix: a Gram matrix, a Gram matrix pushed
/// slightly off the PSD cone, or a diagonally weighted random matrix.
pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> Vec<Vec<Q>> {
    let entry = |rng: &mut ChaCha8Rng| frac(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    let mut rng = ChaCha8Rng::seed_from_u64(rng.gen());
    match rng.gen_range(0..3) {
        // Gram matrix of possibly dependent vectors: PSD, often singular
        0 => {
            let k = rng.gen_range(1..=n);
            let v: Vec<Vec<Q>> = (0..k)
                .map(|_| (0..n).map(|_| entry(&mut rng)).collect())
                .collect();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| v.iter().fold(q(0), |s, r| s + &r[i] * &r[j]))
                        .collect()
                })
                .collect()
        }
        // Gram matrix nudged on one diagonal entry: sometimes just barely not PSD
        1 => {
            let v: Vec<Vec<Q>> = (0..n - 1)
                .map(|_| (0..n).map(|_| entry(&mut rng)).collect())
                .collect();
            let mut m: Vec<Vec<Q>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| v.iter().fold(q(0), |s, r| s + &r[i] * &r[j]))
                        .collect()
                })
                .collect();
            let d = rng.gen_range(0..n);
            m[d][d] -= frac(1, rng.gen_range(50..200));
            m
        }
        _ => {
            let mut m = vec![vec![q(0); n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = entry(&mut rng);
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
                m[i][i] = m[i][i].abs() * q(3);
            }
            m
        }
    }
}
