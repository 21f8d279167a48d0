//! Maximum-size `(20, 8)` codes with all distances divisible by 4.
//!
//! `B` is the quadruply shortened extended Golay code with coordinates
//! arranged so that its five weight-16 words have their zeros in the
//! consecutive blocks `0..4, 4..8, ..., 16..20`. Those words span a
//! 4-dimensional subcode `⟨D⟩`, and `B` splits into 16 cosets of it. A flip
//! mask replaces selected cosets `u + ⟨D⟩` by their complements.

use std::collections::HashMap;
use std::path::Path;

use rayon::prelude::*;

use crate::canon::{code_automorphisms, partition_classes, CanonicalLabel, Equivalence};
use crate::error::{Error, Result};
use crate::f2core::{io, span, Code, LinearCode, Word};
use crate::golay::build_shortened;

pub const N: usize = 20;
pub const COSETS: usize = 16;
pub const MASKS: usize = 1 << COSETS;

/// Per-codeword distance distribution shared by every code of the family.
pub const DISTGOL: [(usize, u64); 4] = [(0, 1), (8, 130), (12, 120), (16, 5)];

#[derive(Clone, Debug)]
pub struct FlipBase {
    pub b: LinearCode,
    /// The five weight-16 words; sorted order is block order.
    pub d: Code,
    pub d_span: Code,
    /// Lexicographically smallest member of each coset, ascending.
    pub reps: Vec<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipPattern(pub u16);

impl FlipPattern {
    pub fn flips(self, coset: usize) -> bool {
        self.0 >> coset & 1 == 1
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

pub fn build_base() -> Result<FlipBase> {
    let raw = build_shortened(4)?.to_code()?;
    let heavy: Vec<Word> = raw.iter().filter(|w| w.weight() == 16).copied().collect();
    if heavy.len() != 5 {
        return Err(fail(format!(
            "expected 5 weight-16 words, found {}",
            heavy.len()
        )));
    }
    let mut blocks: Vec<Vec<usize>> = heavy.iter().map(|w| w.complement().support()).collect();
    blocks.sort_by_key(|b| b[0]);
    let perm = blocks.concat();
    let mut covered = perm.clone();
    covered.sort_unstable();
    if blocks.iter().any(|b| b.len() != 4) || covered != (0..N).collect::<Vec<_>>() {
        return Err(fail(
            "zero sets of the weight-16 words are not disjoint 4-blocks",
        ));
    }
    let b_code = raw.permute_coordinates(&perm)?;
    let d = Code::new(N, b_code.iter().filter(|w| w.weight() == 16).copied())?;
    for (k, w) in d.iter().enumerate() {
        let zeros: Vec<usize> = (4 * k..4 * k + 4).collect();
        if w.complement().support() != zeros {
            return Err(fail(format!("weight-16 word {w} is out of block order")));
        }
    }
    let d_span = span(&d).to_code()?;
    if d_span.size() != 16 {
        return Err(fail("weight-16 words do not span a 4-dimensional code"));
    }
    let mut reps: Vec<Word> = b_code
        .iter()
        .map(|&w| d_span.iter().map(|&x| w + x).min().expect("nonempty span"))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    if reps.len() != COSETS {
        return Err(fail(format!("found {} cosets", reps.len())));
    }
    Ok(FlipBase {
        b: span(&b_code),
        d,
        d_span,
        reps,
    })
}

impl FlipBase {
    pub fn coset_of(&self, w: &Word) -> Option<usize> {
        let key = self.d_span.iter().map(|&x| *w + x).min()?;
        self.reps.iter().position(|r| *r == key)
    }

    /// `table[k][i]` is the coset of `reps[i] + reps[k]`.
    pub fn translation_table(&self) -> Result<Vec<[u8; COSETS]>> {
        let index: HashMap<Word, usize> = self
            .reps
            .iter()
            .enumerate()
            .flat_map(|(i, r)| self.d_span.iter().map(move |x| (*r + *x, i)))
            .collect();
        self.reps
            .iter()
            .map(|t| {
                let mut row = [0u8; COSETS];
                for (i, r) in self.reps.iter().enumerate() {
                    row[i] = *index
                        .get(&(*r + *t))
                        .ok_or_else(|| fail("coset translate left B"))?
                        as u8;
                }
                Ok(row)
            })
            .collect()
    }
}

pub fn flip_code(base: &FlipBase, p: FlipPattern) -> Code {
    let ones = Word::ones(N).expect("valid length");
    let words = base.reps.iter().enumerate().flat_map(|(i, r)| {
        let shift = if p.flips(i) { *r + ones } else { *r };
        base.d_span.iter().map(move |x| shift + *x)
    });
    Code::new(N, words).expect("words of length 20")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipReport {
    pub checks: Vec<Check>,
}

impl FlipReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every structural check; failures are recorded, not raised.
pub fn verify_flip_properties(c: &Code) -> FlipReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };
    push("size", c.size() == 256, format!("size {}", c.size()));
    let length_ok = c.len() == N;
    push("length", length_ok, format!("length {}", c.len()));
    if !length_ok || c.is_empty() {
        return FlipReport { checks };
    }
    let mut counts = [0u64; N + 1];
    let words: Vec<u64> = c.iter().map(Word::packed).collect();
    for &u in &words {
        for &v in &words {
            counts[(u ^ v).count_ones() as usize] += 1;
        }
    }
    let min = (1..=N).find(|&i| counts[i] > 0);
    push(
        "min_distance",
        min == Some(8),
        format!("minimum distance {min:?}"),
    );
    let bad: Vec<usize> = (1..=N).filter(|&i| i % 4 != 0 && counts[i] > 0).collect();
    push(
        "divisible_by_4",
        bad.is_empty(),
        format!("distances not divisible by 4: {bad:?}"),
    );
    push(
        "a20_zero",
        counts[N] == 0,
        format!("pairs at distance 20: {}", counts[N]),
    );
    let m = c.size() as u64;
    let expected: Vec<u64> = (0..=N)
        .map(|i| {
            DISTGOL
                .iter()
                .find(|(d, _)| *d == i)
                .map_or(0, |(_, a)| a * m)
        })
        .collect();
    push(
        "distribution",
        counts[..] == expected[..],
        format!(
            "pair counts {:?}",
            (0..=N)
                .filter(|&i| counts[i] > 0)
                .map(|i| (i, counts[i]))
                .collect::<Vec<_>>()
        ),
    );
    let heavy: Vec<&Word> = c.iter().filter(|w| w.weight() == 16).collect();
    let invariant = heavy
        .iter()
        .all(|a| c.iter().all(|u| c.contains(&(*u + **a))));
    push(
        "translation_invariant",
        invariant,
        format!("{} weight-16 words", heavy.len()),
    );
    let ones = Word::ones(N).expect("valid length");
    let mut e = span(c);
    e.insert(ones);
    let exactly_one = match e.to_code() {
        Ok(all) => all
            .iter()
            .all(|u| c.contains(u) != c.contains(&(*u + ones))),
        Err(_) => false,
    };
    push(
        "one_of_u_or_complement",
        exactly_one,
        format!("span with 1 has dimension {}", e.dimension()),
    );
    FlipReport { checks }
}

/// Coset permutations induced by the automorphisms of `B`.
///
/// An automorphism `x -> π(x) + t` of `B` preserves `⟨D⟩`, so it maps the
/// coset of `u` to the coset of `π(u) + t` and the complemented coset to
/// the complement of the image. It therefore carries the flip code of a
/// mask to the flip code of the permuted mask.
pub fn coset_permutations(base: &FlipBase) -> Result<Vec<[u8; COSETS]>> {
    let b = base.b.to_code()?;
    let mut out = Vec::new();
    for e in code_automorphisms(&b)? {
        let linear = Equivalence {
            perm: e.perm.clone(),
            flip: Word::zero(N)?,
        };
        if linear.apply_code(&base.d_span)? != base.d_span {
            return Err(fail("automorphism of B does not preserve the span of D"));
        }
        let mut sigma = [0u8; COSETS];
        for (i, r) in base.reps.iter().enumerate() {
            sigma[i] = base
                .coset_of(&e.apply(r))
                .ok_or_else(|| fail("image outside B"))? as u8;
        }
        out.push(sigma);
    }
    Ok(out)
}

fn permute_mask(m: usize, sigma: &[u8; COSETS]) -> usize {
    sigma
        .iter()
        .enumerate()
        .filter(|(i, _)| m >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// Orbits of the masks under the coset permutations and complementation of
/// the whole code, as `(smallest mask, orbit size)`. Masks in one orbit
/// give equivalent codes.
pub fn mask_orbits(base: &FlipBase) -> Result<Vec<(FlipPattern, usize)>> {
    let perms = coset_permutations(base)?;
    let mut seen = vec![false; MASKS];
    let mut out = Vec::new();
    for m in 0..MASKS {
        if seen[m] {
            continue;
        }
        seen[m] = true;
        let mut stack = vec![m];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            let images = perms
                .iter()
                .map(|p| permute_mask(x, p))
                .chain([!x & (MASKS - 1)]);
            for y in images.collect::<Vec<_>>() {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push((FlipPattern(m as u16), size));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipClass {
    /// Smallest mask in the class.
    pub representative: FlipPattern,
    pub size: usize,
    pub label: Option<CanonicalLabel>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub classes: Vec<FlipClass>,
    /// Number of mask orbits that were labeled.
    pub orbits: usize,
    pub verified: usize,
}

impl Classification {
    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }
}

/// Verifies all `2^16` flip codes and partitions them into equivalence classes.
pub fn classify_all(base: &FlipBase) -> Result<Classification> {
    let verified = (0..MASKS)
        .into_par_iter()
        .filter(|&m| verify_flip_properties(&flip_code(base, FlipPattern(m as u16))).passed())
        .count();
    let orbits = mask_orbits(base)?;
    let codes: Vec<Code> = orbits
        .par_iter()
        .map(|(p, _)| flip_code(base, *p))
        .collect();
    let classes = partition_classes(&codes)?
        .into_iter()
        .map(|p| FlipClass {
            representative: orbits[p.representative].0,
            size: p.members.iter().map(|&i| orbits[i].1).sum(),
            label: p.label,
        })
        .collect();
    Ok(Classification {
        classes,
        orbits: orbits.len(),
        verified,
    })
}

/// Writes one code file per class, named by class index and mask.
pub fn emit_representatives(
    base: &FlipBase,
    classes: &[FlipClass],
    dir: impl AsRef<Path>,
) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir.as_ref())?;
    classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let path = dir.as_ref().join(format!(
                "class{:02}_mask{:04x}.code",
                k + 1,
                c.representative.0
            ));
            io::write_code(&path, &flip_code(base, c.representative))?;
            Ok(path)
        })
        .collect()
}
