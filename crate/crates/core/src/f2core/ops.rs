use crate::error::{Error, Result};
use crate::f2core::code::Code;
use crate::f2core::word::Word;

pub fn weight(w: &Word) -> usize {
    w.weight()
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    u.distance(v)
}

/// `wt(u ∩ v)` together with the bilinear form `(u, v) = wt(u ∩ v) mod 2`.
pub fn intersection_weight(u: &Word, v: &Word) -> Result<(usize, u8)> {
    let k = u.intersection(v)?.weight();
    Ok((k, (k % 2) as u8))
}

/// For two words of weight `w`: `d(u,v) ≡ 2 (mod 4)` iff `wt(u ∩ v) ≢ w (mod 2)`.
///
/// Returns whether both sides agree. This is a theorem, so the result is
/// always `true`; it exists as an executable check.
pub fn parity_distance_check(u: &Word, v: &Word, w: usize) -> Result<bool> {
    for x in [u, v] {
        if x.weight() != w {
            return Err(Error::WeightPrecondition {
                expected: w,
                actual: x.weight(),
            });
        }
    }
    let d = u.distance(v)?;
    let (k, _) = intersection_weight(u, v)?;
    Ok((d % 4 == 2) == (k % 2 != w % 2))
}

/// Result of [`self_orthogonality`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orthogonality {
    pub self_orthogonal: bool,
    /// Unordered pairs `(u, v)` with `u <= v` and odd `wt(u ∩ v)`. A word
    /// of odd weight appears paired with itself.
    pub odd_pairs: Vec<(Word, Word)>,
}

pub fn self_orthogonality(c: &Code) -> Orthogonality {
    let ws = c.words();
    let mut odd_pairs = Vec::new();
    for i in 0..ws.len() {
        for j in i..ws.len() {
            if (ws[i] & ws[j]).weight() % 2 == 1 {
                odd_pairs.push((ws[i], ws[j]));
            }
        }
    }
    Orthogonality {
        self_orthogonal: odd_pairs.is_empty(),
        odd_pairs,
    }
}

/// Greedy subcode whose distinct pairs all have inner-product parity
/// `target_parity`.
///
/// Starts from `seed` and scans the remaining words in ascending
/// lexicographic order, keeping a word when its parity against every word
/// kept so far equals the target.
pub fn greedy_orthogonal_subcode(c: &Code, seed: &Word, target_parity: u8) -> Result<Code> {
    if !c.contains(seed) {
        return Err(Error::SeedNotInCode);
    }
    let target = u32::from(target_parity & 1);
    let mut chosen: Vec<Word> = vec![*seed];
    for w in c.words() {
        if w == seed {
            continue;
        }
        if chosen
            .iter()
            .all(|x| (x.packed() & w.packed()).count_ones() % 2 == target)
        {
            chosen.push(*w);
        }
    }
    Code::new(c.len(), chosen)
}

/// Number of unordered distinct pairs whose parity differs from `target_parity`.
pub fn wrong_parity_pairs(c: &Code, target_parity: u8) -> usize {
    let ws = c.words();
    let target = u32::from(target_parity & 1);
    let mut n = 0;
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            if (ws[i].packed() & ws[j].packed()).count_ones() % 2 != target {
                n += 1;
            }
        }
    }
    n
}
