//! The Golay family and the explicit optimal codes built from it.
//!
//! The extended code is generated by `[I_12 | B]` with the fixed matrix `B`
//! below. Coordinate order is part of this module's contract: shortening
//! always removes leading coordinates, puncturing removes coordinate 0.
//! Every constructor re-verifies the properties it promises.

use crate::error::{Error, Result};
use crate::f2core::{span, Code, LinearCode, Transform, Word};

const GOLAY_B: [&str; 12] = [
    "110111000101",
    "101110001011",
    "011100010111",
    "111000101101",
    "110001011011",
    "100010110111",
    "000101101111",
    "001011011101",
    "010110111001",
    "101101110001",
    "011011100011",
    "111111111110",
];

/// Leading 8-bit patterns selecting 32-word subcodes, and the 4-bit strings
/// that replace them.
const PREFIX_SPECS: [(&str, &str); 8] = [
    ("00000000", "0000"),
    ("11000000", "1100"),
    ("10100000", "1010"),
    ("10010000", "1001"),
    ("10001000", "0110"),
    ("10000100", "0101"),
    ("10000010", "0011"),
    ("10000001", "1111"),
];

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

fn generator_rows() -> Vec<Word> {
    GOLAY_B
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let ident: String = (0..12).map(|j| if i == j { '1' } else { '0' }).collect();
            format!("{ident}{b}").parse().expect("static generator row")
        })
        .collect()
}

/// The `[24, 12, 8]` extended binary Golay code.
pub fn build_extended_golay() -> Result<LinearCode> {
    let g = LinearCode::from_generators(24, generator_rows())?;
    if g.dimension() != 12 {
        return Err(fail(format!("generator has rank {}", g.dimension())));
    }
    if !g.is_self_dual() {
        return Err(fail("extended Golay code is not self-dual"));
    }
    let words = g.to_code()?;
    if let Some(w) = words.iter().find(|w| w.weight() % 4 != 0) {
        return Err(fail(format!("word {w} has weight not divisible by 4")));
    }
    let min_weight = words
        .iter()
        .filter(|w| !w.is_zero())
        .map(|w| w.weight())
        .min();
    if min_weight != Some(8) {
        return Err(fail(format!("minimum weight {min_weight:?}, expected 8")));
    }
    Ok(g)
}

/// The `[23, 12, 7]` binary Golay code: the extended code punctured at
/// coordinate 0.
pub fn build_punctured_golay() -> Result<LinearCode> {
    let ext = build_extended_golay()?.to_code()?;
    let c = ext.transform(&Transform::Puncture(vec![0]))?;
    if c.size() != 4096 || c.min_distance() != Some(7) {
        return Err(fail("punctured Golay code is not a [23,12,7] code"));
    }
    Ok(span(&c))
}

/// The extended Golay code shortened at its first `i` coordinates.
pub fn build_shortened(i: usize) -> Result<LinearCode> {
    if !(1..=4).contains(&i) {
        return Err(Error::OutOfRange(format!(
            "shortening count {i} not in 1..=4"
        )));
    }
    let ext = build_extended_golay()?.to_code()?;
    let c = ext.transform(&Transform::Shorten((0..i).collect()))?;
    if c.size() != 1 << (12 - i) {
        return Err(fail(format!("shortened code has size {}", c.size())));
    }
    if c.min_distance() != Some(8) {
        return Err(fail("shortened code lost minimum distance 8"));
    }
    Ok(span(&c))
}

/// All family members at once.
#[derive(Clone, Debug)]
pub struct GolayFamily {
    pub extended24: LinearCode,
    pub punctured23: LinearCode,
    /// `shortened[i - 1]` is shortened `i` times.
    pub shortened: Vec<LinearCode>,
}

impl GolayFamily {
    pub fn build() -> Result<GolayFamily> {
        Ok(GolayFamily {
            extended24: build_extended_golay()?,
            punctured23: build_punctured_golay()?,
            shortened: (1..=4).map(build_shortened).collect::<Result<_>>()?,
        })
    }

    pub fn shortened(&self, i: usize) -> Option<&LinearCode> {
        i.checked_sub(1).and_then(|k| self.shortened.get(k))
    }
}

/// The optimal constant-weight codes for the supported `(n, d, w)`:
///
/// * `(24,8,12)`: weight-12 words of the extended code (2576 words);
/// * `(23,8,11)`: weight-11 words of the punctured code (1288 words);
/// * `(22,8,11)`: weight-12 words starting `10`, those two coordinates removed (672 words);
/// * `(22,8,10)`: weight-12 words starting `11`, those two coordinates removed (616 words).
pub fn build_optimal_cw(n: usize, d: usize, w: usize) -> Result<Code> {
    let (code, size) = match (n, d, w) {
        (24, 8, 12) => (
            build_extended_golay()?
                .to_code()?
                .transform(&Transform::SliceWeight(12))?,
            2576,
        ),
        (23, 8, 11) => (
            build_punctured_golay()?
                .to_code()?
                .transform(&Transform::SliceWeight(11))?,
            1288,
        ),
        (22, 8, 11) | (22, 8, 10) => {
            let lead = if w == 11 { "10" } else { "11" };
            let dodecads = build_extended_golay()?
                .to_code()?
                .transform(&Transform::SliceWeight(12))?;
            let keep: Vec<usize> = (2..24).collect();
            let words = dodecads
                .iter()
                .filter(|x| {
                    x.select(&[0, 1])
                        .map(|p| p.to_string() == lead)
                        .unwrap_or(false)
                })
                .map(|x| x.select(&keep))
                .collect::<Result<Vec<_>>>()?;
            (Code::new(22, words)?, if w == 11 { 672 } else { 616 })
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no optimal construction for (n,d,w) = ({n},{d},{w})"
            )))
        }
    };
    if code.size() != size {
        return Err(fail(format!(
            "({n},{d},{w}) construction has size {}",
            code.size()
        )));
    }
    if !code.is_constant_weight(w) || code.min_distance().is_some_and(|m| m < d) {
        return Err(fail(format!(
            "({n},{d},{w}) construction violates weight or distance"
        )));
    }
    Ok(code)
}

/// Coordinate permutation of the extended Golay code that moves the octad
/// through coordinates 0..=4 onto coordinates 0..=7 (both parts kept in
/// ascending order).
pub fn octad_first_permutation() -> Result<Vec<usize>> {
    let ext = build_extended_golay()?.to_code()?;
    let head = Word::from_positions(24, &[0, 1, 2, 3, 4])?;
    let octad = ext
        .iter()
        .find(|w| w.weight() == 8 && (**w & head) == head)
        .ok_or_else(|| fail("no octad through the first five coordinates"))?;
    let support = octad.support();
    let rest = (0..24).filter(|i| !octad.bit(*i));
    Ok(support.iter().copied().chain(rest).collect())
}

/// The non-linear `(20, 8)` code of size 256 obtained from eight 32-word
/// subcodes of the extended Golay code by replacing their common leading
/// 8-bit pattern with a 4-bit string.
pub fn build_prefix_replacement_code() -> Result<Code> {
    let perm = octad_first_permutation()?;
    let f = build_extended_golay()?
        .to_code()?
        .permute_coordinates(&perm)?;
    let head: Vec<usize> = (0..8).collect();
    let tail: Vec<usize> = (8..24).collect();
    let mut words = Vec::with_capacity(256);
    for (pattern, replacement) in PREFIX_SPECS {
        let pattern: Word = pattern.parse()?;
        let replacement: Word = replacement.parse()?;
        let sub: Vec<Word> = f
            .iter()
            .filter(|w| w.select(&head).map(|h| h == pattern).unwrap_or(false))
            .copied()
            .collect();
        let sub = Code::new(24, sub)?;
        if sub.size() != 32 {
            return Err(fail(format!(
                "prefix {pattern} selects {} words, expected 32",
                sub.size()
            )));
        }
        if sub.min_distance().is_some_and(|m| m < 8) {
            return Err(fail(format!(
                "prefix {pattern} subcode has distance below 8"
            )));
        }
        for w in sub.iter() {
            words.push(replacement.concat(&w.select(&tail)?)?);
        }
    }
    let code = Code::new(20, words)?;
    if code.size() != 256 || code.min_distance() != Some(8) {
        return Err(fail(
            "prefix-replacement code is not a (20,8) code of size 256",
        ));
    }
    Ok(code)
}
