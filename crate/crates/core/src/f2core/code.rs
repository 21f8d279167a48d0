use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::f2core::word::Word;

/// A binary code: a set of distinct words of a common length, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Code {
    len: usize,
    words: Vec<Word>,
}

/// Coordinate operations accepted by [`Code::transform`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Keep the words that are zero on `positions`, then delete those coordinates.
    Shorten(Vec<usize>),
    /// Delete the coordinates.
    Puncture(Vec<usize>),
    /// Add a fixed word to every member.
    Translate(Word),
    /// Keep only the words of the given weight.
    SliceWeight(usize),
    /// Append one constant coordinate.
    ExtendWithBit(bool),
    /// Add the all-ones word to every member.
    Complement,
}

impl Code {
    /// Builds a code, silently merging duplicate words.
    pub fn new(len: usize, words: impl IntoIterator<Item = Word>) -> Result<Code> {
        if len == 0 || len > crate::f2core::word::MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        let mut words: Vec<Word> = words.into_iter().collect();
        if let Some(w) = words.iter().find(|w| w.len() != len) {
            return Err(Error::LengthMismatch(len, w.len()));
        }
        words.sort_unstable();
        words.dedup();
        Ok(Code { len, words })
    }

    pub(crate) fn from_sorted_unchecked(len: usize, words: Vec<Word>) -> Code {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        Code { len, words }
    }

    pub fn parse_words<'a>(len: usize, words: impl IntoIterator<Item = &'a str>) -> Result<Code> {
        let ws = words
            .into_iter()
            .map(|s| s.parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        Code::new(len, ws)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in ascending lexicographic order.
    #[inline]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.len && self.words.binary_search(w).is_ok()
    }

    /// Minimum distance over distinct pairs; `None` stands for infinity.
    pub fn min_distance(&self) -> Option<usize> {
        let ws = &self.words;
        let mut best: Option<usize> = None;
        for i in 0..ws.len() {
            let a = ws[i].packed();
            for b in &ws[i + 1..] {
                let d = (a ^ b.packed()).count_ones() as usize;
                if best.is_none_or(|m| d < m) {
                    best = Some(d);
                }
            }
        }
        best
    }

    /// Every member has this weight.
    pub fn is_constant_weight(&self, w: usize) -> bool {
        self.words.iter().all(|x| x.weight() == w)
    }

    pub fn union(&self, other: &Code) -> Result<Code> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Code::new(
            self.len,
            self.words.iter().chain(other.words.iter()).copied(),
        )
    }

    /// Applies `perm` to the coordinates: coordinate `i` of the result is
    /// coordinate `perm[i]` of the input.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<Code> {
        if perm.len() != self.len {
            return Err(Error::LengthMismatch(self.len, perm.len()));
        }
        let mut seen = vec![false; self.len];
        for &p in perm {
            if p >= self.len || seen[p] {
                return Err(Error::InvalidPosition {
                    pos: p,
                    len: self.len,
                });
            }
            seen[p] = true;
        }
        let ws = self
            .words
            .iter()
            .map(|w| w.select(perm))
            .collect::<Result<Vec<_>>>()?;
        Code::new(self.len, ws)
    }

    pub fn transform(&self, op: &Transform) -> Result<Code> {
        match op {
            Transform::Shorten(pos) => {
                let zero_on = Word::from_positions(self.len, pos)?;
                let keep = complement_positions(self.len, pos)?;
                let ws = self
                    .words
                    .iter()
                    .filter(|w| (**w & zero_on).is_zero())
                    .map(|w| w.select(&keep))
                    .collect::<Result<Vec<_>>>()?;
                Code::new(keep.len(), ws)
            }
            Transform::Puncture(pos) => {
                let keep = complement_positions(self.len, pos)?;
                let ws = self
                    .words
                    .iter()
                    .map(|w| w.select(&keep))
                    .collect::<Result<Vec<_>>>()?;
                Code::new(keep.len(), ws)
            }
            Transform::Translate(t) => {
                if t.len() != self.len {
                    return Err(Error::LengthMismatch(self.len, t.len()));
                }
                Code::new(self.len, self.words.iter().map(|w| *w + *t))
            }
            Transform::SliceWeight(wt) => Ok(Code::from_sorted_unchecked(
                self.len,
                self.words
                    .iter()
                    .copied()
                    .filter(|w| w.weight() == *wt)
                    .collect(),
            )),
            Transform::ExtendWithBit(b) => {
                let ws = self
                    .words
                    .iter()
                    .map(|w| w.push(*b))
                    .collect::<Result<Vec<_>>>()?;
                Code::new(self.len + 1, ws)
            }
            Transform::Complement => Code::new(self.len, self.words.iter().map(|w| w.complement())),
        }
    }

    pub fn to_set(&self) -> HashSet<Word> {
        self.words.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

fn complement_positions(len: usize, pos: &[usize]) -> Result<Vec<usize>> {
    let mut drop = vec![false; len];
    for &p in pos {
        if p >= len {
            return Err(Error::InvalidPosition { pos: p, len });
        }
        drop[p] = true;
    }
    let keep: Vec<usize> = (0..len).filter(|&i| !drop[i]).collect();
    if keep.is_empty() {
        return Err(Error::InvalidLength(0));
    }
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(ws: &[&str]) -> Code {
        Code::parse_words(ws[0].len(), ws.iter().copied()).unwrap()
    }

    #[test]
    fn dedup_and_order() {
        let c = code(&["110", "001", "110"]);
        assert_eq!(c.size(), 2);
        assert_eq!(c.words()[0].to_string(), "001");
    }

    #[test]
    fn min_distance_cases() {
        assert_eq!(code(&["0101"]).min_distance(), None);
        assert_eq!(code(&["0000", "0111", "1111"]).min_distance(), Some(1));
    }

    #[test]
    fn transforms() {
        let c = code(&["0011", "1100", "0101", "0000"]);
        let s = c.transform(&Transform::Shorten(vec![0])).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.size(), 3);
        let p = c.transform(&Transform::Puncture(vec![0, 1])).unwrap();
        assert_eq!(p.size(), 3);
        let z = Word::zero(4).unwrap();
        assert_eq!(c.transform(&Transform::Translate(z)).unwrap(), c);
        assert_eq!(c.transform(&Transform::SliceWeight(2)).unwrap().size(), 3);
        let e = c.transform(&Transform::ExtendWithBit(true)).unwrap();
        assert!(e.contains(&"00001".parse().unwrap()));
        let k = c.transform(&Transform::Complement).unwrap();
        assert!(k.contains(&"1111".parse().unwrap()));
        assert!(c.transform(&Transform::Shorten(vec![7])).is_err());
        assert!(c
            .transform(&Transform::Translate("01".parse().unwrap()))
            .is_err());
    }

    #[test]
    fn permutation_is_validated() {
        let c = code(&["1000", "0110"]);
        let p = c.permute_coordinates(&[3, 2, 1, 0]).unwrap();
        assert!(p.contains(&"0001".parse().unwrap()));
        assert!(c.permute_coordinates(&[0, 0, 1, 2]).is_err());
    }
}
