use std::fmt;
use std::ops::{Add, BitAnd};
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

/// A binary word of fixed length `1..=64`.
///
/// Coordinate `i` (counted from the left, as words are printed) lives in bit
/// `len - 1 - i` of the packed integer, so the derived ordering on words of
/// equal length is the lexicographic order of their printed strings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

#[inline]
fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Word {
    pub fn zero(len: usize) -> Result<Word> {
        Word::from_packed(len, 0)
    }

    pub fn ones(len: usize) -> Result<Word> {
        Word::from_packed(len, mask(len))
    }

    /// Builds a word from its packed representation (coordinate 0 is the most
    /// significant of the `len` low bits). Bits above `len` are rejected.
    pub fn from_packed(len: usize, bits: u64) -> Result<Word> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::Verification(format!(
                "packed value {bits:#x} exceeds {len} bits"
            )));
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }

    /// Unit vector with a single 1 at coordinate `pos`.
    pub fn unit(len: usize, pos: usize) -> Result<Word> {
        if pos >= len {
            return Err(Error::InvalidPosition { pos, len });
        }
        Word::from_packed(len, 1u64 << (len - 1 - pos))
    }

    pub fn from_positions(len: usize, positions: &[usize]) -> Result<Word> {
        let mut w = Word::zero(len)?;
        for &p in positions {
            if p >= len {
                return Err(Error::InvalidPosition { pos: p, len });
            }
            w.bits |= 1u64 << (len - 1 - p);
        }
        Ok(w)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn packed(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn bit(&self, pos: usize) -> bool {
        debug_assert!(pos < self.len());
        (self.bits >> (self.len() - 1 - pos)) & 1 == 1
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn complement(&self) -> Word {
        Word {
            len: self.len,
            bits: !self.bits & mask(self.len()),
        }
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            Err(Error::LengthMismatch(self.len(), other.len()))
        } else {
            Ok(())
        }
    }

    pub fn distance(&self, other: &Word) -> Result<usize> {
        self.check_len(other)?;
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// Sum over F2 with a length check. The `+` operator panics instead.
    pub fn checked_add(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(Word {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// The word `u ∩ v` with ones where both inputs have ones.
    pub fn intersection(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(Word {
            len: self.len,
            bits: self.bits & other.bits,
        })
    }

    /// Positions of the 1 bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.bit(i)).collect()
    }

    /// Word whose coordinate `i` is this word's coordinate `keep[i]`.
    pub fn select(&self, keep: &[usize]) -> Result<Word> {
        let mut bits = 0u64;
        for &p in keep {
            if p >= self.len() {
                return Err(Error::InvalidPosition {
                    pos: p,
                    len: self.len(),
                });
            }
            bits = (bits << 1) | ((self.bits >> (self.len() - 1 - p)) & 1);
        }
        Word::from_packed(keep.len(), bits)
    }

    /// Appends one coordinate at the right end.
    pub fn push(&self, bit: bool) -> Result<Word> {
        Word::from_packed(self.len() + 1, (self.bits << 1) | bit as u64)
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::InvalidLength(len));
        }
        Word::from_packed(len, (self.bits << other.len()) | other.bits)
    }
}

impl Add for Word {
    type Output = Word;

    fn add(self, rhs: Word) -> Word {
        assert_eq!(self.len, rhs.len, "adding words of different lengths");
        Word {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitAnd for Word {
    type Output = Word;

    fn bitand(self, rhs: Word) -> Word {
        assert_eq!(self.len, rhs.len, "intersecting words of different lengths");
        Word {
            len: self.len,
            bits: self.bits & rhs.bits,
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(Error::InvalidLength(s.len()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid character {c:?} at column {}", i + 1),
                    })
                }
            };
            bits = (bits << 1) | b;
        }
        Word::from_packed(s.len(), bits)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip_and_order() {
        let a: Word = "0011".parse().unwrap();
        let b: Word = "0100".parse().unwrap();
        assert!(a < b);
        assert_eq!(a.to_string(), "0011");
        assert!(a.bit(2) && a.bit(3) && !a.bit(0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!("01x".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
        assert!(Word::zero(65).is_err());
        assert!(Word::from_packed(3, 0b1000).is_err());
    }

    #[test]
    fn select_push_concat() {
        let w: Word = "10110".parse().unwrap();
        assert_eq!(w.select(&[4, 0, 2]).unwrap().to_string(), "011");
        assert_eq!(w.push(true).unwrap().to_string(), "101101");
        let z: Word = "01".parse().unwrap();
        assert_eq!(z.concat(&w).unwrap().to_string(), "0110110");
        assert_eq!(Word::ones(64).unwrap().weight(), 64);
    }
}
