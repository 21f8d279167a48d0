use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::f2core::code::Code;

/// Distance distribution `a_i = |C|^{-1} |{(u,v) ∈ C×C : d(u,v) = i}|`.
///
/// Stored as ordered-pair counts; the rational values are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceDistribution {
    size: u64,
    pair_counts: Vec<u64>,
}

impl DistanceDistribution {
    pub fn from_pair_counts(size: u64, pair_counts: Vec<u64>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCode);
        }
        Ok(DistanceDistribution { size, pair_counts })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Word length `n`; the distribution has entries for `0..=n`.
    pub fn length(&self) -> usize {
        self.pair_counts.len() - 1
    }

    /// Number of ordered pairs at distance `i`.
    pub fn pair_count(&self, i: usize) -> u64 {
        self.pair_counts.get(i).copied().unwrap_or(0)
    }

    pub fn pair_counts(&self) -> &[u64] {
        &self.pair_counts
    }

    pub fn a(&self, i: usize) -> BigRational {
        BigRational::new(BigInt::from(self.pair_count(i)), BigInt::from(self.size))
    }

    pub fn values(&self) -> Vec<BigRational> {
        (0..self.pair_counts.len()).map(|i| self.a(i)).collect()
    }

    /// Distances with `a_i > 0`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.pair_counts.len())
            .filter(|&i| self.pair_counts[i] > 0)
            .collect()
    }

    /// Checks `a_0 = 1`, `Σ a_i = |C|`, and that every `a_i` with `i ≥ 1` is
    /// an integer multiple of `2/|C|`. Returns the violated property.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let size = BigRational::from_integer(BigInt::from(self.size));
        if !self.a(0).is_one() {
            return Err(format!("a_0 = {} != 1", self.a(0)));
        }
        let total = self
            .values()
            .into_iter()
            .fold(BigRational::zero(), |s, x| s + x);
        if total != size {
            return Err(format!("sum of a_i = {total} != |C| = {size}"));
        }
        let step = BigRational::new(BigInt::from(2), BigInt::from(self.size));
        for i in 1..self.pair_counts.len() {
            let q = self.a(i) / &step;
            if !q.is_integer() {
                return Err(format!("a_{i} = {} is not a multiple of 2/|C|", self.a(i)));
            }
        }
        Ok(())
    }
}

/// `A_i`: the number of codewords of weight `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero `(weight, count)` entries.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

pub fn distance_distribution(c: &Code) -> Result<DistanceDistribution> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let mut counts = vec![0u64; c.len() + 1];
    let ws = c.words();
    for i in 0..ws.len() {
        let a = ws[i].packed();
        for b in &ws[i + 1..] {
            counts[(a ^ b.packed()).count_ones() as usize] += 2;
        }
    }
    counts[0] = ws.len() as u64;
    DistanceDistribution::from_pair_counts(ws.len() as u64, counts)
}

pub fn weight_enumerator(c: &Code) -> WeightEnumerator {
    let mut counts = vec![0u64; c.len() + 1];
    for w in c {
        counts[w.weight()] += 1;
    }
    WeightEnumerator { counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_has_only_a0() {
        let c = Code::parse_words(5, ["01101"]).unwrap();
        let d = distance_distribution(&c).unwrap();
        assert_eq!(d.support(), vec![0]);
        assert!(d.check_invariants().is_ok());
    }

    #[test]
    fn empty_code_is_rejected() {
        let c = Code::new(4, Vec::new()).unwrap();
        assert_eq!(distance_distribution(&c), Err(Error::EmptyCode));
    }

    #[test]
    fn zero_code_enumerator() {
        let c = Code::parse_words(3, ["000"]).unwrap();
        let e = weight_enumerator(&c);
        assert_eq!(e.nonzero(), vec![(0, 1)]);
    }

    #[test]
    fn invariant_violation_is_reported() {
        let d = DistanceDistribution::from_pair_counts(3, vec![3, 1, 2]).unwrap();
        assert!(d.check_invariants().is_err());
    }
}
