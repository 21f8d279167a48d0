use crate::error::{Error, Result};
use crate::f2core::code::Code;
use crate::f2core::word::Word;

/// A linear code given by a basis in reduced row echelon form.
///
/// Pivots are leading (leftmost) coordinates; rows are sorted by pivot, left
/// to right, and every pivot column is zero outside its own row. The basis of
/// a given subspace is therefore unique and `==` compares subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearCode {
    len: usize,
    basis: Vec<Word>,
}

#[inline]
fn pivot_bit(w: u64) -> u64 {
    1u64 << (63 - w.leading_zeros())
}

impl LinearCode {
    /// The zero code `{0}` of length `len`.
    pub fn zero(len: usize) -> Result<LinearCode> {
        Word::zero(len)?;
        Ok(LinearCode {
            len,
            basis: Vec::new(),
        })
    }

    /// Span of the given generators.
    pub fn from_generators(len: usize, gens: impl IntoIterator<Item = Word>) -> Result<LinearCode> {
        let mut l = LinearCode::zero(len)?;
        for g in gens {
            if g.len() != len {
                return Err(Error::LengthMismatch(len, g.len()));
            }
            l.insert(g);
        }
        Ok(l)
    }

    /// Adds `w` to the span; returns false if it was already contained.
    pub fn insert(&mut self, w: Word) -> bool {
        let r = self.reduce(w.packed());
        if r == 0 {
            return false;
        }
        let p = pivot_bit(r);
        for b in self.basis.iter_mut() {
            if b.packed() & p != 0 {
                *b = Word::from_packed(self.len, b.packed() ^ r).expect("same length");
            }
        }
        self.basis
            .push(Word::from_packed(self.len, r).expect("same length"));
        self.basis
            .sort_unstable_by_key(|b| b.packed().leading_zeros());
        true
    }

    fn reduce(&self, mut v: u64) -> u64 {
        for b in &self.basis {
            if v & pivot_bit(b.packed()) != 0 {
                v ^= b.packed();
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.len && self.reduce(w.packed()) == 0
    }

    /// Number of words, `2^dimension`.
    pub fn size(&self) -> u128 {
        1u128 << self.dimension()
    }

    /// Pivot coordinates (leftmost 1 of each basis row).
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|b| b.packed().leading_zeros() as usize - (64 - self.len))
            .collect()
    }

    /// Every word of the code, sorted. Limited to dimension ≤ 26.
    pub fn to_code(&self) -> Result<Code> {
        if self.dimension() > 26 {
            return Err(Error::Unsupported(format!(
                "enumerating a code of dimension {}",
                self.dimension()
            )));
        }
        let k = self.dimension();
        let mut ws = Vec::with_capacity(1 << k);
        let mut cur = 0u64;
        ws.push(cur);
        for i in 1u64..(1u64 << k) {
            // Gray-code walk: flip the basis row at the lowest set bit of i
            cur ^= self.basis[i.trailing_zeros() as usize].packed();
            ws.push(cur);
        }
        let words = ws
            .into_iter()
            .map(|b| Word::from_packed(self.len, b))
            .collect::<Result<Vec<_>>>()?;
        Code::new(self.len, words)
    }

    /// The dual code with respect to `(u, v) = wt(u ∩ v) mod 2`.
    pub fn dual(&self) -> LinearCode {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.len];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut gens = Vec::with_capacity(self.len - pivots.len());
        for f in (0..self.len).filter(|&f| !is_pivot[f]) {
            let mut pos = vec![f];
            for (row, &p) in self.basis.iter().zip(&pivots) {
                if row.bit(f) {
                    pos.push(p);
                }
            }
            gens.push(Word::from_positions(self.len, &pos).expect("valid positions"));
        }
        LinearCode::from_generators(self.len, gens).expect("same length")
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }

    /// Subspace intersection, computed as the dual of the sum of duals.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        let sum = LinearCode::from_generators(
            self.len,
            self.dual()
                .basis
                .iter()
                .chain(other.dual().basis.iter())
                .copied(),
        )?;
        Ok(sum.dual())
    }
}

/// The F2-linear span of a code.
pub fn span(c: &Code) -> LinearCode {
    LinearCode::from_generators(c.len(), c.words().iter().copied())
        .expect("code words share its length")
}

pub fn dual(l: &LinearCode) -> LinearCode {
    l.dual()
}
