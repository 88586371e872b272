//! Fixed-length words over GF(q) and componentwise arithmetic on them.
//!
//! Words double as vectors of F^n and as m-tuples (syndromes, projective
//! coordinates). Ranks encode a word as an integer in big-endian base q, so
//! rank order coincides with lexicographic order on symbols; every exhaustive
//! scan in the crate walks ranks in increasing order, which is what makes
//! "first witness" deterministic.

use crate::error::{Error, Result};
use crate::gf::{El, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: u32,
    symbols: Vec<El>,
}

impl Word {
    /// Builds a word after range-checking every symbol against GF(q).
    pub fn new(field: &FieldSpec, symbols: Vec<El>) -> Result<Self> {
        for &s in &symbols {
            field.check_element(s as u64)?;
        }
        Ok(Word { q: field.q(), symbols })
    }

    pub fn zero(field: &FieldSpec, len: usize) -> Self {
        Word { q: field.q(), symbols: vec![0; len] }
    }

    pub(crate) fn from_symbols_unchecked(q: u32, symbols: Vec<El>) -> Self {
        Word { q, symbols }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[El] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> El {
        self.symbols[i]
    }

    pub fn set(&mut self, i: usize, v: El) {
        debug_assert!((v as u32) < self.q);
        self.symbols[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.symbols[i] != 0).collect()
    }

    pub fn distance(&self, other: &Word) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn add(&self, f: &FieldSpec, other: &Word) -> Word {
        self.compatible(f, other);
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| f.add_u(a, b))
            .collect();
        Word { q: self.q, symbols }
    }

    pub fn sub(&self, f: &FieldSpec, other: &Word) -> Word {
        self.compatible(f, other);
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| f.sub_u(a, b))
            .collect();
        Word { q: self.q, symbols }
    }

    pub fn neg(&self, f: &FieldSpec) -> Word {
        debug_assert_eq!(f.q(), self.q);
        Word { q: self.q, symbols: self.symbols.iter().map(|&a| f.neg_u(a)).collect() }
    }

    pub fn scaled(&self, f: &FieldSpec, lambda: El) -> Word {
        debug_assert_eq!(f.q(), self.q);
        Word { q: self.q, symbols: self.symbols.iter().map(|&a| f.mul_u(a, lambda)).collect() }
    }

    /// self += lambda * other, in place; the workhorse of row reduction.
    pub fn add_scaled(&mut self, f: &FieldSpec, lambda: El, other: &Word) {
        self.compatible(f, other);
        for (a, &b) in self.symbols.iter_mut().zip(&other.symbols) {
            *a = f.add_u(*a, f.mul_u(lambda, b));
        }
    }

    fn compatible(&self, f: &FieldSpec, other: &Word) {
        debug_assert_eq!(f.q(), self.q);
        debug_assert_eq!(self.q, other.q);
        debug_assert_eq!(self.len(), other.len());
    }

    /// Checks q and length against expectations, for public entry points.
    pub fn expect_shape(&self, f: &FieldSpec, len: usize) -> Result<()> {
        if self.q != f.q() {
            return Err(Error::FieldMismatch { expected: f.q(), actual: self.q });
        }
        if self.len() != len {
            return Err(Error::LengthMismatch { expected: len, actual: self.len() });
        }
        Ok(())
    }

    /// Big-endian base-q rank. Only meaningful when q^len fits in u64, which
    /// every capped scan guarantees before calling.
    pub fn rank(&self) -> u64 {
        let mut r: u64 = 0;
        for &s in &self.symbols {
            r = r
                .checked_mul(self.q as u64)
                .and_then(|r| r.checked_add(s as u64))
                .expect("rank overflow: space too large to index");
        }
        r
    }

    pub fn from_rank(field: &FieldSpec, len: usize, rank: u64) -> Word {
        let mut w = Word::zero(field, len);
        w.set_from_rank(rank);
        w
    }

    /// Rewrites this word to the given rank, keeping length and q.
    pub fn set_from_rank(&mut self, rank: u64) {
        let q = self.q as u64;
        let mut rest = rank;
        for i in (0..self.symbols.len()).rev() {
            self.symbols[i] = (rest % q) as El;
            rest /= q;
        }
        debug_assert_eq!(rest, 0, "rank out of range for this word length");
    }

    /// q^len when it fits in u64.
    pub fn space_size(q: u32, len: usize) -> Option<u64> {
        let mut size: u64 = 1;
        for _ in 0..len {
            size = size.checked_mul(q as u64)?;
        }
        Some(size)
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(out, "{}", parts.join(" "))
    }
}
