//! Dense bit-indexed vertex sets.
//!
//! A [`VertexSet`] always knows its ambient size `n` and stores membership
//! for ids `0..n` in packed 64-bit words. Sets over different ambient sizes
//! do not interoperate; mixing them is a programming error and panics.

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of vertex ids drawn from a fixed ambient range `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set over `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    /// Builds a set from ids, panicking on out-of-range input.
    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Self {
        let mut s = Self::empty(n);
        for v in ids {
            s.insert(v);
        }
        s
    }

    /// Builds a set from untrusted ids, reporting the first out-of-range one.
    pub fn try_from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in ids {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Ambient size, i.e. the `n` of the graph this set lives on.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of ambient range {}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of ambient range {}", self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_ambient(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_ambient(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_ambient(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_ambient(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_ambient(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Sorted `Vec` of member ids.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_ambient(&self, other: &VertexSet) {
        assert_eq!(
            self.n, other.n,
            "vertex sets over different ambient sizes do not interoperate"
        );
    }

    fn trim(&mut self) {
        let tail = self.n % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if self.n == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
