//! Packed bit-set rows for support and zero-set comparisons.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

/// A table of equal-width bit rows stored contiguously.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportTable {
    bits: usize,
    words: usize,
    data: Vec<u64>,
    weights: Vec<u32>,
}

impl SupportTable {
    pub fn new(bits: usize) -> Self {
        SupportTable {
            bits,
            words: bits.div_ceil(64).max(1),
            data: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn with_capacity(bits: usize, rows: usize) -> Self {
        let mut table = Self::new(bits);
        table.data.reserve(rows * table.words);
        table.weights.reserve(rows);
        table
    }

    /// Appends a row; bit `i` is set when the iterator yields `true` at position `i`.
    pub fn push(&mut self, bits: impl IntoIterator<Item = bool>) {
        let mut row = vec![0u64; self.words];
        let mut weight = 0;
        for (i, set) in bits.into_iter().enumerate().take(self.bits) {
            if set {
                row[i / 64] |= 1 << (i % 64);
                weight += 1;
            }
        }
        self.data.extend_from_slice(&row);
        self.weights.push(weight);
    }

    /// Appends every row of `other` (same width).
    pub fn append(&mut self, other: &SupportTable) {
        debug_assert_eq!(self.bits, other.bits);
        self.data.extend_from_slice(&other.data);
        self.weights.extend_from_slice(&other.weights);
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn width(&self) -> usize {
        self.bits
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn contains_bit(&self, i: usize, bit: usize) -> bool {
        self.row(i)[bit / 64] >> (bit % 64) & 1 == 1
    }

    /// Whether row `inner` is a subset of row `outer`.
    #[inline]
    pub fn is_subset(&self, inner: usize, outer: usize) -> bool {
        self.weights[inner] <= self.weights[outer]
            && self
                .row(inner)
                .iter()
                .zip(self.row(outer))
                .all(|(a, b)| a & !b == 0)
    }

    /// First `(outer, inner)` with `outer` in `outers`, `inner != outer`, and
    /// row `inner` contained in row `outer`. Scans `outer` ascending, then
    /// `inner` ascending.
    pub fn first_containment(&self, outers: Range<usize>) -> Option<(usize, usize)> {
        for outer in outers {
            for inner in 0..self.len() {
                if inner != outer && self.is_subset(inner, outer) {
                    return Some((outer, inner));
                }
            }
        }
        None
    }
}
