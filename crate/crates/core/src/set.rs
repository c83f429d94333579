use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A subset of the carrier `{0, …, n-1}` of a finite algebra, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    /// Builds a set from element indices, rejecting any index `>= n`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for x in elements {
            if x >= n {
                return Err(Error::ElementOutOfRange { element: x, size: n });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// The subset whose members are the set bits of `mask` (carriers up to 64 elements).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "mask construction needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD_BITS { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        ElementSet { n, words }
    }

    /// Size of the carrier this set lives in.
    pub fn carrier_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1
    }

    /// Inserts `x`; returns `true` when it was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.n, "element {x} outside carrier of size {}", self.n);
        let w = &mut self.words[x / WORD_BITS];
        let bit = 1u64 << (x % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.n {
            self.words[x / WORD_BITS] &= !(1u64 << (x % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD_BITS + tz)
            })
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        ElementSet { n: self.n, words }
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        ElementSet { n: self.n, words }
    }

    pub(crate) fn intersects_words(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).any(|(a, b)| a & b != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn check_carrier(&self, size: usize) -> Result<()> {
        if self.n != size {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: size,
            });
        }
        Ok(())
    }
}

/// Renders as `{0,2,3}`: ascending, brace-delimited, no spaces.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

/// All subsets of `{0, …, n-1}` ordered by increasing size, then by bitmask value.
pub fn subsets_by_size(n: usize) -> Vec<ElementSet> {
    assert!(n < WORD_BITS, "subset enumeration needs n < 64");
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks.into_iter().map(|m| ElementSet::from_mask(n, m)).collect()
}

/// Same order as [`subsets_by_size`], without the empty set.
pub fn nonempty_subsets(n: usize) -> Vec<ElementSet> {
    subsets_by_size(n).into_iter().skip(1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_sorted_and_compact() {
        let s = ElementSet::from_elements(5, [3, 0, 2]).unwrap();
        assert_eq!(s.to_string(), "{0,2,3}");
        assert_eq!(ElementSet::empty(3).to_string(), "{}");
    }

    #[test]
    fn out_of_range_member_rejected() {
        let err = ElementSet::from_elements(2, [2]).unwrap_err();
        assert_eq!(err, Error::ElementOutOfRange { element: 2, size: 2 });
    }

    #[test]
    fn large_carrier_spans_words() {
        let mut s = ElementSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.is_subset(&ElementSet::full(130)));
    }

    #[test]
    fn subset_order_is_popcount_then_numeric() {
        let order: Vec<String> = subsets_by_size(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(order, ["{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"]);
        assert_eq!(nonempty_subsets(4).len(), 15);
    }
}
