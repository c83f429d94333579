//! Binary relations on a finite carrier as bit-packed boolean matrices.
//!
//! Composition is read along chains: `a (R·S) c` iff there is `b` with `a R b`
//! and `b S c`. Under this reading `left_image(R·S, I) = left_image(R, left_image(S, I))`,
//! so `Rⁿ I` is the left image of the n-fold self-composition.

use std::fmt;

use crate::algebra::{decode_pair, encode_pair, FiniteAlgebra, Operations};
use crate::error::{Error, Result};
use crate::set::{words_for, ElementSet, WORD_BITS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinRel {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BinRel {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        BinRel {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn diagonal(n: usize) -> Self {
        let mut r = Self::empty(n);
        for a in 0..n {
            r.insert(a, a);
        }
        r
    }

    pub fn full(n: usize) -> Self {
        let mut r = Self::empty(n);
        for a in 0..n {
            for b in 0..n {
                r.insert(a, b);
            }
        }
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, size: n });
                }
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Reads a subset of `A × A` (pairs encoded as `a * n + b`) as a relation on `A`.
    pub fn from_pair_set(n: usize, support: &ElementSet) -> Self {
        assert_eq!(support.carrier_size(), n * n);
        let mut r = Self::empty(n);
        for e in support.iter() {
            let (a, b) = decode_pair(n, e);
            r.insert(a, b);
        }
        r
    }

    /// The support of the relation as a subset of the square, pairs encoded `a * n + b`.
    pub fn to_pair_set(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.n * self.n);
        for (a, b) in self.pairs() {
            s.insert(encode_pair(self.n, a, b));
        }
        s
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.stride..(a + 1) * self.stride]
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.bits[a * self.stride + b / WORD_BITS] >> (b % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "pair ({a},{b}) outside carrier {}", self.n);
        self.bits[a * self.stride + b / WORD_BITS] |= 1u64 << (b % WORD_BITS);
    }

    /// Related pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.successors(a).iter().map(move |b| (a, b)).collect::<Vec<_>>())
    }

    /// `{ b : a R b }`.
    pub fn successors(&self, a: usize) -> ElementSet {
        ElementSet::from_words(self.n, self.row(a).to_vec())
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BinRel) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BinRel) -> Result<BinRel> {
        same_size(self.n, other.n)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Ok(BinRel { bits, ..self.clone() })
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        compose(self, self).map(|rr| rr.is_subset(self)).unwrap_or(false)
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Classes of an equivalence relation, each listed by its least element first.
    pub fn classes(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.n);
        let mut out = Vec::new();
        for a in 0..self.n {
            if !seen.contains(a) {
                let class = self.successors(a);
                seen.union_with(&class);
                out.push(class);
            }
        }
        out
    }
}

impl fmt::Debug for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// One `a b` line per related pair, lexicographic order.
impl fmt::Display for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

fn same_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

/// `a (R·S) c` iff `∃ b: a R b ∧ b S c`.
pub fn compose(r: &BinRel, s: &BinRel) -> Result<BinRel> {
    same_size(r.n, s.n)?;
    let mut out = BinRel::empty(r.n);
    let stride = r.stride;
    for a in 0..r.n {
        let dst = a * stride;
        for b in r.successors(a).iter() {
            let src = b * stride;
            for w in 0..stride {
                out.bits[dst + w] |= s.bits[src + w];
            }
        }
    }
    Ok(out)
}

/// The transpose `R°`.
pub fn opposite(r: &BinRel) -> BinRel {
    let mut out = BinRel::empty(r.n);
    for (a, b) in r.pairs() {
        out.insert(b, a);
    }
    out
}

/// `RI = { x : ∃ y ∈ I, x R y }`.
pub fn left_image(r: &BinRel, set: &ElementSet) -> Result<ElementSet> {
    same_size(r.n, set.carrier_size())?;
    let mut out = ElementSet::empty(r.n);
    for x in 0..r.n {
        if set.intersects_words(r.row(x)) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// `IR = { x : ∃ y ∈ I, y R x }`.
pub fn right_image(r: &BinRel, set: &ElementSet) -> Result<ElementSet> {
    same_size(r.n, set.carrier_size())?;
    let mut words = vec![0u64; r.stride];
    for y in set.iter() {
        for (w, src) in words.iter_mut().zip(r.row(y)) {
            *w |= src;
        }
    }
    Ok(ElementSet::from_words(r.n, words))
}

/// Whether `R`, viewed as a subset of `A × A`, contains every constant pair `(c, c)`
/// and is closed under every operation acting componentwise.
pub fn is_compatible(a: &FiniteAlgebra, r: &BinRel) -> Result<bool> {
    same_size(a.size(), r.n)?;
    let pairs: Vec<(usize, usize)> = r.pairs().collect();
    for op in 0..a.op_count() {
        let k = a.arity(op);
        if k == 0 {
            let c = a.apply(op, &[]);
            if !r.contains(c, c) {
                return Ok(false);
            }
            continue;
        }
        if pairs.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; k];
        let mut left = vec![0usize; k];
        let mut right = vec![0usize; k];
        loop {
            for (p, &i) in idx.iter().enumerate() {
                left[p] = pairs[i].0;
                right[p] = pairs[i].1;
            }
            if !r.contains(a.apply(op, &left), a.apply(op, &right)) {
                return Ok(false);
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < pairs.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(true)
}
