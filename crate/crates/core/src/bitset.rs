//! Fixed-width vertex bit sets.

use std::fmt;

const WORD_BITS: usize = 64;

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of vertices drawn from `0..capacity`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(capacity)],
            capacity,
        }
    }

    /// The set `{0, 1, ..., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut set = VertexSet::new(capacity);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.clear_tail();
        set
    }

    pub fn from_words(words: &[u64], capacity: usize) -> Self {
        debug_assert_eq!(words.len(), words_for(capacity));
        VertexSet {
            words: words.to_vec(),
            capacity,
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, items: I) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in items {
            set.insert(v);
        }
        set
    }

    fn clear_tail(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.capacity {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place intersection with a raw word slice of the same width.
    #[inline]
    pub fn intersect_words(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.intersect_words(&other.words);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len_words(&self, other: &[u64]) -> usize {
        self.words
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.intersection_len_words(&other.words)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Drops every element `<= v`.
    pub fn retain_above(&mut self, v: usize) {
        let word = v / WORD_BITS;
        for w in self.words.iter_mut().take(word) {
            *w = 0;
        }
        if let Some(w) = self.words.get_mut(word) {
            let bit = v % WORD_BITS;
            *w &= if bit == WORD_BITS - 1 { 0 } else { !0u64 << (bit + 1) };
        }
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_respects_capacity() {
        for cap in [0, 1, 63, 64, 65, 130] {
            let s = VertexSet::full(cap);
            assert_eq!(s.len(), cap);
            assert_eq!(s.iter().count(), cap);
            assert!(!s.contains(cap));
        }
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(100, [1, 5, 64, 99]);
        let b = VertexSet::from_iter(100, [5, 64, 70]);
        assert_eq!(a.intersection_len(&b), 2);
        let mut c = a.clone();
        c.intersect_with(&b);
        assert_eq!(c.to_vec(), vec![5, 64]);
        let mut d = a.clone();
        d.difference_with(&b);
        assert_eq!(d.to_vec(), vec![1, 99]);
        assert!(c.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(d.first(), Some(1));
        assert_eq!(VertexSet::new(10).first(), None);
    }

    #[test]
    fn retain_above_boundaries() {
        let all = VertexSet::full(130);
        for v in [0, 62, 63, 64, 127, 128, 129] {
            let mut s = all.clone();
            s.retain_above(v);
            assert_eq!(s.to_vec(), ((v + 1)..130).collect::<Vec<_>>());
        }
    }
}
