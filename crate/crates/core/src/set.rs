//! Ground sets and bitset-backed element sets.

use std::fmt;

use crate::error::{Error, Result};

/// Dense element id in `0..n`.
pub type Element = usize;

const WORD_BITS: usize = 64;

/// The ground set `{0, .., n-1}` together with the order in which
/// single-pass algorithms see its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    order: Vec<Element>,
}

impl GroundSet {
    /// Ground set of size `n` in natural order.
    pub fn new(n: usize) -> Self {
        GroundSet {
            order: (0..n).collect(),
        }
    }

    /// Ground set with an explicit processing order, which must be a
    /// permutation of `0..order.len()`.
    pub fn with_order(order: Vec<Element>) -> Result<Self> {
        validate_permutation(&order, order.len())?;
        Ok(GroundSet { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[Element] {
        &self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.order.iter().copied()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }
}

/// Checks that `order` lists every id in `0..n` exactly once.
pub fn validate_permutation(order: &[Element], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "expected {n} elements, got {}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &e in order {
        if e >= n {
            return Err(Error::InvalidOrder(format!("element {e} out of range")));
        }
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::InvalidOrder(format!("element {e} repeated")));
        }
    }
    Ok(())
}

/// A finite set of element ids stored as a bitset.
///
/// The word vector never carries trailing zero words, so two sets with the
/// same members have identical representations. That makes the words a
/// canonical key for memoization.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    words: Vec<u64>,
    len: usize,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn singleton(e: Element) -> Self {
        let mut s = Self::new();
        s.insert(e);
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, e: Element) -> bool {
        let (w, b) = (e / WORD_BITS, e % WORD_BITS);
        self.words.get(w).is_some_and(|word| word >> b & 1 == 1)
    }

    /// Inserts `e`; returns whether it was newly added.
    pub fn insert(&mut self, e: Element) -> bool {
        let (w, b) = (e / WORD_BITS, e % WORD_BITS);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let mask = 1u64 << b;
        let fresh = self.words[w] & mask == 0;
        if fresh {
            self.words[w] |= mask;
            self.len += 1;
        }
        fresh
    }

    /// Removes `e`; returns whether it was present.
    pub fn remove(&mut self, e: Element) -> bool {
        let (w, b) = (e / WORD_BITS, e % WORD_BITS);
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let mask = 1u64 << b;
        let present = *word & mask != 0;
        if present {
            *word &= !mask;
            self.len -= 1;
            self.trim();
        }
        present
    }

    /// `self + e` as a new set.
    pub fn with(&self, e: Element) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    /// `self - e` as a new set.
    pub fn without(&self, e: Element) -> Self {
        let mut s = self.clone();
        s.remove(e);
        s
    }

    /// Largest member, if any.
    pub fn max_element(&self) -> Option<Element> {
        let (w, word) = self.words.iter().enumerate().next_back()?;
        Some(w * WORD_BITS + (WORD_BITS - 1 - word.leading_zeros() as usize))
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Self::from_words(words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Self::from_words(words)
    }

    pub fn difference(&self, other: &Self) -> Self {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        Self::from_words(words)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Raw bitset words, least-significant element first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn from_words(words: Vec<u64>) -> Self {
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        let mut s = ElementSet { words, len };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut s = ElementSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = Element;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}
