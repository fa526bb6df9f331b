//! Matroid constraints: the uniform and partition matroids.

use crate::error::{Error, Result};
use crate::set::{Element, ElementSet};

/// Independence oracle for a matroid over `0..ground_size()`.
///
/// Only [`independent`](Matroid::independent) and [`rank`](Matroid::rank)
/// are required; the remaining methods have generic fallbacks that
/// implementations override with cheaper structure-aware versions.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    /// Independence test. Members outside the ground set make a set dependent.
    fn independent(&self, s: &ElementSet) -> bool;

    /// Size of a largest independent set.
    fn rank(&self) -> usize;

    /// Range-checked independence test.
    fn is_independent(&self, s: &ElementSet) -> Result<bool> {
        match s.max_element() {
            Some(e) if e >= self.ground_size() => Err(Error::ElementOutOfRange {
                element: e,
                ground_size: self.ground_size(),
            }),
            _ => Ok(self.independent(s)),
        }
    }

    /// Whether `s + e` is independent, given `s` independent.
    fn can_add(&self, s: &ElementSet, e: Element) -> bool {
        self.independent(&s.with(e))
    }

    /// Members `a` of independent `s` (increasing id) such that
    /// `s - a + e` is independent.
    fn exchange_candidates(&self, s: &ElementSet, e: Element) -> Vec<Element> {
        s.iter()
            .filter(|&a| self.independent(&s.without(a).with(e)))
            .collect()
    }

    fn is_loop(&self, e: Element) -> bool {
        !self.independent(&ElementSet::singleton(e))
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn independent(&self, s: &ElementSet) -> bool {
        (**self).independent(s)
    }
    fn rank(&self) -> usize {
        (**self).rank()
    }
    fn can_add(&self, s: &ElementSet, e: Element) -> bool {
        (**self).can_add(s, e)
    }
    fn exchange_candidates(&self, s: &ElementSet, e: Element) -> Vec<Element> {
        (**self).exchange_candidates(s, e)
    }
}

/// `S` is independent iff `|S| <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Self {
        UniformMatroid { n, k }
    }

    pub fn cap(&self) -> usize {
        self.k
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn independent(&self, s: &ElementSet) -> bool {
        s.len() <= self.k && s.max_element().is_none_or(|e| e < self.n)
    }

    fn rank(&self) -> usize {
        self.k.min(self.n)
    }

    fn can_add(&self, s: &ElementSet, e: Element) -> bool {
        e < self.n && (s.contains(e) || s.len() < self.k)
    }

    fn exchange_candidates(&self, s: &ElementSet, e: Element) -> Vec<Element> {
        if e >= self.n || self.k == 0 {
            return Vec::new();
        }
        // any member can make room once |s| <= k
        s.to_vec()
    }
}

/// `S` is independent iff `|S ∩ P_i| <= k_i` for every part `P_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    part_of: Vec<usize>,
    caps: Vec<usize>,
    part_sizes: Vec<usize>,
}

impl PartitionMatroid {
    /// `part_of[e]` is the part of element `e`; `caps[i]` bounds part `i`.
    pub fn new(part_of: Vec<usize>, caps: Vec<usize>) -> Result<Self> {
        let mut part_sizes = vec![0; caps.len()];
        for (e, &p) in part_of.iter().enumerate() {
            let Some(size) = part_sizes.get_mut(p) else {
                return Err(Error::InvalidParameter(format!(
                    "element {e} assigned to part {p}, but only {} parts have caps",
                    caps.len()
                )));
            };
            *size += 1;
        }
        Ok(PartitionMatroid {
            part_of,
            caps,
            part_sizes,
        })
    }

    /// Every part gets the same cap.
    pub fn with_uniform_cap(part_of: Vec<usize>, num_parts: usize, cap: usize) -> Result<Self> {
        Self::new(part_of, vec![cap; num_parts])
    }

    pub fn num_parts(&self) -> usize {
        self.caps.len()
    }

    pub fn part_of(&self, e: Element) -> usize {
        self.part_of[e]
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    fn count_in_part(&self, s: &ElementSet, part: usize) -> usize {
        s.iter().filter(|&a| self.part_of[a] == part).count()
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.part_of.len()
    }

    fn independent(&self, s: &ElementSet) -> bool {
        let mut used = vec![0usize; self.caps.len()];
        for e in s {
            let Some(&p) = self.part_of.get(e) else {
                return false;
            };
            used[p] += 1;
            if used[p] > self.caps[p] {
                return false;
            }
        }
        true
    }

    fn rank(&self) -> usize {
        self.caps
            .iter()
            .zip(&self.part_sizes)
            .map(|(&k, &size)| k.min(size))
            .sum()
    }

    fn can_add(&self, s: &ElementSet, e: Element) -> bool {
        if s.contains(e) {
            return true;
        }
        let Some(&p) = self.part_of.get(e) else {
            return false;
        };
        self.count_in_part(s, p) < self.caps[p]
    }

    fn exchange_candidates(&self, s: &ElementSet, e: Element) -> Vec<Element> {
        let Some(&p) = self.part_of.get(e) else {
            return Vec::new();
        };
        if self.caps[p] == 0 {
            return Vec::new();
        }
        if self.can_add(s, e) {
            return s.to_vec();
        }
        s.iter().filter(|&a| self.part_of[a] == p).collect()
    }
}

/// The concrete matroids an instance can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidKind {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
}

impl MatroidKind {
    fn inner(&self) -> &dyn Matroid {
        match self {
            MatroidKind::Uniform(m) => m,
            MatroidKind::Partition(m) => m,
        }
    }
}

impl Matroid for MatroidKind {
    fn ground_size(&self) -> usize {
        self.inner().ground_size()
    }
    fn independent(&self, s: &ElementSet) -> bool {
        self.inner().independent(s)
    }
    fn rank(&self) -> usize {
        self.inner().rank()
    }
    fn can_add(&self, s: &ElementSet, e: Element) -> bool {
        self.inner().can_add(s, e)
    }
    fn exchange_candidates(&self, s: &ElementSet, e: Element) -> Vec<Element> {
        self.inner().exchange_candidates(s, e)
    }
}

impl From<UniformMatroid> for MatroidKind {
    fn from(m: UniformMatroid) -> Self {
        MatroidKind::Uniform(m)
    }
}

impl From<PartitionMatroid> for MatroidKind {
    fn from(m: PartitionMatroid) -> Self {
        MatroidKind::Partition(m)
    }
}
