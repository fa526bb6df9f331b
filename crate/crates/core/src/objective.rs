//! Submodular objectives: directed coverage, the capped-modular tight family,
//! directed cut, and plain modular functions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::oracle::{SetFunction, Value};
use crate::set::{Element, ElementSet};

/// Simple directed graph on nodes `0..n` with deduplicated arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out: Vec<Vec<usize>>,
    num_arcs: usize,
}

impl DirectedGraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "arc ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            out[u].push(v);
        }
        let mut num_arcs = 0;
        for nbrs in &mut out {
            nbrs.sort_unstable();
            nbrs.dedup();
            num_arcs += nbrs.len();
        }
        Ok(DirectedGraph { out, num_arcs })
    }

    pub fn num_nodes(&self) -> usize {
        self.out.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.num_arcs
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    /// Arcs in `(source, target)` lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_nodes()];
        for (_, v) in self.arcs() {
            deg[v] += 1;
        }
        deg
    }
}

/// `f(S) = |{v : (s, v) is an arc for some s ∈ S}|`.
///
/// A node covers itself only through an explicit self-loop.
#[derive(Debug, Clone)]
pub struct CoverageObjective {
    graph: Arc<DirectedGraph>,
}

impl CoverageObjective {
    pub fn new(graph: impl Into<Arc<DirectedGraph>>) -> Self {
        CoverageObjective {
            graph: graph.into(),
        }
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }
}

impl SetFunction for CoverageObjective {
    fn ground_size(&self) -> usize {
        self.graph.num_nodes()
    }

    fn value(&self, set: &ElementSet) -> Value {
        let mut covered = ElementSet::new();
        for s in set {
            for &v in self.graph.out_neighbors(s) {
                covered.insert(v);
            }
        }
        covered.len() as Value
    }
}

/// `f(S) = |{(u, v) : u ∈ S, v ∉ S}|`. Non-monotone, `f(∅) = f(V) = 0`.
#[derive(Debug, Clone)]
pub struct CutObjective {
    graph: Arc<DirectedGraph>,
}

impl CutObjective {
    pub fn new(graph: impl Into<Arc<DirectedGraph>>) -> Self {
        CutObjective {
            graph: graph.into(),
        }
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }
}

impl SetFunction for CutObjective {
    fn ground_size(&self) -> usize {
        self.graph.num_nodes()
    }

    fn value(&self, set: &ElementSet) -> Value {
        set.iter()
            .map(|u| {
                self.graph
                    .out_neighbors(u)
                    .iter()
                    .filter(|&&v| !set.contains(v))
                    .count() as Value
            })
            .sum()
    }
}

/// Capped modular function on `x_0, .., x_m, o` (ids `0..=m+1`):
/// `g(x_i) = 2^i`, `g(o) = 2^(m+2) - 2`, `f(S) = min(g(S), g(o))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightObjective {
    m: u32,
}

impl TightObjective {
    /// Largest `m` whose values fit an `i64`.
    pub const MAX_M: u32 = 60;

    pub fn new(m: u32) -> Result<Self> {
        if !(1..=Self::MAX_M).contains(&m) {
            return Err(Error::InvalidParameter(format!(
                "tight instance needs 1 <= m <= {}, got {m}",
                Self::MAX_M
            )));
        }
        Ok(TightObjective { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Id of the heavy element `o`.
    pub fn heavy(&self) -> Element {
        self.m as usize + 1
    }

    pub fn weight(&self, e: Element) -> Value {
        if e == self.heavy() {
            self.cap()
        } else {
            1 << e
        }
    }

    /// `g(o) = 2^(m+2) - 2`.
    pub fn cap(&self) -> Value {
        (1 << (self.m + 2)) - 2
    }
}

impl SetFunction for TightObjective {
    fn ground_size(&self) -> usize {
        self.m as usize + 2
    }

    fn value(&self, set: &ElementSet) -> Value {
        let total: i128 = set.iter().map(|e| self.weight(e) as i128).sum();
        total.min(self.cap() as i128) as Value
    }
}

/// `f(S) = offset + Σ_{e ∈ S} w(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularObjective {
    weights: Vec<Value>,
    offset: Value,
}

impl ModularObjective {
    pub fn new(weights: Vec<Value>) -> Self {
        Self::with_offset(weights, 0)
    }

    pub fn with_offset(weights: Vec<Value>, offset: Value) -> Self {
        ModularObjective { weights, offset }
    }
}

impl SetFunction for ModularObjective {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }

    fn value(&self, set: &ElementSet) -> Value {
        self.offset + set.iter().map(|e| self.weights[e]).sum::<Value>()
    }

    fn is_normalized(&self) -> bool {
        self.offset == 0
    }
}

/// The objectives an instance can carry.
#[derive(Debug, Clone)]
pub enum Objective {
    Coverage(CoverageObjective),
    Cut(CutObjective),
    Tight(TightObjective),
    Modular(ModularObjective),
}

impl Objective {
    pub fn name(&self) -> &'static str {
        match self {
            Objective::Coverage(_) => "coverage",
            Objective::Cut(_) => "cut",
            Objective::Tight(_) => "tight",
            Objective::Modular(_) => "modular",
        }
    }

    pub fn is_monotone(&self) -> bool {
        match self {
            Objective::Coverage(_) | Objective::Tight(_) => true,
            Objective::Cut(_) => false,
            Objective::Modular(m) => m.weights.iter().all(|&w| w >= 0),
        }
    }

    fn inner(&self) -> &dyn SetFunction {
        match self {
            Objective::Coverage(f) => f,
            Objective::Cut(f) => f,
            Objective::Tight(f) => f,
            Objective::Modular(f) => f,
        }
    }
}

impl SetFunction for Objective {
    fn ground_size(&self) -> usize {
        self.inner().ground_size()
    }

    fn value(&self, set: &ElementSet) -> Value {
        self.inner().value(set)
    }

    fn is_normalized(&self) -> bool {
        self.inner().is_normalized()
    }
}
