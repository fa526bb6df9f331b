use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::matroid::{PartitionMatroid, UniformMatroid};
use crate::objective::{CoverageObjective, CutObjective, DirectedGraph, Objective};

use super::Instance;

/// Largest ground set the sampler produces.
pub const MAX_SAMPLED_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveFamily {
    Coverage,
    Cut,
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatroidFamily {
    Uniform,
    Partition,
    Either,
}

/// Shape of the small random instances used by the property suites.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplerConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub objective: ObjectiveFamily,
    pub matroid: MatroidFamily,
    /// Probability of each ordered pair (self-loops included) being an arc.
    pub arc_probability: f64,
}

impl SamplerConfig {
    pub fn new(n: usize) -> Self {
        SamplerConfig {
            min_n: n,
            max_n: n,
            objective: ObjectiveFamily::Either,
            matroid: MatroidFamily::Either,
            arc_probability: 0.3,
        }
    }

    pub fn sizes(mut self, min_n: usize, max_n: usize) -> Self {
        self.min_n = min_n;
        self.max_n = max_n;
        self
    }

    pub fn objective(mut self, family: ObjectiveFamily) -> Self {
        self.objective = family;
        self
    }

    pub fn matroid(mut self, family: MatroidFamily) -> Self {
        self.matroid = family;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.min_n > self.max_n || self.max_n > MAX_SAMPLED_N {
            return Err(Error::InvalidParameter(format!(
                "sampler sizes {}..={} must be ordered and at most {MAX_SAMPLED_N}",
                self.min_n, self.max_n
            )));
        }
        if !(0.0..=1.0).contains(&self.arc_probability) {
            return Err(Error::InvalidParameter(format!(
                "arc probability {} outside [0, 1]",
                self.arc_probability
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SamplerConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}..={};objective={:?};matroid={:?};arc_p={}",
            self.min_n, self.max_n, self.objective, self.matroid, self.arc_probability
        )
    }
}

/// Draws a random digraph with a coverage or cut objective and a random
/// uniform or partition matroid. Partition caps may be zero, producing loops.
pub fn sample_random_instance<R: Rng + ?Sized>(
    config: &SamplerConfig,
    rng: &mut R,
) -> Result<Instance> {
    config.validate()?;
    let n = rng.gen_range(config.min_n..=config.max_n);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(config.arc_probability) {
                arcs.push((u, v));
            }
        }
    }
    let graph = DirectedGraph::from_arcs(n, arcs)?;
    let use_coverage = match config.objective {
        ObjectiveFamily::Coverage => true,
        ObjectiveFamily::Cut => false,
        ObjectiveFamily::Either => rng.gen_bool(0.5),
    };
    let objective = if use_coverage {
        Objective::Coverage(CoverageObjective::new(graph))
    } else {
        Objective::Cut(CutObjective::new(graph))
    };
    let use_uniform = match config.matroid {
        MatroidFamily::Uniform => true,
        MatroidFamily::Partition => false,
        MatroidFamily::Either => rng.gen_bool(0.5),
    };
    let matroid = if use_uniform || n == 0 {
        let k = if n == 0 { 0 } else { rng.gen_range(1..=n) };
        UniformMatroid::new(n, k).into()
    } else {
        let parts = rng.gen_range(1..=n.min(4));
        let part_of = (0..n).map(|_| rng.gen_range(0..parts)).collect();
        let caps = (0..parts).map(|_| rng.gen_range(0..=3)).collect();
        PartitionMatroid::new(part_of, caps)?.into()
    };
    Ok(Instance {
        objective,
        matroid,
        canonical_order: None,
    })
}
