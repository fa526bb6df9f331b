//! Benchmark harness: runs algorithms over a cap sweep and several seeded
//! orderings and writes one CSV row per run plus mean/std summary rows.

use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::AlgorithmKind;
use crate::error::{Error, Result};
use crate::instances::{BaseInstance, Instance, RngStream};
use crate::set::Element;

/// One CSV row. Summary rows carry `ordering_index = -1` and an algorithm
/// name suffixed with `:mean` or `:std`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: String,
    pub rank: usize,
    pub ordering_index: i64,
    pub seed: u64,
    pub queries: f64,
    pub objective: f64,
    pub wall_ms: u64,
}

impl BenchRecord {
    pub fn is_summary(&self) -> bool {
        self.ordering_index < 0
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<AlgorithmKind>,
    pub caps: Vec<usize>,
    pub orderings: usize,
    pub seed: u64,
    /// Record wall-clock milliseconds. Off by default so reruns are
    /// byte-identical.
    pub timing: bool,
}

impl BenchConfig {
    pub fn new(algorithms: Vec<AlgorithmKind>, caps: Vec<usize>, seed: u64) -> Self {
        BenchConfig {
            algorithms,
            caps,
            orderings: 5,
            seed,
            timing: false,
        }
    }
}

/// Processing order `index` for an instance: the canonical order when the
/// instance has one, else a Fisher–Yates shuffle drawn from a stream keyed by
/// the instance name and the ordering index.
pub fn ordering(base: &BaseInstance, instance: &Instance, seed: u64, index: usize) -> Vec<Element> {
    if let Some(order) = &instance.canonical_order {
        return order.clone();
    }
    let mut order: Vec<Element> = (0..instance.ground_size()).collect();
    let stream = RngStream::new(
        seed,
        format!("ordering/{}", base.spec.short_name()),
        index as u64,
    );
    order.shuffle(&mut stream.rng());
    order
}

/// Runs every `(cap, algorithm, ordering)` cell on a fresh oracle. Returns
/// raw rows in canonical order followed by summary rows.
pub fn run_bench(base: &BaseInstance, config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.algorithms.is_empty() || config.caps.is_empty() {
        return Err(Error::InvalidParameter(
            "need at least one algorithm and one cap".into(),
        ));
    }
    let orderings = if base.has_fixed_order() {
        1
    } else {
        config.orderings.max(1)
    };
    let label = base.spec.to_string();

    let mut cells = Vec::new();
    for &cap in &config.caps {
        let instance = base.with_cap(cap)?;
        let orders: Vec<Vec<Element>> = (0..orderings)
            .map(|i| ordering(base, &instance, config.seed, i))
            .collect();
        for &alg in &config.algorithms {
            for (i, order) in orders.iter().enumerate() {
                cells.push((instance.clone(), alg, i, order.clone()));
            }
        }
    }

    let raw: Vec<BenchRecord> = cells
        .into_par_iter()
        .map(|(instance, alg, index, order)| {
            let start = Instant::now();
            let result = alg.run(&instance.objective, &instance.matroid, &order)?;
            let wall_ms = if config.timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            Ok(BenchRecord {
                instance: label.clone(),
                algorithm: alg.name().to_string(),
                rank: instance.rank(),
                ordering_index: index as i64,
                seed: config.seed,
                queries: result.queries as f64,
                objective: result.value as f64,
                wall_ms,
            })
        })
        .collect::<Result<_>>()?;

    let mut records = raw.clone();
    records.extend(summarize(&raw));
    Ok(records)
}

/// Mean and population standard deviation per `(rank, algorithm)` group, in
/// first-appearance order.
pub fn summarize(raw: &[BenchRecord]) -> Vec<BenchRecord> {
    let mut keys: Vec<(usize, &str)> = Vec::new();
    for r in raw.iter().filter(|r| !r.is_summary()) {
        let key = (r.rank, r.algorithm.as_str());
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let mut out = Vec::with_capacity(keys.len() * 2);
    for (rank, alg) in keys {
        let group: Vec<&BenchRecord> = raw
            .iter()
            .filter(|r| !r.is_summary() && r.rank == rank && r.algorithm == alg)
            .collect();
        let queries: Vec<f64> = group.iter().map(|r| r.queries).collect();
        let objective: Vec<f64> = group.iter().map(|r| r.objective).collect();
        let (qm, qs) = mean_std(&queries);
        let (om, os) = mean_std(&objective);
        let first = group[0];
        let wall: u64 = group.iter().map(|r| r.wall_ms).sum::<u64>() / group.len() as u64;
        for (suffix, q, o) in [("mean", qm, om), ("std", qs, os)] {
            out.push(BenchRecord {
                instance: first.instance.clone(),
                algorithm: format!("{alg}:{suffix}"),
                rank,
                ordering_index: -1,
                seed: first.seed,
                queries: q,
                objective: o,
                wall_ms: if suffix == "mean" { wall } else { 0 },
            });
        }
    }
    out
}

/// Population mean and standard deviation.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
