//! Problem instances: SNAP ingestion, seeded generators, the tight family,
//! and a sampler of small random instances for property tests.

mod generators;
mod rng;
mod sampler;
mod snap;

use std::fmt;
use std::path::PathBuf;

pub use generators::{gen_erdos_renyi, gen_sbm, GeneratedGraph};
pub use rng::RngStream;
pub use sampler::{sample_random_instance, MatroidFamily, ObjectiveFamily, SamplerConfig};
pub use snap::{build_snap, load_snap, parse_pairs, write_edge_list, NodeLabels, SnapGraph};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MatroidKind, PartitionMatroid, UniformMatroid};
use crate::objective::{CoverageObjective, Objective, TightObjective};
use crate::set::Element;

/// Everything needed to rebuild an instance bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSpec {
    Snap {
        edges: PathBuf,
        labels: Option<PathBuf>,
    },
    ErdosRenyi {
        n: usize,
        p: f64,
        parts: usize,
        seed: u64,
    },
    Sbm {
        communities: usize,
        min_size: usize,
        max_size: usize,
        p_intra: f64,
        seed: u64,
    },
    Tight {
        m: u32,
    },
    RandomSmall {
        config: SamplerConfig,
        seed: u64,
    },
}

impl InstanceSpec {
    /// Erdős–Rényi setting of the influence experiments: 1000 nodes,
    /// `p = 1/500`, 20 random parts.
    pub fn paper_erdos_renyi(seed: u64) -> Self {
        InstanceSpec::ErdosRenyi {
            n: 1000,
            p: 1.0 / 500.0,
            parts: 20,
            seed,
        }
    }

    /// SBM setting of the influence experiments: 100 communities of 10..=50
    /// nodes, intra-community probability 1/30.
    pub fn paper_sbm(seed: u64) -> Self {
        InstanceSpec::Sbm {
            communities: 100,
            min_size: 10,
            max_size: 50,
            p_intra: 1.0 / 30.0,
            seed,
        }
    }

    /// Short name used to key ordering streams.
    pub fn short_name(&self) -> String {
        match self {
            InstanceSpec::Snap { edges, .. } => edges
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "snap".into()),
            InstanceSpec::ErdosRenyi { .. } => "erdos-renyi".into(),
            InstanceSpec::Sbm { .. } => "sbm".into(),
            InstanceSpec::Tight { m } => format!("tight-{m}"),
            InstanceSpec::RandomSmall { .. } => "random-small".into(),
        }
    }

    pub fn build(&self) -> Result<BaseInstance> {
        let (objective, constraint) = match self {
            InstanceSpec::Snap { edges, labels } => {
                let g = load_snap(edges, labels.as_deref())?;
                let raw = g.raw_arcs;
                log::info!(
                    "loaded {}: {} nodes, {} arc lines, {} distinct arcs",
                    edges.display(),
                    g.graph.num_nodes(),
                    raw,
                    g.graph.num_arcs()
                );
                let n = g.graph.num_nodes();
                let constraint = match g.labels {
                    Some(l) => Constraint::Parts {
                        part_of: l.part_of,
                        num_parts: l.num_parts,
                    },
                    // without labels the cap bounds the whole ground set
                    None => Constraint::Parts {
                        part_of: vec![0; n],
                        num_parts: 1,
                    },
                };
                (
                    Objective::Coverage(CoverageObjective::new(g.graph)),
                    constraint,
                )
            }
            &InstanceSpec::ErdosRenyi { n, p, parts, seed } => {
                let g = gen_erdos_renyi(n, p, parts, seed)?;
                (
                    Objective::Coverage(CoverageObjective::new(g.graph)),
                    Constraint::Parts {
                        part_of: g.part_of,
                        num_parts: g.num_parts,
                    },
                )
            }
            &InstanceSpec::Sbm {
                communities,
                min_size,
                max_size,
                p_intra,
                seed,
            } => {
                let g = gen_sbm((min_size, max_size), communities, p_intra, seed)?;
                (
                    Objective::Coverage(CoverageObjective::new(g.graph)),
                    Constraint::Parts {
                        part_of: g.part_of,
                        num_parts: g.num_parts,
                    },
                )
            }
            &InstanceSpec::Tight { m } => {
                let t = build_tight(m)?;
                return Ok(BaseInstance {
                    spec: self.clone(),
                    objective: t.objective,
                    constraint: Constraint::Fixed {
                        matroid: t.matroid,
                        order: t.canonical_order,
                    },
                });
            }
            InstanceSpec::RandomSmall { config, seed } => {
                let mut rng = RngStream::new(*seed, "random-small", 0).rng();
                let inst = sample_random_instance(config, &mut rng)?;
                return Ok(BaseInstance {
                    spec: self.clone(),
                    objective: inst.objective,
                    constraint: Constraint::Fixed {
                        matroid: inst.matroid,
                        order: None,
                    },
                });
            }
        };
        Ok(BaseInstance {
            spec: self.clone(),
            objective,
            constraint,
        })
    }
}

impl fmt::Display for InstanceSpec {
    /// Canonical one-line form recorded with every benchmark row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Snap { edges, labels } => {
                write!(f, "snap:edges={}", edges.display())?;
                if let Some(l) = labels {
                    write!(f, ";labels={}", l.display())?;
                }
                Ok(())
            }
            InstanceSpec::ErdosRenyi { n, p, parts, seed } => {
                write!(f, "erdos-renyi:n={n};p={p};parts={parts};seed={seed}")
            }
            InstanceSpec::Sbm {
                communities,
                min_size,
                max_size,
                p_intra,
                seed,
            } => write!(
                f,
                "sbm:communities={communities};sizes={min_size}..={max_size};p={p_intra};seed={seed}"
            ),
            InstanceSpec::Tight { m } => write!(f, "tight:m={m}"),
            InstanceSpec::RandomSmall { config, seed } => write!(f, "random-small:{config};seed={seed}"),
        }
    }
}

/// How the matroid of an instance is obtained.
#[derive(Debug, Clone)]
pub enum Constraint {
    /// Partition matroid whose per-part cap is chosen per run.
    Parts {
        part_of: Vec<usize>,
        num_parts: usize,
    },
    /// A fixed matroid, optionally with a canonical processing order.
    Fixed {
        matroid: MatroidKind,
        order: Option<Vec<Element>>,
    },
}

/// An instance before a cap has been chosen.
#[derive(Debug, Clone)]
pub struct BaseInstance {
    pub spec: InstanceSpec,
    pub objective: Objective,
    pub constraint: Constraint,
}

impl BaseInstance {
    pub fn ground_size(&self) -> usize {
        use crate::oracle::SetFunction;
        self.objective.ground_size()
    }

    /// Materializes the instance with every part capped at `cap`. Fixed
    /// constraints ignore `cap`.
    pub fn with_cap(&self, cap: usize) -> Result<Instance> {
        let (matroid, canonical_order) = match &self.constraint {
            Constraint::Parts { part_of, num_parts } => (
                PartitionMatroid::with_uniform_cap(part_of.clone(), *num_parts, cap)?.into(),
                None,
            ),
            Constraint::Fixed { matroid, order } => (matroid.clone(), order.clone()),
        };
        Ok(Instance {
            objective: self.objective.clone(),
            matroid,
            canonical_order,
        })
    }

    pub fn has_fixed_order(&self) -> bool {
        matches!(self.constraint, Constraint::Fixed { order: Some(_), .. })
    }
}

/// Objective, matroid and (optionally) the canonical processing order.
#[derive(Debug, Clone)]
pub struct Instance {
    pub objective: Objective,
    pub matroid: MatroidKind,
    pub canonical_order: Option<Vec<Element>>,
}

impl Instance {
    pub fn ground_size(&self) -> usize {
        self.matroid.ground_size()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    /// The canonical order if there is one, else `0..n`.
    pub fn order(&self) -> Vec<Element> {
        self.canonical_order
            .clone()
            .unwrap_or_else(|| (0..self.ground_size()).collect())
    }
}

/// The capped-modular family on `x_0, .., x_m, o` under a cardinality-one
/// constraint, ordered so that `o` arrives last.
pub fn build_tight(m: u32) -> Result<Instance> {
    let objective = TightObjective::new(m)?;
    let n = m as usize + 2;
    Ok(Instance {
        objective: Objective::Tight(objective),
        matroid: UniformMatroid::new(n, 1).into(),
        canonical_order: Some((0..n).collect()),
    })
}

/// Parses a rank sweep like `1-15`, `1,2,5` or `3`.
pub fn parse_caps(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("cannot parse caps `{text}`"));
    let mut caps = Vec::new();
    for piece in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = piece.split_once('-') {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            caps.extend(lo..=hi);
        } else {
            caps.push(piece.parse().map_err(|_| bad())?);
        }
    }
    if caps.is_empty() || caps.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "caps must be positive integers, got `{text}`"
        )));
    }
    Ok(caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::SetFunction;

    #[test]
    fn tight_instances() {
        let t = build_tight(2).unwrap();
        assert_eq!(t.ground_size(), 4);
        let Objective::Tight(f) = &t.objective else {
            panic!()
        };
        assert_eq!(
            (0..4).map(|e| f.weight(e)).collect::<Vec<_>>(),
            vec![1, 2, 4, 14]
        );
        assert_eq!(t.rank(), 1);
        assert_eq!(t.order(), vec![0, 1, 2, 3]);
        let Objective::Tight(f10) = build_tight(10).unwrap().objective else {
            panic!()
        };
        assert_eq!(f10.cap(), 4094);
        assert!(build_tight(0).is_err());
    }

    #[test]
    fn caps_parse() {
        assert_eq!(parse_caps("1-3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_caps("1,4, 6-7").unwrap(), vec![1, 4, 6, 7]);
        assert!(parse_caps("0-2").is_err());
        assert!(parse_caps("").is_err());
        assert!(parse_caps("3-1").is_err());
        assert!(parse_caps("a").is_err());
    }

    #[test]
    fn spec_display_is_canonical() {
        let s = InstanceSpec::paper_erdos_renyi(3);
        assert_eq!(s.to_string(), "erdos-renyi:n=1000;p=0.002;parts=20;seed=3");
        assert_eq!(InstanceSpec::Tight { m: 4 }.to_string(), "tight:m=4");
    }

    #[test]
    fn generated_specs_rebuild_identically() {
        let spec = InstanceSpec::Sbm {
            communities: 5,
            min_size: 3,
            max_size: 6,
            p_intra: 0.5,
            seed: 17,
        };
        let a = spec.build().unwrap().with_cap(2).unwrap();
        let b = spec.build().unwrap().with_cap(2).unwrap();
        let (Objective::Coverage(fa), Objective::Coverage(fb)) = (&a.objective, &b.objective)
        else {
            panic!()
        };
        assert_eq!(fa.graph(), fb.graph());
        assert_eq!(a.matroid, b.matroid);
        assert_eq!(a.objective.ground_size(), a.matroid.ground_size());
    }
}
