//! Seeded random graph generators. Undirected edges are emitted as both arcs.

use rand::Rng;

use crate::error::{Error, Result};
use crate::objective::DirectedGraph;

use super::rng::RngStream;

/// A generated graph plus the part of every node.
#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: DirectedGraph,
    pub part_of: Vec<usize>,
    pub num_parts: usize,
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "probability must lie in [0, 1], got {p}"
        )))
    }
}

/// `G(n, p)` with every node assigned one of `num_parts` parts uniformly.
pub fn gen_erdos_renyi(n: usize, p: f64, num_parts: usize, seed: u64) -> Result<GeneratedGraph> {
    check_probability(p)?;
    if num_parts == 0 && n > 0 {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    let mut edge_rng = RngStream::new(seed, "erdos-renyi/edges", 0).rng();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if edge_rng.gen_bool(p) {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
    }
    let mut part_rng = RngStream::new(seed, "erdos-renyi/parts", 0).rng();
    let part_of = (0..n).map(|_| part_rng.gen_range(0..num_parts)).collect();
    Ok(GeneratedGraph {
        graph: DirectedGraph::from_arcs(n, arcs)?,
        part_of,
        num_parts,
    })
}

/// Stochastic block model with community sizes drawn uniformly from
/// `sizes` (inclusive), edge probability `p_intra` inside a community and
/// zero across communities. Parts are the communities.
pub fn gen_sbm(
    sizes: (usize, usize),
    num_communities: usize,
    p_intra: f64,
    seed: u64,
) -> Result<GeneratedGraph> {
    check_probability(p_intra)?;
    let (lo, hi) = sizes;
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "community size range {lo}..={hi} is empty"
        )));
    }
    let mut size_rng = RngStream::new(seed, "sbm/sizes", 0).rng();
    let community_sizes: Vec<usize> = (0..num_communities)
        .map(|_| size_rng.gen_range(lo..=hi))
        .collect();

    let mut edge_rng = RngStream::new(seed, "sbm/edges", 0).rng();
    let mut part_of = Vec::new();
    let mut arcs = Vec::new();
    for (c, &size) in community_sizes.iter().enumerate() {
        let start = part_of.len();
        part_of.extend(std::iter::repeat_n(c, size));
        for u in start..start + size {
            for v in u + 1..start + size {
                if edge_rng.gen_bool(p_intra) {
                    arcs.push((u, v));
                    arcs.push((v, u));
                }
            }
        }
    }
    Ok(GeneratedGraph {
        graph: DirectedGraph::from_arcs(part_of.len(), arcs)?,
        part_of,
        num_parts: num_communities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        assert_eq!(gen_erdos_renyi(50, 0.0, 3, 1).unwrap().graph.num_arcs(), 0);
        let full = gen_erdos_renyi(4, 1.0, 2, 1).unwrap();
        assert_eq!(full.graph.num_arcs(), 12);
        assert!(full.graph.arcs().all(|(u, v)| u != v));
        assert!(gen_erdos_renyi(4, 1.5, 2, 1).is_err());
    }

    #[test]
    fn er_edge_count_within_four_sigma() {
        let n = 1000;
        let p = 1.0 / 500.0;
        let g = gen_erdos_renyi(n, p, 20, 2024).unwrap();
        let pairs = (n * (n - 1) / 2) as f64;
        let (mean, sd) = (pairs * p, (pairs * p * (1.0 - p)).sqrt());
        let edges = (g.graph.num_arcs() / 2) as f64;
        assert!((edges - mean).abs() <= 4.0 * sd, "{edges} vs {mean} ± {sd}");
        assert!(g.part_of.iter().all(|&p| p < 20));
    }

    #[test]
    fn er_is_reproducible() {
        let a = gen_erdos_renyi(200, 0.05, 4, 9).unwrap();
        let b = gen_erdos_renyi(200, 0.05, 4, 9).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.part_of, b.part_of);
        let c = gen_erdos_renyi(200, 0.05, 4, 10).unwrap();
        assert_ne!(a.graph, c.graph);
    }

    #[test]
    fn sbm_extremes() {
        assert_eq!(gen_sbm((3, 3), 5, 0.0, 1).unwrap().graph.num_arcs(), 0);
        let g = gen_sbm((3, 3), 2, 1.0, 1).unwrap();
        assert_eq!(g.graph.num_arcs(), 12);
        assert_eq!(g.part_of, vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn sbm_structure() {
        let g = gen_sbm((10, 50), 100, 1.0 / 30.0, 5).unwrap();
        let n = g.graph.num_nodes();
        assert!((1000..=5000).contains(&n));
        assert!(g
            .graph
            .arcs()
            .all(|(u, v)| g.part_of[u] == g.part_of[v] && u != v));
        let mut sizes = vec![0; 100];
        for &p in &g.part_of {
            sizes[p] += 1;
        }
        assert!(sizes.iter().all(|&s| (10..=50).contains(&s)));
    }
}
