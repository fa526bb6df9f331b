//! SNAP-style edge lists and node label files.
//!
//! Both formats are whitespace separated with `#` comment lines. Edge lines
//! hold `source target`; label lines hold `node part`. Extra columns are
//! ignored.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::objective::DirectedGraph;

/// Partition of the nodes read from a label file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeLabels {
    /// Dense part index per node.
    pub part_of: Vec<usize>,
    pub num_parts: usize,
    /// Original label of each dense part; `None` for the synthetic part that
    /// collects unlabeled nodes.
    pub part_labels: Vec<Option<u64>>,
}

/// A graph loaded from disk, with ids remapped to `0..n`.
#[derive(Debug, Clone)]
pub struct SnapGraph {
    pub graph: DirectedGraph,
    /// Original id of each dense node.
    pub node_ids: Vec<u64>,
    /// Arc lines read, before deduplication.
    pub raw_arcs: usize,
    pub labels: Option<NodeLabels>,
    pub warnings: Vec<String>,
}

pub fn load_snap(edges: &Path, labels: Option<&Path>) -> Result<SnapGraph> {
    let pairs = parse_pairs(BufReader::new(File::open(edges)?), edges)?;
    let label_pairs = match labels {
        Some(path) => Some(parse_pairs(BufReader::new(File::open(path)?), path)?),
        None => None,
    };
    build_snap(pairs, label_pairs)
}

/// Builds the dense graph from raw id pairs. Node ids are numbered in order
/// of first appearance in the edge list; nodes that appear only in the label
/// list follow in label-file order as isolated nodes.
pub fn build_snap(arcs: Vec<(u64, u64)>, labels: Option<Vec<(u64, u64)>>) -> Result<SnapGraph> {
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut node_ids = Vec::new();
    let mut dense = |id: u64, node_ids: &mut Vec<u64>| {
        *index.entry(id).or_insert_with(|| {
            node_ids.push(id);
            node_ids.len() - 1
        })
    };
    let dense_arcs: Vec<(usize, usize)> = arcs
        .iter()
        .map(|&(u, v)| (dense(u, &mut node_ids), dense(v, &mut node_ids)))
        .collect();

    let mut warnings = Vec::new();
    let labels = labels.map(|pairs| {
        let edge_nodes = node_ids.len();
        let mut label_of: HashMap<usize, u64> = HashMap::new();
        for &(node, label) in &pairs {
            let d = dense(node, &mut node_ids);
            if d >= edge_nodes && !label_of.contains_key(&d) {
                warnings.push(format!(
                    "labelled node {node} has no arcs; kept as isolated"
                ));
            }
            if let Some(&prev) = label_of.get(&d) {
                if prev != label {
                    warnings.push(format!(
                        "node {node} labelled twice ({prev}, {label}); keeping {prev}"
                    ));
                }
                continue;
            }
            label_of.insert(d, label);
        }
        let mut distinct: Vec<u64> = label_of.values().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let part_index: HashMap<u64, usize> =
            distinct.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut part_labels: Vec<Option<u64>> = distinct.iter().copied().map(Some).collect();

        let unlabeled = (0..node_ids.len())
            .filter(|d| !label_of.contains_key(d))
            .count();
        let synthetic = (unlabeled > 0).then(|| {
            warnings.push(format!(
                "{unlabeled} nodes have no label; assigned a synthetic part"
            ));
            part_labels.push(None);
            part_labels.len() - 1
        });
        let part_of = (0..node_ids.len())
            .map(|d| match label_of.get(&d) {
                Some(l) => part_index[l],
                None => synthetic.expect("synthetic part exists when a node is unlabeled"),
            })
            .collect();
        NodeLabels {
            part_of,
            num_parts: part_labels.len(),
            part_labels,
        }
    });
    for w in &warnings {
        log::warn!("{w}");
    }

    let graph = DirectedGraph::from_arcs(node_ids.len(), dense_arcs)?;
    Ok(SnapGraph {
        graph,
        node_ids,
        raw_arcs: arcs.len(),
        labels,
        warnings,
    })
}

/// Reads `a b` integer pairs, skipping blank and `#` lines.
pub fn parse_pairs<R: BufRead>(reader: R, source: &Path) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_error = |message: String| Error::Parse {
            path: PathBuf::from(source),
            line: i + 1,
            message,
        };
        let mut fields = trimmed.split_whitespace();
        let mut next = || -> Result<u64> {
            let tok = fields
                .next()
                .ok_or_else(|| parse_error(format!("expected two ids, got `{trimmed}`")))?;
            tok.parse()
                .map_err(|_| parse_error(format!("`{tok}` is not a non-negative integer")))
        };
        let a = next()?;
        let b = next()?;
        pairs.push((a, b));
    }
    Ok(pairs)
}

/// Writes the graph as a dense-id edge list.
pub fn write_edge_list<W: Write>(graph: &DirectedGraph, mut out: W) -> Result<()> {
    writeln!(
        out,
        "# nodes {} arcs {}",
        graph.num_nodes(),
        graph.num_arcs()
    )?;
    for (u, v) in graph.arcs() {
        writeln!(out, "{u}\t{v}")?;
    }
    Ok(())
}
