use std::collections::BTreeSet;

use super::{check_cap, OracleCaps};
use crate::{Error, PartSizes, Result};

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    part_label: Option<Vec<usize>>,
}

impl SmallGraph {
    /// Edges may be given in either orientation; loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(SmallGraph {
            vertex_count,
            edges: seen.into_iter().collect(),
            part_label: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Part index of each vertex, for graphs built by
    /// [`make_complete_multipartite`].
    pub fn part_labels(&self) -> Option<&[usize]> {
        self.part_label.as_deref()
    }

    /// Same graph with one more edge. Part labels are kept.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((a, b));
        let mut g = SmallGraph::new(self.vertex_count, &edges)?;
        g.part_label = self.part_label.clone();
        Ok(g)
    }

    pub fn path(vertex_count: usize) -> Self {
        let edges: Vec<_> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        SmallGraph::new(vertex_count, &edges).unwrap()
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3);
        let edges: Vec<_> = (0..vertex_count)
            .map(|v| (v, (v + 1) % vertex_count))
            .collect();
        SmallGraph::new(vertex_count, &edges).unwrap()
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges: Vec<_> = (0..vertex_count)
            .flat_map(|a| (a + 1..vertex_count).map(move |b| (a, b)))
            .collect();
        SmallGraph::new(vertex_count, &edges).unwrap()
    }

    /// Adjacency bitmasks. Panics above 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64);
        let mut adj = vec![0u64; self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }
}

/// The complete k-partite graph `G_n`: part `i` holds `n_i` consecutive
/// vertices and every pair of vertices in different parts is joined.
pub fn make_complete_multipartite(n: &PartSizes, caps: &OracleCaps) -> Result<SmallGraph> {
    let total = n.total();
    check_cap("vertex count", total, caps.multipartite_vertices)?;
    let label: Vec<usize> = n
        .as_slice()
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect();
    let mut edges = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            if label[a] != label[b] {
                edges.push((a, b));
            }
        }
    }
    let mut g = SmallGraph::new(total, &edges)?;
    g.part_label = Some(label);
    Ok(g)
}
