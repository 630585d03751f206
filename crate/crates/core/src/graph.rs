//! Simple undirected graphs over dense vertex ids `0..n`, and the elementary
//! invariants the rest of the crate is built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count handled by the bitmask-based exact solvers.
pub const MAX_BITSET_VERTICES: usize = 64;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and duplicate-free; symmetry and loop-freeness
/// are checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, collapsing duplicate edges.
    ///
    /// Rejects self-loops and out-of-range endpoints, reporting the index of
    /// the offending pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        let g = Graph { adj, m: m / 2 };
        debug_assert!(g.is_well_formed());
        Ok(g)
    }

    fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&u| u != v && u < self.n() && self.adj[u].binary_search(&v).is_ok())
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Δ(G); zero for the graph with no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); zero for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                // Both lists are sorted, so a merge finds a common neighbor.
                let (mut i, mut j) = (0, 0);
                let other = &self.adj[v];
                while i < list.len() && j < other.len() {
                    match list[i].cmp(&other[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => return false,
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n()
    }

    /// Length of a shortest cycle, or [`Girth::Infinite`] for forests.
    ///
    /// Runs a breadth-first search from every root; the first non-tree edge
    /// met from root `r` closes a walk of length `d(u) + d(w) + 1`, which
    /// contains a cycle no longer than that, and a shortest cycle through `r`
    /// is found exactly. Taking the minimum over all roots is exact.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // Cycles closed from here on are at least 2 * dist[u] long.
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// The subgraph induced by `subset`, with vertices renumbered in the order
    /// given. Returns the graph together with the map from new ids to old ids.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut new_id = vec![usize::MAX; n];
        let mut remap = Vec::with_capacity(subset.len());
        for &v in subset {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if new_id[v] == usize::MAX {
                new_id[v] = remap.len();
                remap.push(v);
            }
        }
        let mut edges = Vec::new();
        for (i, &v) in remap.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = new_id[u];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(remap.len(), &edges)?;
        Ok((g, remap))
    }

    /// Adjacency rows as bitmasks. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > MAX_BITSET_VERTICES {
            return Err(Error::TooLarge {
                n: self.n(),
                limit: MAX_BITSET_VERTICES,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &u| acc | (1u64 << u)))
            .collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Less,
            (Girth::Infinite, Girth::Finite(_)) => Greater,
            (Girth::Infinite, Girth::Infinite) => Equal,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite girths serialize as integers, infinite girth as the string `"inf"`.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("inf"),
        }
    }
}
