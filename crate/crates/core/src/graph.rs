//! Simple undirected graphs with bitset adjacency rows.
//!
//! Vertices are `0..n` internally; every file format and rendered output
//! uses 1-based indices. Decision procedures accept up to [`MAX_VERTICES`]
//! vertices; the Hochster engine enforces its own much smaller cap.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Hard cap for graph construction. The Betti engine rejects anything
/// above its own `max_vertices` (default 22, never more than 64).
pub const MAX_VERTICES: usize = 10_000;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    /// Neighborhood of a set: union of `N(v)` over `v` in `w`.
    pub fn neighborhood_of_set(&self, w: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in w.iter() {
            out = out.union(&self.adj[v]);
        }
        out
    }

    /// Edge-complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: Vec::with_capacity(self.n),
            labels: self.labels.clone(),
        };
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            g.adj.push(row);
        }
        g
    }

    /// Subgraph induced on `w`, relabeled to `0..|w|` in increasing order
    /// of the original indices.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        if w.universe() != self.n {
            return Err(Error::SubsetOutOfRange);
        }
        let verts: Vec<usize> = w.iter().collect();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(verts.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// Maximal connected vertex sets, ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if !comp.contains(u) {
                        comp.insert(u);
                        stack.push(u);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// Number of connected components that are not isolated vertices
    /// (the `k_W` of the cycle-subset counting arguments).
    pub fn components_non_isolated(&self) -> usize {
        self.connected_components()
            .iter()
            .filter(|c| c.len() > 1)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n).expect("union within cap");
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).unwrap();
        }
        g
    }

    /// Adjacency rows as single-word masks. Panics if `n > 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask adjacency requires n <= 64");
        self.adj.iter().map(VertexSet::as_mask).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Standard constructions used by the fixtures and the CLI.
pub mod generators {
    use super::Graph;

    /// Cycle `C_n` on vertices `0..n` in cyclic order. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::new(n).unwrap();
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Complete bipartite `K_{a,b}`: side X is `0..a`, side Y is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b).unwrap();
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v).unwrap();
            }
        }
        g
    }

    /// Path on `n` vertices `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    /// `m` disjoint edges `{2i, 2i+1}`.
    pub fn matching(m: usize) -> Graph {
        let mut g = Graph::new(2 * m).unwrap();
        for i in 0..m {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        g
    }

    /// The even cycle `C_{2s}` laid out on `X = {0..s}` and `Y = {s..2s}`
    /// with edges `{x_i, y_i}` and `{y_i, x_{i+1}}` (cyclically), so the
    /// biadjacency matrix of side X has ones at columns `i` and `i-1`.
    pub fn even_cycle_xy(s: usize) -> Graph {
        assert!(s >= 2);
        let mut g = Graph::new(2 * s).unwrap();
        for i in 0..s {
            g.add_edge(i, s + i).unwrap();
            g.add_edge(s + i, (i + 1) % s).unwrap();
        }
        g
    }

    /// `mK_2` laid out bipartitely: edges `{x_i, y_i}` with `X = {0..m}`,
    /// `Y = {m..2m}` (identity biadjacency matrix).
    pub fn matching_xy(m: usize) -> Graph {
        let mut g = Graph::new(2 * m).unwrap();
        for i in 0..m {
            g.add_edge(i, m + i).unwrap();
        }
        g
    }
}
