//! Quadratic monomial ideals that are not squarefree, handled through
//! polarization.
//!
//! A non-squarefree quadratic ideal mixes square generators `x_i^2` with
//! edge generators `x_u x_v`; it models a graph with loops. Polarization
//! replaces each square by a whisker edge `x_i y_i` on a fresh vertex,
//! preserving every multigraded Betti number once `y_i` is graded like
//! `x_i`. Complement notions are always taken of the loop-free graph.

use std::collections::BTreeSet;

use crate::betti::{betti_diagram, multigraded_entries, BettiDiagram, EngineOptions};
use crate::bipartite::{bipartite_complement_auto, detect_bipartition};
use crate::bitset::VertexSet;
use crate::cycles::min_induced_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::strands::DEFAULT_WITNESS_CAP;

/// A minimally generated ideal of quadrics: squares `x_i^2` and edges
/// `x_u x_v`. At least one square is required; purely squarefree input is
/// a plain edge ideal and uses [`Graph`] directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIdeal {
    n_vars: usize,
    squares: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl QuadraticIdeal {
    pub fn new(
        n_vars: usize,
        squares: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let squares: BTreeSet<usize> = squares.into_iter().collect();
        let mut normalized = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::NotMinimal(format!(
                    "generator x{}*x{} is a square; write it as x{}^2",
                    u + 1,
                    v + 1,
                    u + 1
                )));
            }
            let key = (u.min(v), u.max(v));
            if key.1 >= n_vars {
                return Err(Error::VertexOutOfRange {
                    v: key.1,
                    n: n_vars,
                });
            }
            if !normalized.insert(key) {
                return Err(Error::NotMinimal(format!(
                    "duplicate generator x{}*x{}",
                    key.0 + 1,
                    key.1 + 1
                )));
            }
        }
        if let Some(&bad) = squares.iter().find(|&&i| i >= n_vars) {
            return Err(Error::VertexOutOfRange { v: bad, n: n_vars });
        }
        if squares.is_empty() {
            return Err(Error::NoSquares);
        }
        Ok(QuadraticIdeal {
            n_vars,
            squares,
            edges: normalized,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn squares(&self) -> impl Iterator<Item = usize> + '_ {
        self.squares.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// The loop-free graph on all variables (loop vertices retained).
    pub fn squarefree_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        Graph::from_edges(self.n_vars, &edges).expect("validated at construction")
    }

    /// The non-simple graph the ideal models: edges plus loops.
    pub fn looped_graph(&self) -> LoopedGraph {
        LoopedGraph {
            base: self.squarefree_graph(),
            loops: VertexSet::from_iter(self.n_vars, self.squares.iter().copied()),
        }
    }
}

/// A graph with loops: the base simple graph plus a set of looped vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopedGraph {
    pub base: Graph,
    pub loops: VertexSet,
}

impl LoopedGraph {
    fn is_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops.contains(u)
        } else {
            self.base.has_edge(u, v)
        }
    }

    fn all_edges(&self) -> Vec<IdealEdge> {
        let mut out: Vec<IdealEdge> = self.loops.iter().map(IdealEdge::Loop).collect();
        out.extend(
            self.base
                .edges()
                .into_iter()
                .map(|(u, v)| IdealEdge::Pair(u, v)),
        );
        out
    }
}

/// One generator viewed as an edge of the non-simple graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealEdge {
    Loop(usize),
    Pair(usize, usize),
}

impl IdealEdge {
    fn endpoints(&self) -> [usize; 2] {
        match *self {
            IdealEdge::Loop(u) => [u, u],
            IdealEdge::Pair(u, v) => [u, v],
        }
    }
}

/// The polarized graph: every square `x_i^2` becomes a whisker `x_i y_i`
/// on a fresh vertex, appended after the original variables in increasing
/// order of `i`; edge generators stay.
pub fn polarize(ideal: &QuadraticIdeal) -> Graph {
    let n = ideal.n_vars;
    let squares: Vec<usize> = ideal.squares.iter().copied().collect();
    let mut g = Graph::new(n + squares.len()).expect("within cap");
    for &(u, v) in &ideal.edges {
        g.add_edge(u, v).unwrap();
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    for (k, &i) in squares.iter().enumerate() {
        g.add_edge(i, n + k).unwrap();
        labels.push(format!("y{}", i + 1));
    }
    g.set_labels(labels);
    g
}

/// A multigraded Betti number of the ideal in the original variables;
/// exponents are 0, 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepolarizedEntry {
    pub i: u32,
    pub exponents: Vec<u8>,
    pub count: u64,
}

/// Graded and multigraded Betti numbers of a non-squarefree quadratic
/// ideal, defined through its polarization.
#[derive(Clone, Debug)]
pub struct NonSquarefreeBetti {
    pub diagram: BettiDiagram,
    pub depolarized: Vec<DepolarizedEntry>,
}

/// Betti numbers of the ideal over GF(p): the diagram of the polarized
/// edge ideal, with multigraded entries folded back onto the original
/// variables (`y_i` graded like `x_i`). The fold is a bijection on
/// nonzero entries, which is asserted.
pub fn betti_nonsquarefree(
    ideal: &QuadraticIdeal,
    p: u32,
    opts: &EngineOptions,
) -> Result<NonSquarefreeBetti> {
    let g_pol = polarize(ideal);
    let diagram = betti_diagram(&g_pol, p, opts)?;
    let raw = multigraded_entries(&g_pol, p, opts)?;
    let whisker_owner: Vec<usize> = ideal.squares.iter().copied().collect();
    let n = ideal.n_vars;
    let mut seen = BTreeSet::new();
    let mut depolarized = Vec::with_capacity(raw.len());
    for entry in raw {
        let mut exponents = vec![0u8; n];
        for v in entry.support.iter() {
            let original = if v < n { v } else { whisker_owner[v - n] };
            exponents[original] += 1;
        }
        for (v, &e) in exponents.iter().enumerate() {
            assert!(
                e < 2 || entry.support.contains(v),
                "a whisker cannot contribute without its base vertex"
            );
        }
        assert!(
            seen.insert((entry.i, exponents.clone())),
            "fold-back must be a bijection on nonzero entries"
        );
        depolarized.push(DepolarizedEntry {
            i: entry.i,
            exponents,
            count: entry.count,
        });
    }
    Ok(NonSquarefreeBetti {
        diagram,
        depolarized,
    })
}

fn totally_disjoint(g: &LoopedGraph, e: &IdealEdge, f: &IdealEdge) -> bool {
    for &u in &e.endpoints() {
        for &v in &f.endpoints() {
            if g.is_edge(u, v) {
                return false;
            }
        }
    }
    true
}

pub fn has_two_totally_disjoint_edges(g: &LoopedGraph) -> bool {
    let edges = g.all_edges();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if totally_disjoint(g, e, f) {
                return true;
            }
        }
    }
    false
}

/// Number of unordered triples of pairwise totally disjoint edges of the
/// non-simple graph (loops included), with up to `DEFAULT_WITNESS_CAP`
/// witness triples. Equals the count of induced subgraphs isomorphic to
/// three pairwise totally disjoint edges.
pub fn totally_disjoint_triples(g: &LoopedGraph) -> (u64, Vec<[IdealEdge; 3]>) {
    let edges = g.all_edges();
    let ne = edges.len();
    let mut td = vec![vec![false; ne]; ne];
    for i in 0..ne {
        for j in i + 1..ne {
            let ok = totally_disjoint(g, &edges[i], &edges[j]);
            td[i][j] = ok;
            td[j][i] = ok;
        }
    }
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    for i in 0..ne {
        for j in i + 1..ne {
            if !td[i][j] {
                continue;
            }
            for k in j + 1..ne {
                if td[i][k] && td[j][k] {
                    count += 1;
                    if witnesses.len() < DEFAULT_WITNESS_CAP {
                        witnesses.push([edges[i], edges[j], edges[k]]);
                    }
                }
            }
        }
    }
    (count, witnesses)
}

/// The regularity-3 test for a non-squarefree quadratic ideal whose
/// loop-free graph is connected and bipartite: the non-simple graph has
/// two totally disjoint edges or its complement an induced cycle of
/// length >= 5; it has no three pairwise totally disjoint edges; and the
/// bipartite complement has no induced cycle of length >= 8.
pub fn reg3_nonsquarefree(ideal: &QuadraticIdeal) -> Result<bool> {
    let g_sqf = ideal.squarefree_graph();
    if !g_sqf.is_connected() {
        return Err(Error::NotConnected);
    }
    if detect_bipartition(&g_sqf).is_err() {
        return Err(Error::NotBipartite);
    }
    let looped = ideal.looped_graph();
    let first = has_two_totally_disjoint_edges(&looped)
        || min_induced_cycle(&g_sqf.complement(), 5).is_some();
    if !first {
        return Ok(false);
    }
    let (triples, _) = totally_disjoint_triples(&looped);
    if triples > 0 {
        return Ok(false);
    }
    let bc = bipartite_complement_auto(&g_sqf, false)?;
    Ok(min_induced_cycle(&bc, 8).is_none())
}
