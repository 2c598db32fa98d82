//! The Hochster-formula engine.
//!
//! For an edge ideal, the graded Betti number `β_{i,j}` is the sum over
//! all `j`-element vertex subsets `W` of `dim H̃_{j-i-2}` of the
//! independence complex of `G[W]`; the multigraded numbers are the
//! individual summands, supported on squarefree multidegrees only. The
//! sweep enumerates subsets, skips those with an isolated vertex (their
//! complex is a cone), routes bipartite induced subgraphs through the
//! biadjacency reductions, and accumulates everything into a sparse
//! diagram. Workers own disjoint subset ranges and merge associatively,
//! so the diagram is identical for any worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{check_characteristic, plain_dims, LocalError, LocalGraph};
use crate::reduction::bipartite_dims;

#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    /// Largest vertex count swept; `2^n` subsets are visited.
    pub max_vertices: usize,
    /// Face cap handed to every homology computation.
    pub face_cap: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_vertices: 22,
            face_cap: 1 << 22,
        }
    }
}

/// Sparse Betti diagram: `(i, j) -> β_{i,j}`, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    entries: BTreeMap<(u32, u32), u64>,
    n_vertices: usize,
    field_char: u32,
}

impl BettiDiagram {
    pub fn new(n_vertices: usize, field_char: u32) -> Self {
        BettiDiagram {
            entries: BTreeMap::new(),
            n_vertices,
            field_char,
        }
    }

    pub fn from_entries<I: IntoIterator<Item = ((u32, u32), u64)>>(
        n_vertices: usize,
        field_char: u32,
        entries: I,
    ) -> Self {
        let mut d = Self::new(n_vertices, field_char);
        for ((i, j), v) in entries {
            d.add(i, j, v);
        }
        d
    }

    pub fn add(&mut self, i: u32, j: u32, value: u64) {
        if value > 0 {
            assert!(j >= i + 2, "edge ideals are generated in degree 2");
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn entry(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }

    pub fn max_homological_index(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max{j - i}` over the stored entries.
    pub fn regularity(&self) -> Result<u32> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .ok_or(Error::EmptyIdeal)
    }

    /// `(i, l_i, u_i)`: the minimal and maximal internal degree present in
    /// each homological index, sorted by `i`.
    pub fn strand_extrema(&self) -> Vec<(u32, u32, u32)> {
        let mut per_i: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
        for &(i, j) in self.entries.keys() {
            per_i
                .entry(i)
                .and_modify(|(lo, hi)| {
                    *lo = (*lo).min(j);
                    *hi = (*hi).max(j);
                })
                .or_insert((j, j));
        }
        per_i.into_iter().map(|(i, (lo, hi))| (i, lo, hi)).collect()
    }

    /// The vanishing propagation law: whenever `β_{i,j} = β_{i,j+1} = 0`
    /// (with `j >= i+2`), then `β_{i+1,j+2} = 0` as well. Holds for every
    /// diagram the engine produces.
    pub fn check_propagation(&self) -> bool {
        let max_i = match self.max_homological_index() {
            Some(m) => m,
            None => return true,
        };
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap();
        for i in 0..=max_i {
            for j in i + 2..=max_j {
                if self.entry(i, j) == 0
                    && self.entry(i, j + 1) == 0
                    && self.entry(i + 1, j + 2) != 0
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Serializes as `{"field": p, "entries": [{"i":…,"j":…,"value":…}, …],
/// "regularity": r}` with entries in sorted order.
impl Serialize for BettiDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct OrderedEntry {
            i: u32,
            j: u32,
            value: u64,
        }
        impl Serialize for OrderedEntry {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut m = serializer.serialize_map(Some(3))?;
                m.serialize_entry("i", &self.i)?;
                m.serialize_entry("j", &self.j)?;
                m.serialize_entry("value", &self.value)?;
                m.end()
            }
        }
        struct Entries<'a>(&'a BTreeMap<(u32, u32), u64>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (&(i, j), &value) in self.0 {
                    seq.serialize_element(&OrderedEntry { i, j, value })?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("BettiDiagram", 3)?;
        s.serialize_field("field", &self.field_char)?;
        s.serialize_field("entries", &Entries(&self.entries))?;
        s.serialize_field("regularity", &self.regularity().ok())?;
        s.end()
    }
}

/// One multigraded Betti number: `β_{i,m}` for the squarefree multidegree
/// supported on `support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedEntry {
    pub i: u32,
    pub support: VertexSet,
    pub count: u64,
}

/// Homology dimensions of the complex on one subset, dispatching isolated
/// vertices to the cone shortcut and bipartite induced subgraphs to the
/// reduction pipeline.
pub(crate) fn dims_of_local(
    lg: &LocalGraph,
    p: u32,
    face_cap: usize,
) -> std::result::Result<Vec<u64>, LocalError> {
    if lg.adj.contains(&0) {
        return Ok(Vec::new());
    }
    match lg.two_color() {
        Some(side_x) => bipartite_dims(lg, side_x, p, face_cap),
        None => plain_dims(lg, p, face_cap),
    }
}

fn local_graph_of_mask(adj: &[u64], mask: u64) -> LocalGraph {
    let k = mask.count_ones() as usize;
    let mut verts = [0usize; 64];
    let mut pos = [0u8; 64];
    let mut bits = mask;
    let mut idx = 0;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        verts[idx] = v;
        pos[v] = idx as u8;
        idx += 1;
    }
    let mut local_adj = vec![0u64; k];
    for (i, row) in local_adj.iter_mut().enumerate() {
        let mut b = adj[verts[i]] & mask;
        while b != 0 {
            let v = b.trailing_zeros() as usize;
            b &= b - 1;
            *row |= 1 << pos[v];
        }
    }
    LocalGraph {
        n: k,
        adj: local_adj,
    }
}

fn attach_mask_subset(err: LocalError, n: usize, mask: u64) -> Error {
    err.attach(&VertexSet::from_mask(n, mask))
}

/// Multigraded Betti numbers supported on `w`: the pairs `(i, β_{i,m})`
/// with nonzero value, where `m` is the squarefree multidegree of `w`.
/// A single homology computation serves every `i`.
pub fn multigraded_betti(
    g: &Graph,
    w: &VertexSet,
    p: u32,
    opts: &EngineOptions,
) -> Result<Vec<(u32, u64)>> {
    check_characteristic(p)?;
    if w.universe() != g.n_vertices() {
        return Err(Error::SubsetOutOfRange);
    }
    let j = w.len();
    if j < 2 {
        return Err(Error::EmptySubset);
    }
    let lg = LocalGraph::from_subset(g, w)?;
    let dims = dims_of_local(&lg, p, opts.face_cap).map_err(|e| e.attach(w))?;
    Ok(dims
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d > 0)
        .map(|(d, &dim)| ((j - d - 2) as u32, dim))
        .collect())
}

fn checked_vertex_count(g: &Graph, opts: &EngineOptions) -> Result<usize> {
    let n = g.n_vertices();
    let cap = opts.max_vertices.min(62);
    if n > cap {
        return Err(Error::TooManyVertices { n, cap });
    }
    Ok(n)
}

/// The full graded Betti diagram of the edge ideal of `g` over GF(p).
pub fn betti_diagram(g: &Graph, p: u32, opts: &EngineOptions) -> Result<BettiDiagram> {
    check_characteristic(p)?;
    let n = checked_vertex_count(g, opts)?;
    let adj = g.adjacency_masks();
    let face_cap = opts.face_cap;
    let total: u64 = 1u64 << n;
    let merged = (0..total)
        .into_par_iter()
        .try_fold(BTreeMap::<(u32, u32), u64>::new, |mut acc, mask| {
            let j = mask.count_ones() as usize;
            if j >= 2 && !has_isolated(&adj, mask) {
                let lg = local_graph_of_mask(&adj, mask);
                let dims =
                    dims_of_local(&lg, p, face_cap).map_err(|e| attach_mask_subset(e, n, mask))?;
                for (d, &dim) in dims.iter().enumerate() {
                    if dim > 0 {
                        debug_assert!(d <= j - 2);
                        *acc.entry(((j - d - 2) as u32, j as u32)).or_insert(0) += dim;
                    }
                }
            }
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;
    Ok(BettiDiagram {
        entries: merged,
        n_vertices: n,
        field_char: p,
    })
}

/// Every nonzero multigraded Betti number of the edge ideal: the sweep
/// behind the multigraded assertions and the depolarization fold-back.
pub fn multigraded_entries(
    g: &Graph,
    p: u32,
    opts: &EngineOptions,
) -> Result<Vec<MultigradedEntry>> {
    check_characteristic(p)?;
    let n = checked_vertex_count(g, opts)?;
    let adj = g.adjacency_masks();
    let face_cap = opts.face_cap;
    let total: u64 = 1u64 << n;
    let mut entries = (0..total)
        .into_par_iter()
        .try_fold(Vec::new, |mut acc, mask| {
            let j = mask.count_ones() as usize;
            if j >= 2 && !has_isolated(&adj, mask) {
                let lg = local_graph_of_mask(&adj, mask);
                let dims =
                    dims_of_local(&lg, p, face_cap).map_err(|e| attach_mask_subset(e, n, mask))?;
                for (d, &dim) in dims.iter().enumerate() {
                    if dim > 0 {
                        acc.push(MultigradedEntry {
                            i: (j - d - 2) as u32,
                            support: VertexSet::from_mask(n, mask),
                            count: dim,
                        });
                    }
                }
            }
            Ok(acc)
        })
        .try_reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            Ok(a)
        })?;
    entries.sort_by(|a, b| (a.i, &a.support).cmp(&(b.i, &b.support)));
    Ok(entries)
}

#[inline]
fn has_isolated(adj: &[u64], mask: u64) -> bool {
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & mask == 0 {
            return true;
        }
    }
    false
}
