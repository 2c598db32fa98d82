//! Reduced simplicial homology of independence complexes over a prime field.
//!
//! Faces of the independence complex of `G[W]` are the independent sets of
//! the induced subgraph; they are enumerated by recursive extension in a
//! fixed vertex order with adjacency-mask pruning and never materialized
//! beyond what the boundary ranks need. Ranks are computed by dense
//! Gaussian elimination: bit-packed rows over GF(2), `u16` rows for odd
//! characteristic. Boundary matrices are built dimension by dimension and
//! freed after use.
//!
//! `dims[0]` is always cross-checked against the component count of the
//! complex's 1-skeleton, which is the complement of `G[W]`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The independence complex of `graph[subset]`, by reference; faces are
/// the independent sets of the induced subgraph.
pub struct IndependenceComplexView<'g> {
    pub graph: &'g Graph,
    pub subset: VertexSet,
}

#[derive(Clone, Copy, Debug)]
pub struct HomologyOptions {
    /// Maximum number of nonempty faces before the computation is refused.
    pub face_cap: usize,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions { face_cap: 1 << 22 }
    }
}

/// Reduced homology dimensions over GF(p); entry `i` is `dim H̃_i`.
/// Trailing zeros are trimmed, and `H̃_{-1}` (zero for nonempty complexes)
/// is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyVector {
    dims: Vec<u64>,
    field_char: u32,
}

impl HomologyVector {
    pub(crate) fn new(mut dims: Vec<u64>, field_char: u32) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyVector { dims, field_char }
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.dims.get(i).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `Some((i, dim))` when exactly one degree is nonzero.
    pub fn single_nonzero(&self) -> Option<(usize, u64)> {
        let mut hit = None;
        for (i, &d) in self.dims.iter().enumerate() {
            if d > 0 {
                if hit.is_some() {
                    return None;
                }
                hit = Some((i, d));
            }
        }
        hit
    }
}

pub(crate) fn check_characteristic(p: u32) -> Result<()> {
    if !(2..1 << 16).contains(&p) || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(())
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Homology of the view over GF(p), by the full reduced chain complex.
pub fn reduced_homology(
    view: &IndependenceComplexView,
    p: u32,
    opts: &HomologyOptions,
) -> Result<HomologyVector> {
    check_characteristic(p)?;
    if view.subset.universe() != view.graph.n_vertices() {
        return Err(Error::SubsetOutOfRange);
    }
    if view.subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let lg = LocalGraph::from_subset(view.graph, &view.subset)?;
    let dims = plain_dims(&lg, p, opts.face_cap).map_err(|e| e.attach(&view.subset))?;
    Ok(HomologyVector::new(dims, p))
}

// ---------------------------------------------------------------------------
// Local graphs: the <= 64 vertex working representation.
// ---------------------------------------------------------------------------

/// An induced subgraph relabeled to `0..n` with single-word adjacency rows.
#[derive(Clone, Debug)]
pub(crate) struct LocalGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl LocalGraph {
    pub(crate) fn from_subset(g: &Graph, w: &VertexSet) -> Result<LocalGraph> {
        let verts: Vec<usize> = w.iter().collect();
        let n = verts.len();
        if n > 64 {
            return Err(Error::TooManyVertices { n, cap: 64 });
        }
        let mut adj = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(verts[i], verts[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(LocalGraph { n, adj })
    }

    pub(crate) fn full_mask(&self) -> u64 {
        mask_of(self.n)
    }

    /// Number of connected components of the edge-complement, which is the
    /// 1-skeleton of the independence complex.
    pub(crate) fn complement_components(&self) -> usize {
        let full = self.full_mask();
        let mut seen = 0u64;
        let mut comps = 0;
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            comps += 1;
            let mut frontier = 1u64 << v;
            let mut comp = frontier;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nbrs = !self.adj[u] & full & !(1 << u) & !comp;
                comp |= nbrs;
                frontier |= nbrs;
            }
            seen |= comp;
        }
        comps
    }

    /// Mask of one side of a bipartition of every component, or `None`
    /// when some component has an odd cycle.
    pub(crate) fn two_color(&self) -> Option<u64> {
        let mut color_known = 0u64;
        let mut color_x = 0u64;
        for v in 0..self.n {
            if color_known >> v & 1 == 1 {
                continue;
            }
            color_known |= 1 << v;
            color_x |= 1 << v;
            let mut frontier = 1u64 << v;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let u_in_x = color_x >> u & 1 == 1;
                let nbrs = self.adj[u];
                // Any already-colored neighbor on the same side kills it.
                let same_side = if u_in_x {
                    color_x
                } else {
                    color_known & !color_x
                };
                if nbrs & same_side != 0 {
                    return None;
                }
                let fresh = nbrs & !color_known;
                color_known |= fresh;
                if !u_in_x {
                    color_x |= fresh;
                }
                frontier |= fresh;
            }
        }
        Some(color_x)
    }
}

#[inline]
pub(crate) fn mask_of(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Internal error carrying no subset context yet.
#[derive(Debug)]
pub(crate) enum LocalError {
    FacesExceeded { cap: usize },
}

impl LocalError {
    pub(crate) fn attach(self, subset: &VertexSet) -> Error {
        match self {
            LocalError::FacesExceeded { cap } => Error::FaceLimitExceeded {
                subset: subset
                    .to_one_based()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                cap,
            },
        }
    }
}

/// Reduced homology dimensions of the independence complex of `lg`,
/// straight from boundary-matrix ranks. `dims[i] = f_i - rank ∂_i - rank ∂_{i+1}`.
pub(crate) fn plain_dims(
    lg: &LocalGraph,
    p: u32,
    face_cap: usize,
) -> std::result::Result<Vec<u64>, LocalError> {
    let faces = enumerate_faces(lg, face_cap)?;
    let top = faces.len(); // faces[k] holds the (k+1)-vertex faces
    if top == 0 {
        return Ok(Vec::new());
    }
    let mut dims = vec![0u64; top];
    // rank ∂_0 is the augmentation to the empty face.
    let mut rank_lower = 1usize;
    for d in 1..=top {
        let rank_d = if d < top {
            boundary_rank(&faces[d - 1], &faces[d], p)
        } else {
            0
        };
        let f = faces[d - 1].len();
        dims[d - 1] = (f - rank_lower - rank_d) as u64;
        rank_lower = rank_d;
    }
    // The 1-skeleton of the complex is the complement graph; its component
    // count must agree with the rank computation in degree zero.
    let comps = lg.complement_components();
    assert_eq!(
        dims[0] as usize,
        comps - 1,
        "H~_0 disagrees with 1-skeleton component count"
    );
    // Exact reduced Euler characteristic identity.
    let mut euler: i64 = -1;
    for (k, level) in faces.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        euler += sign * level.len() as i64;
    }
    let hom_euler: i64 = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum();
    assert_eq!(euler, hom_euler, "Euler characteristic mismatch");
    while dims.last() == Some(&0) {
        dims.pop();
    }
    Ok(dims)
}

/// Independent sets grouped by cardinality: `faces[k]` holds the sorted
/// masks with `k+1` vertices. Output-sensitive, no global subset sweep.
fn enumerate_faces(lg: &LocalGraph, cap: usize) -> std::result::Result<Vec<Vec<u64>>, LocalError> {
    let n = lg.n;
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut total = 0usize;
    // Stack of (face mask, candidates that stay independent and follow the
    // largest chosen vertex).
    let mut stack: Vec<(u64, u64, u32)> = Vec::with_capacity(n);
    for v in 0..n {
        let mask = 1u64 << v;
        let cand = !lg.adj[v] & mask_of(n) & !(mask_of(v + 1));
        stack.push((mask, cand, 1));
    }
    while let Some((mask, mut cand, card)) = stack.pop() {
        total += 1;
        if total > cap {
            return Err(LocalError::FacesExceeded { cap });
        }
        faces[card as usize - 1].push(mask);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let next_cand = cand & !lg.adj[v];
            stack.push((mask | (1 << v), next_cand, card + 1));
        }
    }
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    for level in &mut faces {
        level.sort_unstable();
    }
    Ok(faces)
}

/// Rank of the boundary map from the faces in `upper` (each `d+1` vertices)
/// to those in `lower`, over GF(p).
fn boundary_rank(lower: &[u64], upper: &[u64], p: u32) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index_of = |mask: u64| {
        lower
            .binary_search(&mask)
            .expect("face closed under boundary")
    };
    if p == 2 {
        let width = lower.len().div_ceil(64);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(upper.len());
        for &face in upper {
            let mut row = vec![0u64; width];
            let mut f = face;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                let sub = face & !(1u64 << v);
                let idx = index_of(sub);
                row[idx / 64] ^= 1 << (idx % 64);
            }
            rows.push(row);
        }
        rank_gf2(rows)
    } else {
        let mut rows: Vec<Vec<u16>> = Vec::with_capacity(upper.len());
        for &face in upper {
            let mut row = vec![0u16; lower.len()];
            let mut f = face;
            let mut k = 0u32;
            while f != 0 {
                let v = f.trailing_zeros();
                f &= f - 1;
                let sub = face & !(1u64 << v);
                let coeff = if k.is_multiple_of(2) {
                    1
                } else {
                    (p - 1) as u16
                };
                row[index_of(sub)] = coeff;
                k += 1;
            }
            rows.push(row);
        }
        rank_gfp(rows, p)
    }
}

fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows.iter_mut() {
        while let Some(lead) = leading_bit(row) {
            match pivots.binary_search_by_key(&lead, |(l, _)| *l) {
                Ok(i) => {
                    let (_, pivot) = &pivots[i];
                    for (a, b) in row.iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
                Err(i) => {
                    pivots.insert(i, (lead, std::mem::take(row)));
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (i, &w) in row.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

fn rank_gfp(mut rows: Vec<Vec<u16>>, p: u32) -> usize {
    let p = p as u64;
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and small.
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut pivots: Vec<(usize, Vec<u16>)> = Vec::new();
    for row in rows.iter_mut() {
        while let Some(lead) = row.iter().position(|&c| c != 0) {
            match pivots.binary_search_by_key(&lead, |(l, _)| *l) {
                Ok(i) => {
                    let (_, pivot) = &pivots[i];
                    let factor = row[lead] as u64 * inv(pivot[lead] as u64) % p;
                    for (a, &b) in row.iter_mut().zip(pivot).skip(lead) {
                        let sub = factor * b as u64 % p;
                        *a = ((*a as u64 + p - sub) % p) as u16;
                    }
                }
                Err(i) => {
                    pivots.insert(i, (lead, std::mem::take(row)));
                    break;
                }
            }
        }
    }
    pivots.len()
}
