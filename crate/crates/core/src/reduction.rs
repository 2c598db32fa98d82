//! Biadjacency reduction rules for independence complexes of bipartite
//! graphs.
//!
//! Five rules shrink the matrix while controlling homology:
//!
//! 1. an all-zero row or column means the complex is acyclic (a cone);
//! 2. a 1 that is alone in both its row and its column deletes that row
//!    and column and shifts every homology degree `i > 0` down by one;
//! 3. an all-ones line (when more than one of its kind exists) can be
//!    deleted without change;
//! 4. a line with a unique zero whose crossing line has a companion zero
//!    can be deleted without change;
//! 5. a line whose zero pattern is contained in another line's zero
//!    pattern can be deleted without change.
//!
//! Rules 3 and 4 are special cases of 5; they are scanned first so the
//! common cases stay cheap. The degree-zero answer is never routed through
//! rule 2: callers read it off the component count of the complex's
//! 1-skeleton, which keeps the `i > 0` restriction of rule 2 harmless.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{
    check_characteristic, mask_of, plain_dims, HomologyOptions, HomologyVector, LocalError,
    LocalGraph,
};

/// A 0/1 matrix with at most 64 rows and 64 columns, rows bit-packed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiadjacencyMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<u64>,
}

impl BiadjacencyMatrix {
    pub fn from_rows(rows: Vec<u64>, n_cols: usize) -> Self {
        assert!(n_cols <= 64 && rows.len() <= 64);
        assert!(rows.iter().all(|&r| r & !mask_of(n_cols) == 0));
        BiadjacencyMatrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_rows((0..m).map(|i| 1u64 << i).collect(), m)
    }

    pub fn ones(n: usize, m: usize) -> Self {
        Self::from_rows(vec![mask_of(m); n], m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn entry(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> c & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// The bipartite graph whose biadjacency matrix this is: rows become
    /// vertices `0..n_rows`, columns `n_rows..n_rows+n_cols`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n_rows + self.n_cols).unwrap();
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.entry(r, c) {
                    g.add_edge(r, self.n_rows + c).unwrap();
                }
            }
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Row,
    Col,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    IsolatedOne,
    AllOnes,
    UniqueZero,
    DominatedZeros,
}

/// One vertex deleted during reduction, identified by its side and its
/// index in the original matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovedVertex {
    pub side: Side,
    pub index: usize,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// A zero line was found: every reduced homology group vanishes.
    Acyclic,
    Reduced {
        matrix: BiadjacencyMatrix,
        /// Original indices of the surviving rows / columns.
        row_ids: Vec<usize>,
        col_ids: Vec<usize>,
        /// Number of rule-2 applications: `H~_i(original) = H~_{i-shift}(reduced)`
        /// for `i >= shift`, and `H~_i(original) = 0` for `0 < i < shift`.
        degree_shift: usize,
        removed: Vec<RemovedVertex>,
    },
}

/// Exhaustive application of the rules, in the order 1, 3, 4, 5, 2,
/// restarting after every hit. Any order gives the same homology; the
/// fixed order keeps the outcome and the shift bookkeeping deterministic.
pub fn reduce_biadjacency(matrix: &BiadjacencyMatrix) -> ReductionOutcome {
    assert!(
        matrix.n_rows > 0 && matrix.n_cols > 0,
        "matrix must be nonempty"
    );
    reduce_with_order(matrix, DEFAULT_ORDER)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RuleKind {
    ZeroLine,
    AllOnes,
    UniqueZero,
    DominatedZeros,
    IsolatedOne,
}

pub(crate) const DEFAULT_ORDER: [RuleKind; 5] = [
    RuleKind::ZeroLine,
    RuleKind::AllOnes,
    RuleKind::UniqueZero,
    RuleKind::DominatedZeros,
    RuleKind::IsolatedOne,
];

pub(crate) fn reduce_with_order(
    matrix: &BiadjacencyMatrix,
    order: [RuleKind; 5],
) -> ReductionOutcome {
    let mut st = ReduceState {
        rows: matrix.rows.clone(),
        n_cols: matrix.n_cols,
        row_ids: (0..matrix.n_rows).collect(),
        col_ids: (0..matrix.n_cols).collect(),
        removed: Vec::new(),
        shift: 0,
    };
    'outer: loop {
        for kind in order {
            match st.try_rule(kind) {
                StepResult::Acyclic => return ReductionOutcome::Acyclic,
                StepResult::Applied => continue 'outer,
                StepResult::NoMatch => {}
            }
        }
        break;
    }
    ReductionOutcome::Reduced {
        matrix: BiadjacencyMatrix::from_rows(st.rows, st.n_cols),
        row_ids: st.row_ids,
        col_ids: st.col_ids,
        degree_shift: st.shift,
        removed: st.removed,
    }
}

enum StepResult {
    Acyclic,
    Applied,
    NoMatch,
}

struct ReduceState {
    rows: Vec<u64>,
    n_cols: usize,
    row_ids: Vec<usize>,
    col_ids: Vec<usize>,
    removed: Vec<RemovedVertex>,
    shift: usize,
}

impl ReduceState {
    fn full(&self) -> u64 {
        mask_of(self.n_cols)
    }

    fn remove_row(&mut self, r: usize, rule: Rule) {
        self.rows.remove(r);
        let id = self.row_ids.remove(r);
        self.removed.push(RemovedVertex {
            side: Side::Row,
            index: id,
            rule,
        });
    }

    fn remove_col(&mut self, c: usize, rule: Rule) {
        let keep_low = (1u64 << c) - 1;
        for row in &mut self.rows {
            let high = if c + 1 >= 64 { 0 } else { *row >> (c + 1) };
            *row = (*row & keep_low) | (high << c);
        }
        self.n_cols -= 1;
        let id = self.col_ids.remove(c);
        self.removed.push(RemovedVertex {
            side: Side::Col,
            index: id,
            rule,
        });
    }

    /// Zero sets of the columns, as masks over row indices.
    fn col_zero_sets(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n_cols];
        for (r, &row) in self.rows.iter().enumerate() {
            let mut zeros = !row & self.full();
            while zeros != 0 {
                let c = zeros.trailing_zeros() as usize;
                zeros &= zeros - 1;
                out[c] |= 1 << r;
            }
        }
        out
    }

    fn try_rule(&mut self, kind: RuleKind) -> StepResult {
        let n = self.rows.len();
        let m = self.n_cols;
        let full = self.full();
        match kind {
            RuleKind::ZeroLine => {
                if self.rows.contains(&0) {
                    return StepResult::Acyclic;
                }
                let used = self.rows.iter().fold(0u64, |a, &r| a | r);
                if used != full {
                    return StepResult::Acyclic;
                }
                StepResult::NoMatch
            }
            RuleKind::AllOnes => {
                if n >= 2 {
                    if let Some(r) = self.rows.iter().position(|&row| row == full) {
                        self.remove_row(r, Rule::AllOnes);
                        return StepResult::Applied;
                    }
                }
                if m >= 2 {
                    let all = self.rows.iter().fold(full, |a, &r| a & r);
                    if all != 0 {
                        self.remove_col(all.trailing_zeros() as usize, Rule::AllOnes);
                        return StepResult::Applied;
                    }
                }
                StepResult::NoMatch
            }
            RuleKind::UniqueZero => {
                for r in 0..n {
                    let zeros = !self.rows[r] & full;
                    if zeros.count_ones() == 1 {
                        let c = zeros.trailing_zeros() as usize;
                        if (0..n).any(|r2| r2 != r && self.rows[r2] >> c & 1 == 0) {
                            self.remove_row(r, Rule::UniqueZero);
                            return StepResult::Applied;
                        }
                    }
                }
                let colz = self.col_zero_sets();
                for (c, &zeros) in colz.iter().enumerate() {
                    if zeros.count_ones() == 1 {
                        let r = zeros.trailing_zeros() as usize;
                        if (!self.rows[r] & full).count_ones() >= 2 {
                            self.remove_col(c, Rule::UniqueZero);
                            return StepResult::Applied;
                        }
                    }
                }
                StepResult::NoMatch
            }
            RuleKind::DominatedZeros => {
                for r in 0..n {
                    let zr = !self.rows[r] & full;
                    for r2 in 0..n {
                        if r2 != r {
                            let zr2 = !self.rows[r2] & full;
                            if zr & !zr2 == 0 {
                                self.remove_row(r, Rule::DominatedZeros);
                                return StepResult::Applied;
                            }
                        }
                    }
                }
                let colz = self.col_zero_sets();
                for c in 0..m {
                    for c2 in 0..m {
                        if c2 != c && colz[c] & !colz[c2] == 0 {
                            self.remove_col(c, Rule::DominatedZeros);
                            return StepResult::Applied;
                        }
                    }
                }
                StepResult::NoMatch
            }
            RuleKind::IsolatedOne => {
                // Keeping a final 1x1 base means the shift count stops at
                // the suspension bottom instead of emptying the matrix.
                if n == 1 && m == 1 {
                    return StepResult::NoMatch;
                }
                for r in 0..n {
                    if self.rows[r].count_ones() == 1 {
                        let c = self.rows[r].trailing_zeros() as usize;
                        let col_count = self.rows.iter().filter(|&&row| row >> c & 1 == 1).count();
                        if col_count == 1 {
                            self.remove_row(r, Rule::IsolatedOne);
                            self.remove_col(c, Rule::IsolatedOne);
                            self.shift += 1;
                            return StepResult::Applied;
                        }
                    }
                }
                StepResult::NoMatch
            }
        }
    }
}

/// Homology of the independence complex of the bipartite graph `lg` with
/// X-side `side_x`, computed through the reductions. Equal to the plain
/// boundary-rank computation in every degree.
pub(crate) fn bipartite_dims(
    lg: &LocalGraph,
    side_x: u64,
    p: u32,
    face_cap: usize,
) -> std::result::Result<Vec<u64>, LocalError> {
    let full = lg.full_mask();
    let side_y = full & !side_x;
    let comps0 = lg.complement_components() as u64 - 1;
    if side_x == 0 || side_y == 0 {
        // One empty side leaves a simplex, which is acyclic. The universe
        // being nonempty, its complement is complete hence connected.
        debug_assert_eq!(comps0, 0);
        return Ok(Vec::new());
    }
    let xs: Vec<usize> = BitsOf(side_x).collect();
    let ys: Vec<usize> = BitsOf(side_y).collect();
    let rows: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut row = 0u64;
            for (j, &y) in ys.iter().enumerate() {
                if lg.adj[x] >> y & 1 == 1 {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect();
    let matrix = BiadjacencyMatrix::from_rows(rows, ys.len());
    match reduce_biadjacency(&matrix) {
        ReductionOutcome::Acyclic => {
            assert_eq!(comps0, 0, "acyclic complex must be connected");
            Ok(Vec::new())
        }
        ReductionOutcome::Reduced {
            matrix,
            degree_shift,
            ..
        } => {
            let terminal = terminal_local_graph(&matrix);
            let reduced = plain_dims(&terminal, p, face_cap)?;
            let mut out = vec![0u64; degree_shift + reduced.len() + 1];
            out[0] = comps0;
            if degree_shift == 0 {
                assert_eq!(
                    reduced.first().copied().unwrap_or(0),
                    comps0,
                    "deletion rules must preserve degree zero"
                );
                out[1..reduced.len().max(1)].copy_from_slice(reduced.get(1..).unwrap_or(&[]));
            } else {
                assert_eq!(
                    comps0, 0,
                    "a shifted complex is a suspension, hence connected"
                );
                out[degree_shift..degree_shift + reduced.len()].copy_from_slice(&reduced);
            }
            while out.last() == Some(&0) {
                out.pop();
            }
            Ok(out)
        }
    }
}

fn terminal_local_graph(matrix: &BiadjacencyMatrix) -> LocalGraph {
    let n = matrix.n_rows() + matrix.n_cols();
    let mut adj = vec![0u64; n];
    for r in 0..matrix.n_rows() {
        for c in 0..matrix.n_cols() {
            if matrix.entry(r, c) {
                let cv = matrix.n_rows() + c;
                adj[r] |= 1 << cv;
                adj[cv] |= 1 << r;
            }
        }
    }
    LocalGraph { n, adj }
}

struct BitsOf(u64);

impl Iterator for BitsOf {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Homology of the independence complex of `graph[w_x ∪ w_y]`, where the
/// two sets supply a bipartition of the subset, computed through the
/// reduction rules.
pub fn homology_with_reductions(
    graph: &Graph,
    w_x: &VertexSet,
    w_y: &VertexSet,
    p: u32,
    opts: &HomologyOptions,
) -> Result<HomologyVector> {
    check_characteristic(p)?;
    let n = graph.n_vertices();
    if w_x.universe() != n || w_y.universe() != n {
        return Err(Error::SubsetOutOfRange);
    }
    if !w_x.is_disjoint(w_y) {
        return Err(Error::NotBipartite);
    }
    let union = w_x.union(w_y);
    if union.is_empty() {
        return Err(Error::EmptySubset);
    }
    for side in [w_x, w_y] {
        for v in side.iter() {
            if graph.neighbors(v).intersects(side) {
                return Err(Error::NotBipartite);
            }
        }
    }
    let lg = LocalGraph::from_subset(graph, &union)?;
    let verts: Vec<usize> = union.iter().collect();
    let mut side_x = 0u64;
    for (i, &v) in verts.iter().enumerate() {
        if w_x.contains(v) {
            side_x |= 1 << i;
        }
    }
    let dims = bipartite_dims(&lg, side_x, p, opts.face_cap).map_err(|e| e.attach(&union))?;
    Ok(HomologyVector::new(dims, p))
}
