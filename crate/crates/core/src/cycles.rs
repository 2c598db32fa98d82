//! Induced-cycle detection, chordality and the induced matching number.
//!
//! A cycle here always has length at least 4 (degree-two, connected,
//! \#vertices = length), and "chordal" means no induced cycle at all under
//! that convention. Cycle isomorphism is decided by the cardinality +
//! connected + all-degrees-two criterion, never by a generic isomorphism
//! engine.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// True iff the graph has no induced cycle of length >= 4, decided by a
/// lexicographic-BFS perfect-elimination-ordering search.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n_vertices();
    if n <= 3 {
        return true;
    }
    let order = lex_bfs(g);
    is_perfect_elimination(g, &order)
}

/// Lexicographic BFS visit order via partition refinement, smallest vertex
/// first for reproducibility.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = buckets.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            buckets.remove(0);
        }
        order.push(v);
        let nv = g.neighbors(v);
        let mut refined = Vec::with_capacity(buckets.len() * 2);
        for bucket in buckets.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                bucket.into_iter().partition(|&u| nv.contains(u));
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        buckets = refined;
    }
    order
}

/// Rose–Tarjan–Lueker test: the reverse of a LexBFS order is a perfect
/// elimination ordering iff the graph is chordal.
fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n_vertices();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut earlier = VertexSet::empty(n);
    for &v in order {
        // Neighbors visited before v are eliminated after it; all of them
        // minus the latest-visited one must lie in that one's neighborhood.
        let s = g.neighbors(v).intersection(&earlier);
        if let Some(u) = s.iter().max_by_key(|&w| pos[w]) {
            let mut rest = s;
            rest.remove(u);
            if !rest.is_subset(g.neighbors(u)) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

/// Smallest `t >= min_len` such that some vertex subset induces a cycle of
/// length `t`; `None` when the graph has no induced cycle that long.
pub fn min_induced_cycle(g: &Graph, min_len: usize) -> Option<usize> {
    assert!(min_len >= 4, "cycles have length at least 4");
    let n = g.n_vertices();
    for t in min_len..=n {
        let mut found = false;
        let full_paths = enumerate_induced_cycles(g, t, &mut |_| {
            found = true;
            false // first hit is the answer
        });
        if found {
            return Some(t);
        }
        if full_paths == 0 {
            // No induced path on t vertices at all, so no longer cycle
            // can exist either.
            return None;
        }
    }
    None
}

/// Number of vertex subsets inducing a cycle of length exactly `t`
/// (subsets counted, not traversals).
pub fn count_induced_cycles(g: &Graph, t: usize) -> u64 {
    assert!(t >= 4);
    let mut count = 0u64;
    enumerate_induced_cycles(g, t, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Like [`count_induced_cycles`] but also returns up to `cap` witness
/// subsets, sorted. The count is always exact.
pub fn induced_cycle_subsets(g: &Graph, t: usize, cap: usize) -> (u64, Vec<VertexSet>) {
    assert!(t >= 4);
    let n = g.n_vertices();
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    enumerate_induced_cycles(g, t, &mut |cycle| {
        count += 1;
        if witnesses.len() < cap {
            witnesses.push(VertexSet::from_iter(n, cycle.iter().copied()));
        }
        true
    });
    witnesses.sort();
    (count, witnesses)
}

/// Largest `s` such that some `2s` vertices induce `s` disjoint edges,
/// computed by branch-and-bound over the edge conflict structure.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let ne = edges.len();
    if ne == 0 {
        return 0;
    }
    // Edges e, f conflict when they cannot both belong to an induced
    // matching: they share a vertex or some edge of g joins them.
    let words = ne.div_ceil(64);
    let mut conflict = vec![vec![0u64; words]; ne];
    for a in 0..ne {
        for b in a + 1..ne {
            let (u1, v1) = edges[a];
            let (u2, v2) = edges[b];
            let clash = u1 == u2
                || u1 == v2
                || v1 == u2
                || v1 == v2
                || g.has_edge(u1, u2)
                || g.has_edge(u1, v2)
                || g.has_edge(v1, u2)
                || g.has_edge(v1, v2);
            if clash {
                conflict[a][b / 64] |= 1 << (b % 64);
                conflict[b][a / 64] |= 1 << (a % 64);
            }
        }
    }
    let mut alive = vec![u64::MAX; words];
    let rem = ne % 64;
    if rem != 0 {
        alive[words - 1] = (1u64 << rem) - 1;
    }
    let mut best = 0;
    mis_branch(&conflict, &mut alive, 0, &mut best);
    best
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn mis_branch(conflict: &[Vec<u64>], alive: &mut [u64], current: usize, best: &mut usize) {
    let remaining = popcount(alive);
    if current + remaining <= *best {
        return;
    }
    if remaining == 0 {
        *best = (*best).max(current);
        return;
    }
    // Pivot on the edge with the most conflicts among the alive ones.
    let mut pivot = usize::MAX;
    let mut max_deg = 0usize;
    for (w, &bits) in alive.iter().enumerate() {
        let mut b = bits;
        while b != 0 {
            let e = w * 64 + b.trailing_zeros() as usize;
            b &= b - 1;
            let deg = conflict[e]
                .iter()
                .zip(alive.iter())
                .map(|(c, a)| (c & a).count_ones() as usize)
                .sum();
            if pivot == usize::MAX || deg > max_deg {
                max_deg = deg;
                pivot = e;
            }
        }
    }
    let e = pivot;
    // Include the pivot.
    let mut incl: Vec<u64> = alive
        .iter()
        .zip(conflict[e].iter())
        .map(|(a, c)| a & !c)
        .collect();
    incl[e / 64] &= !(1 << (e % 64));
    mis_branch(conflict, &mut incl, current + 1, best);
    // Exclude it.
    let saved = alive[e / 64];
    alive[e / 64] &= !(1 << (e % 64));
    mis_branch(conflict, alive, current, best);
    alive[e / 64] = saved;
}

// ---------------------------------------------------------------------------
// Induced-cycle enumeration: extend induced paths from their smallest vertex.
// ---------------------------------------------------------------------------

/// Enumerates each induced `t`-cycle exactly once and feeds the vertex list
/// to `emit`; enumeration stops early when `emit` returns false. Returns
/// the number of induced paths that reached `t` vertices (used by the
/// shortest-cycle search to cut off hopeless lengths).
#[allow(clippy::needless_range_loop)] // v0 is a vertex id, not a position
fn enumerate_induced_cycles(g: &Graph, t: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> u64 {
    let n = g.n_vertices();
    if t > n {
        return 0;
    }
    if n <= 64 {
        let adj = g.adjacency_masks();
        let mut walker = Walker {
            adj: &adj,
            t,
            path: Vec::with_capacity(t),
            full_paths: 0,
            stop: false,
            emit,
        };
        for v0 in 0..n {
            if walker.stop {
                break;
            }
            walker.path.clear();
            walker.path.push(v0);
            let firsts = above(adj[v0], v0);
            for p1 in Bits(firsts) {
                if walker.stop {
                    break;
                }
                walker.path.truncate(1);
                walker.path.push(p1);
                walker.extend(0);
            }
        }
        walker.full_paths
    } else {
        let mut walker = WideWalker {
            g,
            t,
            path: Vec::with_capacity(t),
            full_paths: 0,
            stop: false,
            emit,
        };
        for v0 in 0..n {
            if walker.stop {
                break;
            }
            for p1 in g.neighbors(v0).iter().filter(|&u| u > v0) {
                if walker.stop {
                    break;
                }
                walker.path.clear();
                walker.path.push(v0);
                walker.path.push(p1);
                walker.extend(VertexSet::empty(n));
            }
        }
        walker.full_paths
    }
}

#[inline]
fn above(mask: u64, v: usize) -> u64 {
    if v + 1 >= 64 {
        0
    } else {
        mask & !((1u64 << (v + 1)) - 1)
    }
}

struct Bits(u64);

impl Iterator for Bits {
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

struct Walker<'a> {
    adj: &'a [u64],
    t: usize,
    path: Vec<usize>,
    full_paths: u64,
    stop: bool,
    emit: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl Walker<'_> {
    /// `ban` is the union of neighborhoods of the interior path vertices
    /// `p_1..p_{k-1}`; path vertices themselves never reappear because each
    /// is adjacent to its predecessor.
    fn extend(&mut self, ban: u64) {
        let last = *self.path.last().unwrap();
        let v0 = self.path[0];
        let p1 = self.path[1];
        if self.path.len() == self.t - 1 {
            self.full_paths += 1;
            // Close the cycle: adjacent to both ends, no interior chords,
            // and larger than p1 so each cycle is produced once.
            let cand = above(self.adj[last] & self.adj[v0] & !ban, p1);
            for f in Bits(cand) {
                self.path.push(f);
                let keep = (self.emit)(&self.path);
                self.path.pop();
                if !keep {
                    self.stop = true;
                    return;
                }
            }
        } else {
            let cand = above(self.adj[last] & !ban & !self.adj[v0], v0);
            let next_ban = ban | self.adj[last];
            for u in Bits(cand) {
                self.path.push(u);
                self.extend(next_ban);
                self.path.pop();
                if self.stop {
                    return;
                }
            }
        }
    }
}

/// Same walk over multi-word sets, for graphs above the 64-vertex fast path.
struct WideWalker<'a> {
    g: &'a Graph,
    t: usize,
    path: Vec<usize>,
    full_paths: u64,
    stop: bool,
    emit: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl WideWalker<'_> {
    fn extend(&mut self, ban: VertexSet) {
        let last = *self.path.last().unwrap();
        let v0 = self.path[0];
        let p1 = self.path[1];
        let nbrs = self.g.neighbors(last);
        if self.path.len() == self.t - 1 {
            self.full_paths += 1;
            let cand = nbrs.intersection(self.g.neighbors(v0)).difference(&ban);
            for f in cand.iter().filter(|&f| f > p1) {
                self.path.push(f);
                let keep = (self.emit)(&self.path);
                self.path.pop();
                if !keep {
                    self.stop = true;
                    return;
                }
            }
        } else {
            let cand = nbrs.difference(&ban).difference(self.g.neighbors(v0));
            let next_ban = ban.union(nbrs);
            for u in cand.iter().filter(|&u| u > v0) {
                self.path.push(u);
                self.extend(next_ban.clone());
                self.path.pop();
                if self.stop {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::Graph;

    /// Oracle: check every `t`-subset with the degree-2 + connected criterion.
    pub(crate) fn oracle_count_cycles(g: &Graph, t: usize) -> u64 {
        let n = g.n_vertices();
        let mut count = 0;
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != t {
                continue;
            }
            let w = VertexSet::from_mask(n, mask);
            let h = g.induced_subgraph(&w).unwrap();
            if h.is_connected() && (0..t).all(|v| h.degree(v) == 2) {
                count += 1;
            }
        }
        count
    }

    fn oracle_min_cycle(g: &Graph, min_len: usize) -> Option<usize> {
        (min_len..=g.n_vertices()).find(|&t| oracle_count_cycles(g, t) > 0)
    }

    fn oracle_induced_matching(g: &Graph) -> usize {
        let edges = g.edges();
        let ne = edges.len();
        assert!(ne <= 20);
        let td = |a: (usize, usize), b: (usize, usize)| -> bool {
            let (u1, v1) = a;
            let (u2, v2) = b;
            ![(u1, u2), (u1, v2), (v1, u2), (v1, v2)]
                .iter()
                .any(|&(p, q)| p == q || g.has_edge(p, q))
        };
        let mut best = 0usize;
        for mask in 0u32..(1 << ne) {
            let chosen: Vec<_> = (0..ne).filter(|&e| mask >> e & 1 == 1).collect();
            if chosen.len() <= best {
                continue;
            }
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| td(edges[a], edges[b])));
            if ok {
                best = chosen.len();
            }
        }
        best
    }

    #[test]
    fn trees_are_chordal() {
        assert!(is_chordal(&path(7)));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_chordal(&star));
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(!is_chordal(&cycle(4)));
    }

    #[test]
    fn complement_of_c6_chordality_matches_exhaustive_search() {
        let g = cycle(6).complement();
        assert_eq!(is_chordal(&g), oracle_min_cycle(&g, 4).is_none());
    }

    #[test]
    fn min_cycle_of_c5() {
        assert_eq!(min_induced_cycle(&cycle(5), 4), Some(5));
    }

    #[test]
    fn min_cycle_none_on_chordal() {
        assert_eq!(min_induced_cycle(&complete(6), 4), None);
        assert_eq!(min_induced_cycle(&path(6), 4), None);
    }

    #[test]
    fn cycle_counts_on_small_fixtures() {
        assert_eq!(count_induced_cycles(&cycle(5), 5), 1);
        assert_eq!(count_induced_cycles(&cycle(6), 6), 1);
        assert_eq!(count_induced_cycles(&cycle(6), 4), 0);
        // Each pair of X-vertices and pair of Y-vertices spans an induced C_4.
        assert_eq!(count_induced_cycles(&complete_bipartite(3, 3), 4), 9);
        assert_eq!(oracle_count_cycles(&complete_bipartite(3, 3), 4), 9);
    }

    #[test]
    fn counts_match_oracle_on_assorted_graphs() {
        let graphs = vec![
            cycle(7),
            cycle(8),
            complete_bipartite(2, 4),
            cycle(6).complement(),
            cycle(7).complement(),
            even_cycle_xy(4),
            matching(3).complement(),
        ];
        for g in graphs {
            for t in 4..=g.n_vertices().min(8) {
                assert_eq!(
                    count_induced_cycles(&g, t),
                    oracle_count_cycles(&g, t),
                    "graph {g:?}, t={t}"
                );
            }
        }
    }

    #[test]
    fn chordal_matches_cycle_search_exhaustively_on_five_vertices() {
        for mask in 0u64..(1 << 10) {
            let mut g = Graph::new(5).unwrap();
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    bit += 1;
                }
            }
            assert_eq!(
                is_chordal(&g),
                min_induced_cycle(&g, 4).is_none(),
                "mask {mask:#b}"
            );
        }
    }

    #[test]
    fn induced_matching_values() {
        assert_eq!(induced_matching_number(&matching(3)), 3);
        assert_eq!(induced_matching_number(&complete(5)), 1);
        assert_eq!(induced_matching_number(&complete(2)), 1);
        assert_eq!(induced_matching_number(&Graph::new(4).unwrap()), 0);
        assert_eq!(induced_matching_number(&path(6)), 2);
    }

    #[test]
    fn induced_matching_of_cycle_complements() {
        // The bipartite complement of C_6 is 3K_2; for longer even cycles
        // the induced matching number drops to 2.
        for s in 3..=6 {
            let g = crate::bipartite::bipartite_complement_auto(&even_cycle_xy(s), false).unwrap();
            let expected = if s == 3 { 3 } else { 2 };
            assert_eq!(induced_matching_number(&g), expected, "s={s}");
        }
    }

    #[test]
    fn induced_matching_matches_oracle() {
        let graphs = vec![
            cycle(7),
            cycle(8),
            path(8),
            complete_bipartite(3, 3),
            even_cycle_xy(4),
            cycle(6).complement(),
        ];
        for g in graphs {
            assert_eq!(
                induced_matching_number(&g),
                oracle_induced_matching(&g),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn witnesses_are_capped_but_count_is_exact() {
        let g = complete_bipartite(3, 3);
        let (count, wit) = induced_cycle_subsets(&g, 4, 4);
        assert_eq!(count, 9);
        assert_eq!(wit.len(), 4);
        for w in &wit {
            let h = g.induced_subgraph(w).unwrap();
            assert!(h.is_connected() && (0..4).all(|v| h.degree(v) == 2));
        }
    }

    #[test]
    fn wide_graph_path_agrees() {
        // A 70-cycle exercises the multi-word walker.
        let g = cycle(70);
        assert_eq!(min_induced_cycle(&g, 4), Some(70));
        assert_eq!(count_induced_cycles(&g, 70), 1);
        assert!(!is_chordal(&g));
    }

    #[test]
    fn decision_procedures_scale_to_thousands_of_vertices() {
        let g = path(2000);
        assert!(is_chordal(&g));
        assert!(crate::bipartite::detect_bipartition(&g).is_ok());
        assert_eq!(g.complement().n_vertices(), 2000);
        assert!(crate::graph::Graph::new(10_001).is_err());
    }
}
