//! Property tests: involutions, parity facts, and oracle equalities
//! against independent brute-force implementations.

use proptest::prelude::*;

use edge_ideals::bipartite::{bipartite_complement, detect_bipartition, BipartiteView};
use edge_ideals::bitset::VertexSet;
use edge_ideals::cycles::{
    count_induced_cycles, induced_matching_number, is_chordal, min_induced_cycle,
};
use edge_ideals::graph::Graph;
use edge_ideals::homology::{reduced_homology, HomologyOptions, IndependenceComplexView};
use edge_ideals::reduction::homology_with_reductions;
use edge_ideals::verify::graph_from_edge_mask;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let slots = n * (n - 1) / 2;
        let mask = if slots >= 64 {
            bits
        } else {
            bits & ((1 << slots) - 1)
        };
        graph_from_edge_mask(n, mask)
    })
}

/// Random bipartite graph, by construction: sides of size a and n-a.
fn arb_bipartite(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_flat_map(|(n, bits)| {
        (1..n).prop_map(move |a| {
            let b = n - a;
            let mut g = Graph::new(n).unwrap();
            for u in 0..a {
                for v in 0..b {
                    if bits >> ((u * b + v) % 64) & 1 == 1 {
                        g.add_edge(u, a + v).unwrap();
                    }
                }
            }
            g
        })
    })
}

/// Independent homology computation: filter-all-subsets face enumeration
/// and a plain row-echelon rank, sharing nothing with the production path.
#[allow(clippy::needless_range_loop)] // cardinality indexing mirrors the math
fn naive_homology(g: &Graph, p: u64) -> Vec<u64> {
    let n = g.n_vertices();
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 1u64..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if independent {
            faces[verts.len()].push(mask);
        }
    }
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    let top = faces.len() - 1; // largest face cardinality
    if top == 0 {
        return Vec::new();
    }
    let rank_of = |card: usize| -> usize {
        // Boundary from (card)-element faces to (card-1)-element faces.
        if card < 2 || faces[card].is_empty() {
            return if card == 1 && !faces[1].is_empty() {
                1
            } else {
                0
            };
        }
        let lower = &faces[card - 1];
        let mut matrix: Vec<Vec<u64>> = Vec::new();
        for &face in &faces[card] {
            let mut row = vec![0u64; lower.len()];
            let verts: Vec<usize> = (0..n).filter(|&v| face >> v & 1 == 1).collect();
            for (k, &v) in verts.iter().enumerate() {
                let sub = face & !(1 << v);
                let idx = lower.iter().position(|&f| f == sub).unwrap();
                row[idx] = if k % 2 == 0 { 1 } else { p - 1 };
            }
            matrix.push(row);
        }
        naive_rank(matrix, p)
    };
    let mut dims = Vec::new();
    for card in 1..=top {
        let f = faces[card].len() as i64;
        let r_low = rank_of(card) as i64;
        let r_high = if card < top {
            rank_of(card + 1) as i64
        } else {
            0
        };
        dims.push((f - r_low - r_high) as u64);
    }
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

#[allow(clippy::needless_range_loop)]
fn naive_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..m.len()).find(|&r| !m[r][col].is_multiple_of(p)) {
            Some(r) => r,
            None => continue,
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_multiple_of(p) {
                let factor = m[r][col] * inv % p;
                for c in col..cols {
                    m[r][c] = (m[r][c] + p * p - factor * m[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn production_homology(g: &Graph, p: u32) -> Vec<u64> {
    let view = IndependenceComplexView {
        graph: g,
        subset: VertexSet::full(g.n_vertices()),
    };
    reduced_homology(&view, p, &HomologyOptions::default())
        .unwrap()
        .dims()
        .to_vec()
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn bipartite_complement_is_an_involution(g in arb_bipartite(12)) {
        let view = detect_bipartition(&g).expect("constructed bipartite");
        let bc = bipartite_complement(&g, &view, true).unwrap();
        let bc_view =
            BipartiteView::new(&bc, view.side_x().to_vec(), view.side_y().to_vec()).unwrap();
        prop_assert_eq!(bipartite_complement(&bc, &bc_view, true).unwrap(), g);
    }

    #[test]
    fn bipartite_graphs_have_even_induced_cycles(g in arb_bipartite(12)) {
        if let Some(t) = min_induced_cycle(&g, 4) {
            prop_assert_eq!(t % 2, 0);
        }
    }

    #[test]
    fn cycle_counts_match_brute_force(g in arb_graph(9), t in 4usize..=9) {
        let oracle = {
            let n = g.n_vertices();
            let mut count = 0u64;
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
        };
        prop_assert_eq!(count_induced_cycles(&g, t), oracle);
    }

    #[test]
    fn chordality_matches_cycle_search(g in arb_graph(8)) {
        prop_assert_eq!(is_chordal(&g), min_induced_cycle(&g, 4).is_none());
    }

    #[test]
    fn induced_matching_matches_brute_force(g in arb_graph(7)) {
        prop_assert_eq!(
            induced_matching_number(&g),
            oracle_induced_matching(&g),
            "graph {:?}", g
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homology_matches_naive_oracle(g in arb_graph(7)) {
        for p in [2u32, 3] {
            prop_assert_eq!(
                production_homology(&g, p),
                naive_homology(&g, p as u64),
                "graph {:?} over GF({})", g, p
            );
        }
    }

    #[test]
    fn reductions_match_plain_homology_on_bipartite(g in arb_bipartite(12)) {
        let n = g.n_vertices();
        let view = detect_bipartition(&g).expect("constructed bipartite");
        let w_x = VertexSet::from_iter(n, view.side_x().iter().copied());
        let w_y = VertexSet::from_iter(n, view.side_y().iter().copied());
        let via_reductions =
            homology_with_reductions(&g, &w_x, &w_y, 2, &HomologyOptions::default()).unwrap();
        prop_assert_eq!(via_reductions.dims().to_vec(), production_homology(&g, 2));
    }
}

/// Mask-sweep oracle for the induced matching number, capped at 20 edges.
fn oracle_induced_matching(g: &Graph) -> usize {
    let edges = g.edges();
    let ne = edges.len();
    assert!(ne <= 21);
    let td_pair = |a: (usize, usize), b: (usize, usize)| -> bool {
        let ends = [(a.0, b.0), (a.0, b.1), (a.1, b.0), (a.1, b.1)];
        ends.iter().all(|&(p, q)| p != q && !g.has_edge(p, q))
    };
    let mut td_rows = vec![0u32; ne];
    for i in 0..ne {
        for j in 0..ne {
            if i != j && td_pair(edges[i], edges[j]) {
                td_rows[i] |= 1 << j;
            }
        }
    }
    let mut best = 0usize;
    for mask in 0u32..(1u32 << ne) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..ne)
            .filter(|&e| mask >> e & 1 == 1)
            .all(|e| mask & !(1 << e) & !td_rows[e] == 0);
        if ok {
            best = size;
        }
    }
    best
}

/// Diagram assembled from the naive homology of every subset: a full
/// independent route through Hochster's formula.
fn brute_force_diagram(g: &Graph, p: u32) -> Vec<((u32, u32), u64)> {
    let n = g.n_vertices();
    let mut entries = std::collections::BTreeMap::new();
    for mask in 1u64..(1 << n) {
        let w = VertexSet::from_mask(n, mask);
        let j = w.len();
        if j < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&w).unwrap();
        for (d, &dim) in naive_homology(&sub, p as u64).iter().enumerate() {
            if dim > 0 && j >= d + 2 {
                *entries.entry(((j - d - 2) as u32, j as u32)).or_insert(0) += dim;
            }
        }
    }
    entries.into_iter().collect()
}

#[test]
fn engine_diagram_matches_brute_force_hochster() {
    use edge_ideals::betti::{betti_diagram, EngineOptions};
    let graphs = vec![
        edge_ideals::graph::generators::cycle(6),
        edge_ideals::graph::generators::matching(3),
        graph_from_edge_mask(7, 0x1a2b3),
        graph_from_edge_mask(6, 0x5ace),
    ];
    for g in graphs {
        for p in [2u32, 3] {
            let engine = betti_diagram(&g, p, &EngineOptions::default()).unwrap();
            assert_eq!(
                engine.iter().collect::<Vec<_>>(),
                brute_force_diagram(&g, p),
                "graph {g:?} over GF({p})"
            );
        }
    }
}

#[test]
fn induced_matching_oracle_at_twenty_edges() {
    // A fixed 12-vertex graph with exactly 20 edges: three hexagons
    // sharing alternating chords.
    let mut g = Graph::new(12).unwrap();
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 0),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 10),
        (10, 11),
        (11, 6),
        (0, 6),
        (2, 8),
        (4, 10),
        (1, 7),
        (3, 9),
        (5, 11),
        (0, 3),
        (6, 9),
    ];
    for (u, v) in edges {
        g.add_edge(u, v).unwrap();
    }
    assert_eq!(g.edge_count(), 20);
    assert_eq!(induced_matching_number(&g), oracle_induced_matching(&g));
}
