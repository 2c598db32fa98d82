//! Bipartitions, biadjacency matrices and the bipartite complement.
//!
//! A [`BipartiteView`] pins a concrete bipartition `X ⊔ Y` of a graph's
//! vertex set together with the 0/1 biadjacency matrix. The bipartite
//! complement depends on the bipartition, which for a connected graph is
//! unique up to swapping sides; disconnected input is therefore rejected
//! unless the caller explicitly overrides.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteView {
    n_parent: usize,
    side_x: Vec<usize>,
    side_y: Vec<usize>,
    /// Row `i` holds the Y-indices adjacent to `side_x[i]` (universe = |Y|).
    biadjacency: Vec<VertexSet>,
}

impl BipartiteView {
    /// Build a view from explicit sides, checking that they partition the
    /// vertex set and that every edge crosses.
    pub fn new(g: &Graph, side_x: Vec<usize>, side_y: Vec<usize>) -> Result<Self> {
        let n = g.n_vertices();
        let xs = VertexSet::from_iter(n, side_x.iter().copied());
        let ys = VertexSet::from_iter(n, side_y.iter().copied());
        if xs.len() != side_x.len()
            || ys.len() != side_y.len()
            || !xs.is_disjoint(&ys)
            || xs.union(&ys) != VertexSet::full(n)
        {
            return Err(Error::NotBipartite);
        }
        let mut col_of = vec![usize::MAX; n];
        for (j, &y) in side_y.iter().enumerate() {
            col_of[y] = j;
        }
        let m = side_y.len();
        let mut biadjacency = Vec::with_capacity(side_x.len());
        for &x in &side_x {
            let mut row = VertexSet::empty(m);
            for v in g.neighbors(x).iter() {
                if col_of[v] == usize::MAX {
                    return Err(Error::NotBipartite); // edge inside side X
                }
                row.insert(col_of[v]);
            }
            biadjacency.push(row);
        }
        for &y in &side_y {
            if g.neighbors(y).iter().any(|v| col_of[v] != usize::MAX) {
                return Err(Error::NotBipartite); // edge inside side Y
            }
        }
        Ok(BipartiteView {
            n_parent: n,
            side_x,
            side_y,
            biadjacency,
        })
    }

    pub fn side_x(&self) -> &[usize] {
        &self.side_x
    }

    pub fn side_y(&self) -> &[usize] {
        &self.side_y
    }

    pub fn n_parent(&self) -> usize {
        self.n_parent
    }

    /// Biadjacency entry for row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.biadjacency[i].contains(j)
    }

    pub fn biadjacency_rows(&self) -> &[VertexSet] {
        &self.biadjacency
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.side_x.len(), self.side_y.len())
    }
}

/// Outcome of [`detect_bipartition`] on a non-bipartite graph: a closed
/// walk of odd length witnessing the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddWalk(pub Vec<usize>);

/// Two-color the graph by BFS. Roots are colored into side X, so for a
/// connected graph the result is canonical up to the choice of root.
pub fn detect_bipartition(g: &Graph) -> std::result::Result<BipartiteView, OddWalk> {
    let n = g.n_vertices();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Err(odd_walk_witness(&parent, v, u));
                }
            }
        }
    }
    let side_x = (0..n).filter(|&v| color[v] == 0).collect();
    let side_y = (0..n).filter(|&v| color[v] == 1).collect();
    Ok(BipartiteView::new(g, side_x, side_y).expect("BFS coloring is a valid bipartition"))
}

fn odd_walk_witness(parent: &[usize], v: usize, u: usize) -> OddWalk {
    // Walk both endpoints to the root; the concatenation closes an odd walk.
    let path_to_root = |mut w: usize| {
        let mut p = vec![w];
        while parent[w] != usize::MAX {
            w = parent[w];
            p.push(w);
        }
        p
    };
    let pv = path_to_root(v);
    let mut pu = path_to_root(u);
    pu.reverse();
    let mut walk = pu;
    walk.extend(pv);
    OddWalk(walk)
}

/// Bipartite complement with respect to `view`: the biadjacency matrix is
/// complemented entrywise. Requires `g` connected unless
/// `allow_disconnected` acknowledges that the bipartition may not be unique.
pub fn bipartite_complement(
    g: &Graph,
    view: &BipartiteView,
    allow_disconnected: bool,
) -> Result<Graph> {
    if view.n_parent() != g.n_vertices() {
        return Err(Error::NotBipartite);
    }
    // Re-validate the view against this graph; a stale view would silently
    // complement the wrong matrix.
    let checked = BipartiteView::new(g, view.side_x.clone(), view.side_y.clone())?;
    if checked.biadjacency != view.biadjacency {
        return Err(Error::NotBipartite);
    }
    if !allow_disconnected && !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut out = Graph::new(g.n_vertices())?;
    for (i, &x) in view.side_x.iter().enumerate() {
        for (j, &y) in view.side_y.iter().enumerate() {
            if !view.entry(i, j) {
                out.add_edge(x, y)?;
            }
        }
    }
    Ok(out)
}

/// Convenience: detect a bipartition and complement in one step.
pub fn bipartite_complement_auto(g: &Graph, allow_disconnected: bool) -> Result<Graph> {
    let view = detect_bipartition(g).map_err(|_| Error::NotBipartite)?;
    bipartite_complement(g, &view, allow_disconnected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn c6_bipartition_has_even_sides() {
        let view = detect_bipartition(&cycle(6)).unwrap();
        assert_eq!(view.side_x(), &[0, 2, 4]);
        assert_eq!(view.side_y(), &[1, 3, 5]);
    }

    #[test]
    fn c5_yields_odd_walk_witness() {
        let g = cycle(5);
        let err = detect_bipartition(&g).unwrap_err();
        let walk = &err.0;
        assert_eq!(walk.first(), walk.last(), "witness walk is closed");
        assert_eq!((walk.len() - 1) % 2, 1, "witness walk has odd length");
        for pair in walk.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]), "walk steps along edges");
        }
    }

    #[test]
    fn single_edge_bipartition() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let view = detect_bipartition(&g).unwrap();
        assert_eq!(view.side_x(), &[0]);
        assert_eq!(view.side_y(), &[1]);
    }

    #[test]
    fn c6_bipartite_complement_is_three_disjoint_edges() {
        let g = cycle(6);
        let view = detect_bipartition(&g).unwrap();
        let bc = bipartite_complement(&g, &view, false).unwrap();
        assert_eq!(bc.edge_count(), 3);
        assert_eq!(bc.components_non_isolated(), 3);
        assert!((0..6).all(|v| bc.degree(v) == 1));
        // Complementing back on the same view restores the 6-cycle.
        let bc_view =
            BipartiteView::new(&bc, view.side_x().to_vec(), view.side_y().to_vec()).unwrap();
        let back = bipartite_complement(&bc, &bc_view, true).unwrap();
        assert_eq!(crate::cycles::min_induced_cycle(&back, 4), Some(6));
    }

    #[test]
    fn complete_bipartite_complement_is_edgeless() {
        let g = complete_bipartite(3, 4);
        let view = detect_bipartition(&g).unwrap();
        let bc = bipartite_complement(&g, &view, false).unwrap();
        assert_eq!(bc.edge_count(), 0);
        assert_eq!(bc.n_vertices(), 7);
    }

    #[test]
    fn bipartite_complement_is_involution_on_c8() {
        let g = cycle(8);
        let view = detect_bipartition(&g).unwrap();
        let bc = bipartite_complement(&g, &view, false).unwrap();
        // Same sides remain valid for the complement even when it is
        // disconnected, hence the override on the way back.
        let view_bc =
            BipartiteView::new(&bc, view.side_x().to_vec(), view.side_y().to_vec()).unwrap();
        let back = bipartite_complement(&bc, &view_bc, true).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn disconnected_requires_override() {
        let g = matching_xy(3);
        let view = detect_bipartition(&g).unwrap();
        assert_eq!(
            bipartite_complement(&g, &view, false),
            Err(Error::NotConnected)
        );
        assert!(bipartite_complement(&g, &view, true).is_ok());
    }

    #[test]
    fn view_rejects_internal_edges() {
        let g = cycle(6);
        assert_eq!(
            BipartiteView::new(&g, vec![0, 1, 2], vec![3, 4, 5]),
            Err(Error::NotBipartite)
        );
    }
}
