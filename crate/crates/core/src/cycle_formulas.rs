//! Closed combinatorial formulas for the Betti diagram of the edge ideal
//! of the bipartite complement of an even cycle `C_{2s}`, `s >= 3`.
//!
//! The diagram has exactly three populated rows: the linear strand
//! `β_{j-2,j}` for `2 <= j <= s-1`, the second row `β_{j-3,j}` for
//! `4 <= j <= 2s-2`, and a single 1 at `β_{2s-4,2s}`, so the regularity
//! is 4. The second row aggregates subset counts `w(j,m,a)` of the cycle:
//! proper subsets of size `j` inducing `a` isolated vertices and `m`
//! larger components.
//!
//! All arithmetic runs over arbitrary-precision integers; binomials
//! vanish outside `0 <= k <= n`, which is what makes the stated summation
//! ranges safe, and the rational factors `s/c` and `2s/m` divide their
//! summands exactly (asserted on every evaluation).

use num_bigint::BigUint;
use num_traits::Zero;

use crate::betti::BettiDiagram;
use crate::bitset::VertexSet;
use crate::graph::{generators, Graph};

/// Summation-index ranges of the closed formulas.
#[derive(Clone, Copy, Debug)]
pub struct CycleParams {
    pub s: usize,
}

impl CycleParams {
    pub fn new(s: usize) -> Self {
        assert!(s >= 3, "the cycle C_{{2s}} needs s >= 3");
        CycleParams { s }
    }

    pub fn t(&self) -> usize {
        2 * self.s
    }

    /// Internal degrees populating the linear strand.
    pub fn first_row_degrees(&self) -> std::ops::RangeInclusive<usize> {
        2..=self.s - 1
    }

    /// Internal degrees populating the second row.
    pub fn second_row_degrees(&self) -> std::ops::RangeInclusive<usize> {
        4..=2 * self.s - 2
    }

    /// Non-isolated component counts contributing at degree `j`.
    pub fn block_counts(j: usize) -> std::ops::RangeInclusive<usize> {
        2..=j / 2
    }

    /// Isolated-vertex counts compatible with `j` and `m`.
    pub fn isolated_counts(j: usize, m: usize) -> std::ops::RangeInclusive<usize> {
        0..=j.saturating_sub(2 * m)
    }
}

/// `C(n, k)` with the vanishing convention: 0 unless `0 <= k <= n`.
fn binom(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc = acc * BigUint::from((n - k + i) as u64) / BigUint::from(i as u64);
    }
    acc
}

fn to_u64(big: BigUint) -> u64 {
    u64::try_from(big).expect("Betti count exceeds u64; s is far beyond the supported range")
}

/// `β_{j-2,j}` of `I(C_{2s}^bc)`. Zero for every `j >= s` and `j < 2`.
pub fn first_row(s: usize, j: usize) -> u64 {
    assert!(s >= 3);
    let (s_i, j_i) = (s as i64, j as i64);
    let mut total = BigUint::zero();
    for k in 1..j_i {
        for c in 1..=k {
            let numerator = BigUint::from(s as u64)
                * binom(k - 1, c - 1)
                * binom(s_i - k - 1, c - 1)
                * binom(s_i - k - c, j_i - k);
            let c_big = BigUint::from(c as u64);
            assert!(
                (&numerator % &c_big).is_zero(),
                "s/c factor must divide the summand (s={s}, j={j}, k={k}, c={c})"
            );
            total += numerator / c_big;
        }
    }
    to_u64(total)
}

/// Number of proper subsets `W` of `V(C_{2s})` with `|W| = j`, exactly `a`
/// isolated vertices and `m` components that are not isolated vertices.
pub fn count_subsets_by_components(s: usize, j: usize, m: usize, a: usize) -> u64 {
    assert!(s >= 3 && m >= 1);
    let t = 2 * s as i64;
    let (j_i, m_i, a_i) = (j as i64, m as i64, a as i64);
    let numerator = BigUint::from(t as u64)
        * binom(t - j_i - m_i, a_i)
        * binom(j_i - m_i - a_i - 1, m_i - 1)
        * binom(t - j_i - 1, m_i - 1);
    let m_big = BigUint::from(m as u64);
    assert!(
        (&numerator % &m_big).is_zero(),
        "2s/m factor must divide the subset count (s={s}, j={j}, m={m}, a={a})"
    );
    to_u64(numerator / m_big)
}

/// `β_{j-3,j}` of `I(C_{2s}^bc)`: each subset with `m` non-isolated
/// components contributes `m-1`. Zero for every `j >= 2s-1` and `j < 4`.
pub fn second_row(s: usize, j: usize) -> u64 {
    assert!(s >= 3);
    let mut total = 0u64;
    for m in CycleParams::block_counts(j) {
        for a in CycleParams::isolated_counts(j, m) {
            total += (m as u64 - 1) * count_subsets_by_components(s, j, m, a);
        }
    }
    total
}

/// The complete closed-form Betti diagram of `I(C_{2s}^bc)`: regularity 4,
/// with the single fourth-row entry `β_{2s-4,2s} = 1`.
pub fn full_diagram_cbc(s: usize) -> BettiDiagram {
    let params = CycleParams::new(s);
    let mut d = BettiDiagram::new(2 * s, 2);
    for j in params.first_row_degrees() {
        d.add(j as u32 - 2, j as u32, first_row(s, j));
    }
    for j in params.second_row_degrees() {
        d.add(j as u32 - 3, j as u32, second_row(s, j));
    }
    d.add(2 * s as u32 - 4, 2 * s as u32, 1);
    d
}

/// The neighborhood identity on the cycle: for nonempty proper `w_x`
/// (positions within the X side), `|N_{C_{2s}}(W_X)|` equals
/// `|W_X| + #components(C_X[W_X])` where `C_X` is the cycle the X side
/// inherits from squaring.
pub fn neighborhood_identity_check(s: usize, w_x: &VertexSet) -> bool {
    assert!(s >= 3);
    assert_eq!(w_x.universe(), s, "w_x indexes positions along the X side");
    assert!(!w_x.is_empty() && w_x.len() < s);
    let cycle_2s = generators::even_cycle_xy(s);
    let w_global = VertexSet::from_iter(2 * s, w_x.iter());
    let neighborhood = cycle_2s.neighborhood_of_set(&w_global);
    let c_x: Graph = generators::cycle(s);
    let comps = c_x
        .induced_subgraph(w_x)
        .expect("w_x lives on the X cycle")
        .connected_components()
        .len();
    neighborhood.len() == w_x.len() + comps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::bipartite_complement_auto;
    use crate::graph::generators::even_cycle_xy;

    /// Literal transcription of the displayed second-row formula
    /// `Σ_m t (m-1)/m C(t-j-1, m-1) Σ_a C(j-m-a-1, m-1) C(t-j-m, a)`,
    /// kept test-only; the shipped `second_row` uses the `w(j,m,a)` form.
    fn second_row_display_form(s: usize, j: usize) -> u64 {
        let t = 2 * s as i64;
        let j_i = j as i64;
        let mut total = BigUint::zero();
        for m in 2..=(j / 2) as i64 {
            let mut inner = BigUint::zero();
            let mut a = 0;
            while a <= j_i - 2 * m {
                inner += binom(j_i - m - a - 1, m - 1) * binom(t - j_i - m, a);
                a += 1;
            }
            let numerator = BigUint::from(t as u64)
                * BigUint::from((m - 1) as u64)
                * binom(t - j_i - 1, m - 1)
                * inner;
            let m_big = BigUint::from(m as u64);
            assert!((&numerator % &m_big).is_zero());
            total += numerator / m_big;
        }
        u64::try_from(total).unwrap()
    }

    /// Oracle for `w(j,m,a)`: direct enumeration of the cycle's subsets.
    fn oracle_subset_count(s: usize, j: usize, m: usize, a: usize) -> u64 {
        let g = even_cycle_xy(s);
        let n = 2 * s;
        let mut count = 0u64;
        for mask in 1u64..(1 << n) - 1 {
            if mask.count_ones() as usize != j {
                continue;
            }
            let w = VertexSet::from_mask(n, mask);
            let h = g.induced_subgraph(&w).unwrap();
            let comps = h.connected_components();
            let isolated = comps.iter().filter(|c| c.len() == 1).count();
            let non_isolated = comps.len() - isolated;
            if isolated == a && non_isolated == m {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn first_row_fixed_values() {
        assert_eq!(first_row(3, 2), 3);
        assert_eq!(first_row(4, 3), 8);
        assert_eq!(first_row(4, 4), 0);
        assert_eq!(first_row(4, 2), 8);
    }

    #[test]
    fn first_row_vanishes_from_degree_s() {
        for s in 3..=7 {
            for j in s..=2 * s + 2 {
                assert_eq!(first_row(s, j), 0, "s={s}, j={j}");
            }
        }
    }

    #[test]
    fn first_row_symmetry_is_the_edge_count() {
        for s in 3..=8 {
            let edges = (s * (s - 2)) as u64;
            assert_eq!(first_row(s, 2), edges, "s={s}");
            assert_eq!(first_row(s, s - 1), edges, "s={s}");
        }
    }

    #[test]
    fn second_row_fixed_values() {
        assert_eq!(second_row(4, 4), 12);
        assert_eq!(second_row(4, 6), 12);
        assert_eq!(second_row(3, 4), 3);
        assert_eq!(second_row(4, 5), 24);
    }

    #[test]
    fn second_row_symmetry() {
        for s in 3..=8 {
            let v = (s * (2 * s - 5)) as u64;
            assert_eq!(second_row(s, 4), v, "s={s}");
            assert_eq!(second_row(s, 2 * s - 2), v, "s={s}");
        }
    }

    #[test]
    fn second_row_vanishes_from_degree_2s_minus_1() {
        for s in 3..=7 {
            for j in 2 * s - 1..=2 * s + 3 {
                assert_eq!(second_row(s, j), 0, "s={s}, j={j}");
            }
        }
    }

    #[test]
    fn second_row_agrees_with_display_form() {
        for s in 3..=8 {
            for j in 0..=2 * s + 2 {
                assert_eq!(
                    second_row(s, j),
                    second_row_display_form(s, j),
                    "s={s}, j={j}"
                );
            }
        }
    }

    #[test]
    fn subset_counts_match_enumeration_small() {
        for s in 3..=4 {
            for j in 2..=2 * s {
                for m in 1..=j / 2 {
                    for a in CycleParams::isolated_counts(j, m) {
                        assert_eq!(
                            count_subsets_by_components(s, j, m, a),
                            oracle_subset_count(s, j, m, a),
                            "s={s}, j={j}, m={m}, a={a}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subset_count_fixed_values() {
        assert_eq!(count_subsets_by_components(4, 4, 2, 0), 12);
        assert_eq!(count_subsets_by_components(3, 4, 2, 0), 3);
        // Not enough vertices for the blocks: zero.
        assert_eq!(count_subsets_by_components(4, 5, 2, 2), 0);
    }

    #[test]
    fn full_diagram_for_s3_is_the_complete_intersection() {
        let d = full_diagram_cbc(3);
        assert_eq!(
            d.iter().collect::<Vec<_>>(),
            vec![((0, 2), 3), ((1, 4), 3), ((2, 6), 1)]
        );
        assert_eq!(d.regularity(), Ok(4));
    }

    #[test]
    fn full_diagram_matches_engine_for_s3() {
        let g = bipartite_complement_auto(&even_cycle_xy(3), false).unwrap();
        let engine =
            crate::betti::betti_diagram(&g, 2, &crate::betti::EngineOptions::default()).unwrap();
        assert_eq!(
            full_diagram_cbc(3).iter().collect::<Vec<_>>(),
            engine.iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn full_diagram_shape() {
        for s in 3..=6 {
            let d = full_diagram_cbc(s);
            assert_eq!(d.regularity(), Ok(4), "s={s}");
            assert_eq!(d.entry(2 * s as u32 - 4, 2 * s as u32), 1);
            for ((i, j), _) in d.iter() {
                assert!(j <= i + 4, "no entry beyond the fourth row (s={s})");
            }
            assert!(d.check_propagation());
        }
    }

    #[test]
    fn neighborhood_identity_examples() {
        // A single vertex has two cycle neighbors: 2 = 1 + 1.
        let single = VertexSet::from_iter(4, [0]);
        assert!(neighborhood_identity_check(4, &single));
        // Two adjacent positions: 3 = 2 + 1.
        let adjacent = VertexSet::from_iter(4, [0, 1]);
        assert!(neighborhood_identity_check(4, &adjacent));
        // Two antipodal positions on C_8: 4 = 2 + 2.
        let antipodal = VertexSet::from_iter(4, [0, 2]);
        assert!(neighborhood_identity_check(4, &antipodal));
    }

    #[test]
    fn neighborhood_identity_exhaustive_small() {
        for s in 3..=7 {
            for mask in 1u64..(1 << s) - 1 {
                let w_x = VertexSet::from_mask(s, mask);
                assert!(
                    neighborhood_identity_check(s, &w_x),
                    "s={s}, mask={mask:#b}"
                );
            }
        }
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert!(binom(-1, 0).is_zero());
        assert!(binom(3, 4).is_zero());
        assert!(binom(3, -1).is_zero());
        assert_eq!(binom(0, 0), BigUint::from(1u32));
    }
}
