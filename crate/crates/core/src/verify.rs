//! Self-checking suites: closed formulas against the engine, the
//! combinatorial characterizations against computed regularity, counting
//! formulas against enumeration, and the structural laws every diagram
//! must satisfy.
//!
//! All randomness is seeded and every reported number is an exact
//! integer, so a report is byte-identical across runs and worker counts;
//! the seed is part of the report, the thread count deliberately is not.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{betti_diagram, BettiDiagram, EngineOptions};
use crate::bipartite::{bipartite_complement_auto, detect_bipartition};
use crate::bitset::VertexSet;
use crate::cycle_formulas::{
    count_subsets_by_components, first_row, full_diagram_cbc, neighborhood_identity_check,
    second_row, CycleParams,
};
use crate::cycles::induced_matching_number;
use crate::error::Error;
use crate::graph::{generators, Graph};
use crate::homology::{reduced_homology, HomologyOptions, IndependenceComplexView};
use crate::polarization::{
    betti_nonsquarefree, reg3_nonsquarefree, totally_disjoint_triples, QuadraticIdeal,
};
use crate::strands::{
    bipartite_strand_matches, first_nonlinear_bipartite_capped, first_nonlinear_general_capped,
    froberg_linear, general_strand_matches, reg3_bipartite,
};

pub const DEFAULT_SEED: u64 = 0x5EED_ED6E;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// The two characteristics compared on the formula families.
    pub fields: (u32, u32),
    /// Largest `s` for the closed-formula-vs-engine comparison.
    pub formula_s_max: usize,
    /// Vertex count for the exhaustive linear-resolution sweep.
    pub froberg_vertices: usize,
    /// Exhaustive connected-bipartite sweep up to this many vertices.
    pub reg3_exhaustive_max: usize,
    /// Size and vertex range of the seeded random bipartite corpus.
    pub random_corpus_size: usize,
    pub random_vertex_range: (usize, usize),
    /// Exhaustive quadratic-ideal corpus up to this many variables.
    pub ideal_corpus_vars: usize,
    pub seed: u64,
    pub engine: EngineOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            fields: (2, 3),
            formula_s_max: 5,
            froberg_vertices: 6,
            reg3_exhaustive_max: 8,
            random_corpus_size: 500,
            random_vertex_range: (9, 12),
            ideal_corpus_vars: 5,
            seed: DEFAULT_SEED,
            engine: EngineOptions::default(),
        }
    }
}

impl VerifyConfig {
    /// A scale that finishes in seconds, for smoke tests and the
    /// determinism check.
    pub fn quick() -> Self {
        VerifyConfig {
            fields: (2, 3),
            formula_s_max: 3,
            froberg_vertices: 4,
            reg3_exhaustive_max: 6,
            random_corpus_size: 20,
            random_vertex_range: (9, 10),
            ideal_corpus_vars: 4,
            seed: DEFAULT_SEED,
            engine: EngineOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failure_count: u64,
    /// At most eight reproducers, sorted.
    pub failures: Vec<String>,
    /// Informational only (e.g. field-dependence sightings); never fails
    /// the suite.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub fields: (u32, u32),
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Mergeable counters for one suite.
#[derive(Clone, Debug, Default)]
struct Stats {
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Stats {
    fn check(&mut self, ok: bool, reproducer: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(reproducer());
        }
    }

    fn merge(mut self, mut other: Stats) -> Stats {
        self.checks += other.checks;
        self.failures.append(&mut other.failures);
        self.notes.append(&mut other.notes);
        self
    }

    fn into_result(mut self, name: &str) -> SuiteResult {
        self.failures.sort();
        self.notes.sort();
        let failure_count = self.failures.len() as u64;
        self.failures.truncate(8);
        SuiteResult {
            name: name.to_string(),
            passed: failure_count == 0,
            checks: self.checks,
            failure_count,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
        .collect();
    format!("n={} edges=[{}]", g.n_vertices(), edges.join(","))
}

/// Structural laws every engine diagram obeys: propagation, the strand
/// bounds `u_{i+1} <= u_i + 2` and `l_i >= l_0 + i`, generators exactly
/// in degree 2, and the induced-matching lower bound on regularity.
fn check_diagram_laws(g: &Graph, d: &BettiDiagram, laws: &mut Stats) {
    laws.check(d.check_propagation(), || {
        format!("propagation violated: {}", describe(g))
    });
    let extrema = d.strand_extrema();
    laws.check(
        extrema
            .windows(2)
            .all(|w| w[1].0 != w[0].0 + 1 || w[1].2 <= w[0].2 + 2),
        || format!("u_i growth violated: {}", describe(g)),
    );
    laws.check(extrema.iter().all(|&(i, lo, _)| lo >= 2 + i), || {
        format!("l_i lower bound violated: {}", describe(g))
    });
    laws.check(d.entry(0, 2) == g.edge_count() as u64, || {
        format!("beta_0,2 != |E|: {}", describe(g))
    });
    laws.check(d.iter().all(|((i, j), _)| i > 0 || j == 2), || {
        format!("generators outside degree 2: {}", describe(g))
    });
    if g.edge_count() > 0 {
        let mu = induced_matching_number(g) as u32;
        laws.check(d.regularity().map(|r| mu < r).unwrap_or(false), || {
            format!("induced-matching bound violated: {}", describe(g))
        });
    }
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

/// The graph on `n` vertices whose edges are the set bits of `mask` in
/// the lexicographic pair order (0,1), (0,2), .., (n-2,n-1). Pair slots
/// beyond the 64 mask bits stay absent.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bit < 64 && mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Every connected bipartite graph on `2..=max_n` vertices, enumerated by
/// bipartition sizes `(a, b)` with `a <= b` over all biadjacency
/// matrices. Labeled within each split; duplicates across splits are the
/// same graph up to relabeling and are harmless in a corpus.
pub fn connected_bipartite_corpus(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for a in 1..=n / 2 {
            let b = n - a;
            let cells = a * b;
            for mask in 0u64..(1 << cells) {
                let mut g = Graph::new(n).unwrap();
                for (idx, _) in (0..cells).enumerate() {
                    if mask >> idx & 1 == 1 {
                        g.add_edge(idx / b, a + idx % b).unwrap();
                    }
                }
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Seeded random connected bipartite graphs with vertex counts in
/// `lo..=hi`.
pub fn random_connected_bipartite(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(lo..=hi);
        let a = rng.gen_range(1..n);
        let b = n - a;
        let mut g = Graph::new(n).unwrap();
        for u in 0..a {
            for v in 0..b {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, a + v).unwrap();
                }
            }
        }
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Exhaustive corpus of quadratic ideals: every connected bipartite base
/// graph on `2..=max_vars` labeled vertices, decorated with one or two
/// squares in all possible ways.
pub fn quadratic_ideal_corpus(max_vars: usize) -> Vec<QuadraticIdeal> {
    let mut out = Vec::new();
    for n in 2..=max_vars {
        let slots = n * (n - 1) / 2;
        for mask in 1u64..(1 << slots) {
            let g = graph_from_edge_mask(n, mask);
            if !g.is_connected() || detect_bipartition(&g).is_err() {
                continue;
            }
            let edges = g.edges();
            for s1 in 0..n {
                out.push(QuadraticIdeal::new(n, [s1], edges.iter().copied()).unwrap());
                for s2 in s1 + 1..n {
                    out.push(QuadraticIdeal::new(n, [s1, s2], edges.iter().copied()).unwrap());
                }
            }
        }
    }
    out
}

/// Seeded random quadratic ideals on `lo..=hi` variables.
pub fn random_quadratic_ideals(
    seed: u64,
    count: usize,
    lo: usize,
    hi: usize,
) -> Vec<QuadraticIdeal> {
    let bases = random_connected_bipartite(seed ^ 0x9E3779B9, count, lo, hi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7F4A7C15);
    bases
        .into_iter()
        .map(|g| {
            let n = g.n_vertices();
            let s1 = rng.gen_range(0..n);
            let squares = if rng.gen_bool(0.5) {
                vec![s1]
            } else {
                let mut s2 = rng.gen_range(0..n);
                if s2 == s1 {
                    s2 = (s2 + 1) % n;
                }
                vec![s1, s2]
            };
            QuadraticIdeal::new(n, squares, g.edges().iter().copied()).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

fn suite_formula_vs_engine(cfg: &VerifyConfig, laws: &mut Stats) -> Stats {
    let mut st = Stats::default();
    let engine_opts = EngineOptions {
        max_vertices: cfg.engine.max_vertices.max(2 * cfg.formula_s_max),
        ..cfg.engine
    };
    for s in 3..=cfg.formula_s_max {
        let closed = full_diagram_cbc(s);
        let g = bipartite_complement_auto(&generators::even_cycle_xy(s), false).unwrap();
        for p in [cfg.fields.0, cfg.fields.1] {
            let engine = betti_diagram(&g, p, &engine_opts).unwrap();
            st.check(
                closed.iter().collect::<Vec<_>>() == engine.iter().collect::<Vec<_>>(),
                || {
                    format!(
                        "closed form != engine for s={s}, p={p}: {:?} vs {:?}",
                        closed.iter().collect::<Vec<_>>(),
                        engine.iter().collect::<Vec<_>>()
                    )
                },
            );
            st.check(engine.regularity() == Ok(4), || {
                format!("regularity != 4 for s={s}, p={p}")
            });
            st.check(engine.entry(2 * s as u32 - 4, 2 * s as u32) == 1, || {
                format!("missing top corner for s={s}, p={p}")
            });
            st.check(engine.iter().all(|((i, j), _)| j <= i + 4), || {
                format!("entry beyond row 4 for s={s}, p={p}")
            });
            check_diagram_laws(&g, &engine, laws);
        }
    }
    // Row identities: engine entries up to the configured s, closed form
    // through s = 6.
    for s in 3..=cfg.formula_s_max.max(6) {
        let su = s as u32;
        let edge_count = (s * (s - 2)) as u64;
        let second_val = (s * (2 * s - 5)) as u64;
        st.check(first_row(s, 2) == edge_count, || {
            format!("first_row(s,2) != s(s-2) at s={s}")
        });
        st.check(first_row(s, s - 1) == edge_count, || {
            format!("first_row(s,s-1) != s(s-2) at s={s}")
        });
        st.check(second_row(s, 4) == second_val, || {
            format!("second_row(s,4) != s(2s-5) at s={s}")
        });
        st.check(second_row(s, 2 * s - 2) == second_val, || {
            format!("second_row(s,2s-2) != s(2s-5) at s={s}")
        });
        if s <= cfg.formula_s_max {
            let g = bipartite_complement_auto(&generators::even_cycle_xy(s), false).unwrap();
            let engine = betti_diagram(&g, cfg.fields.0, &engine_opts).unwrap();
            st.check(engine.entry(0, 2) == edge_count, || {
                format!("engine beta_0,2 at s={s}")
            });
            st.check(engine.entry(su - 3, su - 1) == edge_count, || {
                format!("engine beta_s-3,s-1 at s={s}")
            });
            st.check(engine.entry(1, 4) == second_val, || {
                format!("engine beta_1,4 at s={s}")
            });
            st.check(engine.entry(2 * su - 5, 2 * su - 2) == second_val, || {
                format!("engine beta_2s-5,2s-2 at s={s}")
            });
        }
    }
    st
}

struct CorpusOutcome {
    characterization: Stats,
    strand: Stats,
    laws: Stats,
}

fn sweep_general_graphs(cfg: &VerifyConfig) -> CorpusOutcome {
    let n = cfg.froberg_vertices;
    let slots = n * (n - 1) / 2;
    let p = cfg.fields.0;
    let engine = cfg.engine;
    let (characterization, strand, laws) = (1u64..(1 << slots))
        .into_par_iter()
        .fold(
            || (Stats::default(), Stats::default(), Stats::default()),
            |(mut ch, mut strand, mut laws), mask| {
                let g = graph_from_edge_mask(n, mask);
                let d = betti_diagram(&g, p, &engine).unwrap();
                let reg = d.regularity().unwrap();
                let linear = froberg_linear(&g).unwrap();
                ch.check(linear == (reg == 2), || {
                    format!(
                        "linearity test disagrees with regularity {reg}: {}",
                        describe(&g)
                    )
                });
                if reg > 2 {
                    let report = first_nonlinear_general_capped(&g, 64).unwrap();
                    strand.check(general_strand_matches(&report, &d), || {
                        format!("general strand report mismatch: {}", describe(&g))
                    });
                }
                check_diagram_laws(&g, &d, &mut laws);
                (ch, strand, laws)
            },
        )
        .reduce(
            || (Stats::default(), Stats::default(), Stats::default()),
            |a, b| (a.0.merge(b.0), a.1.merge(b.1), a.2.merge(b.2)),
        );
    CorpusOutcome {
        characterization,
        strand,
        laws,
    }
}

fn sweep_bipartite_corpus(cfg: &VerifyConfig) -> CorpusOutcome {
    let mut graphs = connected_bipartite_corpus(cfg.reg3_exhaustive_max);
    let randoms = random_connected_bipartite(
        cfg.seed,
        cfg.random_corpus_size,
        cfg.random_vertex_range.0,
        cfg.random_vertex_range.1,
    );
    let split = graphs.len();
    graphs.extend(randoms);
    let p = cfg.fields.0;
    let q = cfg.fields.1;
    let engine = cfg.engine;
    let (characterization, strand, laws) = graphs
        .par_iter()
        .enumerate()
        .fold(
            || (Stats::default(), Stats::default(), Stats::default()),
            |(mut ch, mut strand, mut laws), (idx, g)| {
                let d = betti_diagram(g, p, &engine).unwrap();
                let reg = d.regularity();
                match reg3_bipartite(g) {
                    Ok(is3) => ch.check(is3 == (reg == Ok(3)), || {
                        format!(
                            "regularity-3 test disagrees with {:?}: {}",
                            reg,
                            describe(g)
                        )
                    }),
                    Err(Error::EmptyIdeal) => {
                        ch.checks += 1; // single-vertex side with no edges
                    }
                    Err(e) => ch.check(false, || format!("unexpected error {e}: {}", describe(g))),
                }
                if reg.as_ref().map(|&r| r > 3).unwrap_or(false) {
                    let report = first_nonlinear_bipartite_capped(g, 64).unwrap();
                    strand.check(bipartite_strand_matches(&report, &d), || {
                        format!("bipartite strand report mismatch: {}", describe(g))
                    });
                }
                check_diagram_laws(g, &d, &mut laws);
                // On the random corpus, compare the two characteristics and
                // report (not fail) any dependence.
                if idx >= split {
                    let d3 = betti_diagram(g, q, &engine).unwrap();
                    if d.iter().collect::<Vec<_>>() != d3.iter().collect::<Vec<_>>() {
                        laws.notes.push(format!(
                            "field-dependent Betti numbers (GF({p}) vs GF({q})): {}",
                            describe(g)
                        ));
                    }
                }
                (ch, strand, laws)
            },
        )
        .reduce(
            || (Stats::default(), Stats::default(), Stats::default()),
            |a, b| (a.0.merge(b.0), a.1.merge(b.1), a.2.merge(b.2)),
        );
    CorpusOutcome {
        characterization,
        strand,
        laws,
    }
}

fn suite_counting_oracle(cfg: &VerifyConfig) -> Stats {
    let mut st = Stats::default();
    let s_max = if cfg.formula_s_max >= 5 { 6 } else { 4 };
    for s in 3..=s_max {
        let g = generators::even_cycle_xy(s);
        let n = 2 * s;
        // One enumeration pass tallies (j, m, a) for all proper subsets.
        let mut tally = std::collections::BTreeMap::<(usize, usize, usize), u64>::new();
        for mask in 1u64..(1 << n) - 1 {
            let w = VertexSet::from_mask(n, mask);
            let h = g.induced_subgraph(&w).unwrap();
            let comps = h.connected_components();
            let isolated = comps.iter().filter(|c| c.len() == 1).count();
            let m = comps.len() - isolated;
            if m >= 1 {
                *tally.entry((w.len(), m, isolated)).or_insert(0) += 1;
            }
        }
        for j in 2..=n {
            for m in 1..=j / 2 {
                for a in CycleParams::isolated_counts(j, m) {
                    let formula = count_subsets_by_components(s, j, m, a);
                    let oracle = tally.get(&(j, m, a)).copied().unwrap_or(0);
                    st.check(formula == oracle, || {
                        format!("w(j,m,a) mismatch at s={s}, j={j}, m={m}, a={a}: formula {formula}, enumeration {oracle}")
                    });
                }
            }
        }
    }
    for s in 3..=7 {
        for mask in 1u64..(1 << s) - 1 {
            let w_x = VertexSet::from_mask(s, mask);
            st.check(neighborhood_identity_check(s, &w_x), || {
                format!("neighborhood identity fails at s={s}, positions {w_x:?}")
            });
        }
    }
    st
}

fn suite_polarization(cfg: &VerifyConfig, laws: &mut Stats) -> Stats {
    let mut st = Stats::default();
    // The worked example: (x1^2, x1x5, x2x5, x2x7, x3x5, x3x6, x3x7, x4x6).
    let example = QuadraticIdeal::new(
        7,
        [0],
        [(0, 4), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5)],
    )
    .unwrap();
    let b = betti_nonsquarefree(&example, cfg.fields.0, &cfg.engine).unwrap();
    st.check(b.diagram.entry(2, 6) == 1, || {
        "worked example: beta_2,6 != 1".to_string()
    });
    st.check(
        totally_disjoint_triples(&example.looped_graph()).0 == 1,
        || "worked example: triple count != 1".to_string(),
    );
    let bc = bipartite_complement_auto(&example.squarefree_graph(), false).unwrap();
    st.check(crate::cycles::min_induced_cycle(&bc, 6).is_none(), || {
        "worked example: bipartite complement has a short induced cycle".to_string()
    });
    st.check(reg3_nonsquarefree(&example) == Ok(false), || {
        "worked example: regularity-3 test should fail".to_string()
    });

    // Corpus: the combinatorial test matches the engine's regularity.
    let corpus = quadratic_ideal_corpus(cfg.ideal_corpus_vars);
    let engine = cfg.engine;
    let p = cfg.fields.0;
    let (corpus_stats, corpus_laws) = corpus
        .par_iter()
        .fold(
            || (Stats::default(), Stats::default()),
            |(mut st, mut laws), ideal| {
                let b = betti_nonsquarefree(ideal, p, &engine).unwrap();
                let reg = b.diagram.regularity().unwrap();
                let claimed = reg3_nonsquarefree(ideal).unwrap();
                st.check(claimed == (reg == 3), || {
                    format!(
                        "non-squarefree regularity-3 test disagrees with {reg}: {:?}",
                        ideal
                    )
                });
                let (triples, _) = totally_disjoint_triples(&ideal.looped_graph());
                if triples > 0 {
                    st.check(b.diagram.entry(2, 6) == triples, || {
                        format!("beta_2,6 != triple count: {ideal:?}")
                    });
                    st.check(
                        b.diagram.iter().all(|((i, j), _)| i > 1 || j <= i + 3),
                        || format!("early rows leak beyond j=i+3: {ideal:?}"),
                    );
                    let max_j = b.diagram.iter().map(|((_, j), _)| j).max().unwrap_or(6);
                    st.check((7..=max_j).all(|j| b.diagram.entry(2, j) == 0), || {
                        format!("beta_2,j nonzero for j > 6: {ideal:?}")
                    });
                }
                check_diagram_laws(&crate::polarization::polarize(ideal), &b.diagram, &mut laws);
                (st, laws)
            },
        )
        .reduce(
            || (Stats::default(), Stats::default()),
            |a, b| (a.0.merge(b.0), a.1.merge(b.1)),
        );
    *laws = std::mem::take(laws).merge(corpus_laws);
    st.merge(corpus_stats)
}

fn suite_homology_fixtures(cfg: &VerifyConfig) -> Stats {
    let mut st = Stats::default();
    let hopts = HomologyOptions::default();
    for m in 1..=6usize {
        for p in [cfg.fields.0, cfg.fields.1] {
            let g = generators::matching(m);
            let h = reduced_homology(
                &IndependenceComplexView {
                    graph: &g,
                    subset: VertexSet::full(2 * m),
                },
                p,
                &hopts,
            )
            .unwrap();
            st.check(h.single_nonzero() == Some((m - 1, 1)), || {
                format!("matching complex fixture fails at m={m}, p={p}")
            });
            let bc = bipartite_complement_auto(&generators::matching_xy(m), true).unwrap();
            let h = reduced_homology(
                &IndependenceComplexView {
                    graph: &bc,
                    subset: VertexSet::full(2 * m),
                },
                p,
                &hopts,
            )
            .unwrap();
            let expected = if m == 1 {
                None
            } else {
                Some((1, m as u64 - 1))
            };
            st.check(
                h.single_nonzero() == expected && (m > 1 || h.is_zero()),
                || format!("matching-complement fixture fails at m={m}, p={p}"),
            );
        }
    }
    // Subset classification for the bipartite complements of even cycles,
    // over both characteristics (the classification is field-free).
    for s in 3..=5usize {
        let cycle = generators::even_cycle_xy(s);
        let g = bipartite_complement_auto(&cycle, false).unwrap();
        let n = 2 * s;
        let sub_stats = (1u64..(1 << n) - 1)
            .into_par_iter()
            .fold(Stats::default, |mut st, mask| {
                let w = VertexSet::from_mask(n, mask);
                let w_x = (0..s).filter(|&v| w.contains(v)).count();
                let w_y = w.len() - w_x;
                let k_w = cycle.induced_subgraph(&w).unwrap().components_non_isolated();
                let expected: Vec<u64> = if w_x == 0 || w_y == 0 {
                    vec![]
                } else if k_w == 0 {
                    vec![1]
                } else if k_w == 1 {
                    vec![]
                } else {
                    vec![0, k_w as u64 - 1]
                };
                for p in [cfg.fields.0, cfg.fields.1] {
                    let h = reduced_homology(
                        &IndependenceComplexView {
                            graph: &g,
                            subset: w.clone(),
                        },
                        p,
                        &hopts,
                    )
                    .unwrap();
                    st.check(h.dims() == expected.as_slice(), || {
                        format!(
                            "subset classification fails at s={s}, p={p}, W={:?}: got {:?}, expected {:?}",
                            w.to_one_based(),
                            h.dims(),
                            expected
                        )
                    });
                }
                st
            })
            .reduce(Stats::default, Stats::merge);
        st = st.merge(sub_stats);
    }
    st
}

/// Run every suite at the configured scale.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let mut laws = Stats::default();

    let formula = suite_formula_vs_engine(cfg, &mut laws);
    let general = sweep_general_graphs(cfg);
    let bipartite = sweep_bipartite_corpus(cfg);
    let counting = suite_counting_oracle(cfg);
    let polarization = suite_polarization(cfg, &mut laws);
    let fixtures = suite_homology_fixtures(cfg);

    let strand = general.strand.merge(bipartite.strand);
    let laws = laws.merge(general.laws).merge(bipartite.laws);

    VerifyReport {
        seed: cfg.seed,
        fields: cfg.fields,
        suites: vec![
            formula.into_result("formula-vs-engine"),
            general.characterization.into_result("froberg-exhaustive"),
            bipartite
                .characterization
                .into_result("reg3-characterization"),
            strand.into_result("first-strand"),
            laws.into_result("propagation-bounds"),
            counting.into_result("counting-oracle"),
            polarization.into_result("polarization"),
            fixtures.into_result("homology-fixtures"),
        ],
    }
}
