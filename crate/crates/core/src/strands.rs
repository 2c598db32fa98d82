//! Regularity classification of edge ideals by pure graph combinatorics.
//!
//! Three decision procedures, each cross-validated against the Hochster
//! engine in the test suites:
//!
//! - regularity 2 (linear resolution) iff the complement is chordal;
//! - for connected bipartite graphs, regularity 3 iff the complement has
//!   an induced cycle but the bipartite complement has none of length
//!   >= 6;
//! - beyond that, the first homological index carrying syzygies outside
//!   the linear strands is located by the shortest induced cycle of the
//!   relevant complement, and the Betti number there counts those cycles.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::betti::BettiDiagram;
use crate::bipartite::{bipartite_complement_auto, detect_bipartition};
use crate::bitset::VertexSet;
use crate::cycles::{induced_cycle_subsets, is_chordal, min_induced_cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_WITNESS_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    /// Regularity 2: linear resolution.
    Linear,
    /// Regularity exactly 3 (bipartite characterization).
    Reg3,
    /// Regularity at least 4 (bipartite) or at least 3 (general), with a
    /// located first nonlinear strand.
    Higher,
}

/// Where the first syzygies beyond the linear strands sit.
///
/// For the `Higher` class, `strand_degree = first_nonlinear_i + 3` in the
/// general case and `+ 4` in the bipartite case; `strand_count` is exact
/// while `witnesses` lists at most `witness_cap` of the inducing subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandReport {
    pub class: RegularityClass,
    pub first_nonlinear_i: Option<u32>,
    pub strand_degree: Option<u32>,
    pub strand_count: Option<u64>,
    pub witnesses: Vec<VertexSet>,
    pub witness_cap: usize,
}

impl StrandReport {
    fn flat(class: RegularityClass) -> Self {
        StrandReport {
            class,
            first_nonlinear_i: None,
            strand_degree: None,
            strand_count: None,
            witnesses: Vec::new(),
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    fn higher(t: usize, offset: u32, count: u64, witnesses: Vec<VertexSet>, cap: usize) -> Self {
        StrandReport {
            class: RegularityClass::Higher,
            first_nonlinear_i: Some(t as u32 - offset),
            strand_degree: Some(t as u32),
            strand_count: Some(count),
            witnesses,
            witness_cap: cap,
        }
    }
}

impl Serialize for StrandReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let class = match self.class {
            RegularityClass::Linear => "linear",
            RegularityClass::Reg3 => "reg3",
            RegularityClass::Higher => "higher",
        };
        let witnesses: Vec<Vec<usize>> =
            self.witnesses.iter().map(VertexSet::to_one_based).collect();
        let mut s = serializer.serialize_struct("StrandReport", 5)?;
        s.serialize_field("class", class)?;
        s.serialize_field("t", &self.strand_degree)?;
        s.serialize_field("i", &self.first_nonlinear_i)?;
        s.serialize_field("count", &self.strand_count)?;
        s.serialize_field("witnesses", &witnesses)?;
        s.end()
    }
}

/// True iff the edge ideal has a linear resolution (regularity 2),
/// decided by chordality of the complement.
pub fn froberg_linear(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyIdeal);
    }
    Ok(is_chordal(&g.complement()))
}

/// First nonlinear strand of a general edge ideal with regularity > 2:
/// located at `i = t - 3` where `t` is the shortest induced cycle length
/// in the complement, with `β_{t-3,t}` counting those cycles. The
/// multigraded statement is carried by the witnesses: each witness `W`
/// induces a `t`-cycle in the complement and contributes exactly 1.
pub fn first_nonlinear_general(g: &Graph) -> Result<StrandReport> {
    first_nonlinear_general_capped(g, DEFAULT_WITNESS_CAP)
}

pub fn first_nonlinear_general_capped(g: &Graph, cap: usize) -> Result<StrandReport> {
    if froberg_linear(g)? {
        return Err(Error::PreconditionViolated(
            "the complement is chordal, so the resolution is linear".into(),
        ));
    }
    let c = g.complement();
    let t = min_induced_cycle(&c, 4).expect("non-chordal complement has an induced cycle");
    let (count, witnesses) = induced_cycle_subsets(&c, t, cap);
    Ok(StrandReport::higher(t, 3, count, witnesses, cap))
}

/// The bipartite regularity-3 test: the complement has an induced cycle
/// while the bipartite complement has no induced cycle of length >= 6.
pub fn reg3_bipartite(g: &Graph) -> Result<bool> {
    let bc = connected_bipartite_complement(g)?;
    if g.edge_count() == 0 {
        return Err(Error::EmptyIdeal);
    }
    Ok(min_induced_cycle(&g.complement(), 4).is_some() && min_induced_cycle(&bc, 6).is_none())
}

/// First strand beyond the second row for a connected bipartite graph of
/// regularity > 3: located at `i = t - 4` where `t` is the shortest
/// induced cycle length in the bipartite complement, with `β_{t-4,t}`
/// counting those cycles. The precondition is asserted through the two
/// combinatorial characterizations, never through a diagram.
pub fn first_nonlinear_bipartite(g: &Graph) -> Result<StrandReport> {
    first_nonlinear_bipartite_capped(g, DEFAULT_WITNESS_CAP)
}

pub fn first_nonlinear_bipartite_capped(g: &Graph, cap: usize) -> Result<StrandReport> {
    let bc = connected_bipartite_complement(g)?;
    if froberg_linear(g)? {
        return Err(Error::PreconditionViolated(
            "the complement is chordal, so the regularity is 2".into(),
        ));
    }
    let t = match min_induced_cycle(&bc, 6) {
        Some(t) => t,
        None => {
            return Err(Error::PreconditionViolated(
                "the bipartite complement has no induced cycle of length >= 6, \
                 so the regularity is 3"
                    .into(),
            ))
        }
    };
    let (count, witnesses) = induced_cycle_subsets(&bc, t, cap);
    Ok(StrandReport::higher(t, 4, count, witnesses, cap))
}

fn connected_bipartite_complement(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    bipartite_complement_auto(g, false)
}

/// The classification ladder used by the CLI: linear, then (for connected
/// bipartite input) the regularity-3 test, then the first-strand report.
pub fn classify(g: &Graph, cap: usize) -> Result<StrandReport> {
    if froberg_linear(g)? {
        return Ok(StrandReport::flat(RegularityClass::Linear));
    }
    let bipartite_connected = g.is_connected() && detect_bipartition(g).is_ok();
    if bipartite_connected {
        if reg3_bipartite(g)? {
            Ok(StrandReport::flat(RegularityClass::Reg3))
        } else {
            first_nonlinear_bipartite_capped(g, cap)
        }
    } else {
        first_nonlinear_general_capped(g, cap)
    }
}

/// The general first-strand statement checked against an engine diagram:
/// nothing beyond the first row below `i`, the located entry matches the
/// cycle count, and nothing above degree `t` at that index.
pub fn general_strand_matches(report: &StrandReport, d: &BettiDiagram) -> bool {
    let (i0, t, count) = match (
        report.first_nonlinear_i,
        report.strand_degree,
        report.strand_count,
    ) {
        (Some(i), Some(t), Some(c)) => (i, t, c),
        _ => return false,
    };
    for ((i, j), _) in d.iter() {
        if i < i0 && j > i + 2 {
            return false;
        }
    }
    if d.entry(i0, t) != count {
        return false;
    }
    let max_j = d.iter().map(|((_, j), _)| j).max().unwrap_or(t);
    (t + 1..=max_j).all(|j| d.entry(i0, j) == 0)
}

/// Same for the bipartite statement: nothing beyond the first two rows
/// below `i`, the located entry matches, nothing above degree `t` there.
pub fn bipartite_strand_matches(report: &StrandReport, d: &BettiDiagram) -> bool {
    let (i0, t, count) = match (
        report.first_nonlinear_i,
        report.strand_degree,
        report.strand_count,
    ) {
        (Some(i), Some(t), Some(c)) => (i, t, c),
        _ => return false,
    };
    for ((i, j), _) in d.iter() {
        if i < i0 && j > i + 3 {
            return false;
        }
    }
    if d.entry(i0, t) != count {
        return false;
    }
    let max_j = d.iter().map(|((_, j), _)| j).max().unwrap_or(t);
    (t + 1..=max_j).all(|j| d.entry(i0, j) == 0)
}
