//! Exact combinatorics of edge ideals: graded and multigraded Betti
//! numbers via Hochster's formula, Castelnuovo–Mumford regularity, and
//! the structural characterizations that make bipartite regularity
//! computations combinatorial.
//!
//! The crate is organized around:
//!
//! - [`graph`]: simple graphs on bitset adjacency rows, with the induced
//!   subgraph, complement and component machinery the theorems consume;
//! - [`bipartite`]: bipartitions, biadjacency matrices and the bipartite
//!   complement;
//! - [`cycles`]: induced-cycle detection, chordality and the induced
//!   matching number;
//! - [`homology`]: reduced simplicial homology of independence complexes
//!   over a prime field;
//! - [`reduction`]: biadjacency reduction rules that accelerate the
//!   bipartite homology computations;
//! - [`betti`]: the Hochster-formula engine assembling Betti diagrams;
//! - [`strands`]: fast regularity classifications cross-validated against
//!   the engine;
//! - [`cycle_formulas`]: closed combinatorial formulas for the bipartite
//!   complements of even cycles;
//! - [`polarization`]: non-squarefree quadratic monomial ideals through
//!   polarization;
//! - [`io`]: the text formats consumed by the CLI;
//! - [`verify`]: the self-checking suites behind `edge-ideals verify`.

pub mod betti;
pub mod bipartite;
pub mod bitset;
pub mod cycle_formulas;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod homology;
pub mod io;
pub mod polarization;
pub mod reduction;
pub mod strands;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
