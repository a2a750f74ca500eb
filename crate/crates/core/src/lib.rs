//! Exact machinery for counting and probing sum-free subsets of integer
//! boxes `[n]^d` and of the planar stripe regions that carry the extremal
//! configurations.
//!
//! Everything here is exact: regions and areas are rational, counts are
//! big integers, series values are dyadic rationals. No floating point
//! enters any computation; decimal output is rendering only.
//!
//! Module map:
//!
//! - [`geometry`] — rational planar regions, lattice enumeration, fibers
//!   and the height function.
//! - [`schur`] — Schur-triple detection, sum-free predicates, hypergraph
//!   codegree statistics and Schur embeddings with a brute-force verifier.
//! - [`census`] — exact counting, extremal search and uniform sampling of
//!   sum-free subsets of arbitrary finite point sets.
//! - [`gseries`] — the dyadic series `g`, `g~`, `g_k`, the bipartite
//!   weighted independent-pair sum and its path recursion.
//! - [`fibers`] — the triple family partitioning the stripe fibers, and
//!   the count `s(n)` of sum-free subsets of `{1,3,4} x [n]` two ways.
//! - [`profiles`] — height profiles, discrepancy and the second-difference
//!   identities.
//! - [`verify`] — the acceptance checklist run by the CLI and the test
//!   suite.

pub mod census;
pub mod error;
pub mod fibers;
pub mod geometry;
pub mod gseries;
pub mod profiles;
pub mod schur;


pub use census::{BigCount, CountResult, SearchBudget, SearchStats};
pub use error::{Error, Result};
pub use geometry::{Fiber, FiberKind, LatticePoint, Rational, Region};
pub use gseries::{DyadicRational, LabeledBipartiteGraph};
pub use profiles::{DiscrepancyReport, HeightProfile};
pub use schur::{PointSet, SchurEmbedding, SchurHypergraphStats};
