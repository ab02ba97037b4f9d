//! Hat guessing games on digraphs.
//!
//! Every player sits on a vertex of a digraph, sees the hats of its
//! in-neighbours and guesses its own colour from `[q] = {0, ..., q-1}`; the
//! players win a configuration when at least one guess is right. This crate
//! builds explicit strategies for the known solvable families, verifies
//! them exhaustively (or by seeded sampling), and produces non-solvability
//! certificates.
//!
//! - [`graph`]: digraphs, named constructions, lexicographic products and
//!   the exact subset analyses.
//! - [`strategy`]: guess tables and every construction built on them.
//! - [`verify`]: exhaustive and sampled checking, gadget certification,
//!   remoteness.
//! - [`bounds`]: counting and semibipartite certificates, edge-criticality.
//! - [`search`]: exact solvability and affine strategy/gadget search.
//!
//! Exhaustive loops run on rayon with the `parallel` feature (default) and
//! always merge chunk results in order, so output never depends on thread
//! scheduling.

pub mod bounds;
pub mod error;
pub mod graph;
mod par;
pub mod search;
pub mod strategy;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Digraph, NamedGraph};
pub use par::Execution;
pub use strategy::{HatConfig, Strategy};
pub use verify::Verdict;
