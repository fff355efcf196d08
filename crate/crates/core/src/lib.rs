//! Verification workbench for the bound χ ≤ max{ω, Δ - 1} on 4K1-free graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] and [`graph6`]: immutable bit-row graphs and their text encoding;
//! * [`structure`]: exact clique and independence numbers, 4K1-freeness;
//! * [`coloring`]: the coloring model, DSATUR, the exact chromatic solver
//!   and a constructive Brooks colorer;
//! * [`kempe`]: palette profiles, Kempe chains, recoloring tactics and the
//!   recursive `bk_color` procedure;
//! * [`verify`]: isomorph-free enumeration, verification campaigns and the
//!   configuration auditor.

pub mod bitset;
pub mod coloring;
mod error;
pub mod graph;
pub mod graph6;
pub mod kempe;
pub mod par;
pub mod structure;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use coloring::{Color, Coloring, UNASSIGNED};
pub use error::{Error, Graph6Error, Result};
pub use graph::Graph;
