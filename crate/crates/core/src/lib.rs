//! Kernelization and exact solvers for degree-constrained graph completion.
//!
//! The central problem, DCE, asks whether at most `k` edits (edge additions,
//! edge deletions or vertex deletions) can move every vertex degree onto a
//! per-vertex list of admissible degrees. The crate provides kernels for the
//! edge-addition variant, the numeric completion problems behind them,
//! f-factor realization, the degree-sequence completion framework with its
//! built-in properties, hardness constructions as instance transformers, and
//! the file formats and generators used by the `degcomp` binary.

pub mod bench;
pub mod dce;
pub mod dsc;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod nce;
pub mod reductions;
pub mod winwin;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Edge, Graph};
