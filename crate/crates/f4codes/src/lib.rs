//! Self-dual additive GF(4) codes from pairs of circulant matrices.
//!
//! The library builds codes C(A,B) with generator matrices M(A,B) + wI
//! for a symmetric zero-diagonal circulant A and a circulant B, checks
//! self-duality and Type, computes exact minimum weights with replayable
//! certificates, counts low-weight codewords, and searches the circulant
//! pair space for the largest minimum weight. A bundled catalog carries
//! reference codes with verified parameters, including the
//! [[66,0,17]], [[78,0,19]] and [[94,0,21]] quantum codes obtained from
//! self-dual codes of lengths 66, 78 and 94.
//!
//! Entry points:
//! - [`circulant::CirculantPair`] / [`code::AdditiveCode`] — construction.
//! - [`minweight`] — certified minimum-weight computation and counting.
//! - [`search`] — exhaustive / random / single-circulant search.
//! - [`catalog`] — the bundled reference codes and quantum parameters.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `f4codes` binary for the command-line interface.

pub mod catalog;
pub mod circulant;
pub mod cli;
pub mod code;
pub mod error;
pub mod gf4;
mod kernel;
pub mod minweight;
pub mod search;

pub use circulant::{BinaryMatrix, CirculantPair, CodeSpec, SupportSet};
pub use code::{AdditiveCode, TypeLabel};
pub use error::{Error, Result};
pub use gf4::{F4, F4Vector};
