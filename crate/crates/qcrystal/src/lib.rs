//! Exact combinatorics of crystal structures on semistandard Young and
//! shifted tableaux: raising/lowering operators, crystal graphs, local
//! axiom verification, Schur and Schur P polynomial expansions, and
//! rectification of shifted tableaux to Young tableaux.
//!
//! Rows are indexed from the bottom starting at 1; the shifted diagram of
//! a strict partition gamma puts row r in columns r through r + gamma_r - 1.
//! All arithmetic is exact.

pub mod axioms;
pub mod error;
pub mod graph;
pub mod operators;
pub mod polynomials;
pub mod rectification;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
