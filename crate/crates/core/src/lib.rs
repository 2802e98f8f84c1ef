//! Exact computation of first order codifferential calculi.
//!
//! The crate builds the universal bicomodule of a finite coalgebra,
//! generates subbicomodules from singletons, and for Hopf algebras
//! classifies bicovariant calculi through Yetter–Drinfeld submodules of
//! `H/𝕂1`, together with their quantum Lie brackets and braidings.

pub mod bicomodule;
pub mod cli;
pub mod coalgebra;
pub mod duality;
pub mod hopf;
pub mod linalg;
pub mod presentations;
pub mod qlie;
pub mod scalar;

pub use scalar::{Field, Scalar};
