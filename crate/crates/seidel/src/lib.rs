//! Exact-arithmetic toolkit for Seidel matrices and equiangular line
//! systems: switching classes, exact integer spectra, regular-graph
//! searches, positive-semidefinite structure analysis, spectral bounds and
//! a feasibility battery for candidate spectra.
//!
//! All verdicts are computed over exact integers (arbitrary precision where
//! coefficients can grow); floating point appears only in optional test
//! oracles.

pub mod algebraic;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod io;
pub mod lines;
pub mod matrix;
pub mod poly;
pub mod regular;
pub mod seidel;
pub mod spectra;
pub mod structure;

pub use crate::error::{Error, Result};
pub use crate::seidel::{
    euler_switch, graph_from_seidel, seidel_from_graph, switch, Graph, SeidelMatrix,
    SwitchingVector,
};
pub use crate::spectra::{spectrum, Spectrum};

use num_bigint::BigInt;

/// Concrete scalar instantiations used throughout the crate.
pub type BigMatrix = matrix::SquareMatrix<BigInt>;
pub type IntMatrix = matrix::SquareMatrix<i64>;
pub type BigPoly = poly::Poly<BigInt>;
pub type IntPoly = poly::Poly<i64>;
