//! Numerical radius computations on finite-dimensional operators, the
//! transforms built around them (polar, Cartesian, `(s,t)`-Aluthge, 2×2 block
//! operators) and a harness that evaluates a catalog of numerical-radius
//! inequalities on seeded random operators.

pub mod blockops;
pub mod decomp;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod radius;
pub mod registry;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
