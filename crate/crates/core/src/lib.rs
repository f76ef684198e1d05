//! Exact computations with finite-dimensional associative unital algebras
//! given by structure constants: centers, the Jacobson radical, one-sided
//! ideal lattices, essential and closed right ideals, and central
//! essentiality, over prime fields and the rationals.

pub mod algebra;
pub mod algebra_file;
pub mod catalog;
pub mod central;
pub mod cli;
pub mod error;
pub mod field;
pub mod ideals;
pub mod linalg;
pub mod poly;
pub mod search;
pub mod suites;
pub mod symbolic;

pub use algebra::{Algebra, Element, Side};
pub use error::{Error, Result};
pub use field::{FieldDesc, Scalar};
pub use linalg::{Matrix, Subspace};
