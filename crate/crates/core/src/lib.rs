//! Jacobi-Jordan algebras: extensions, unified products and their special
//! cases, Galois groups of extensions, and codimension-one classification.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod extend;
pub mod field;
pub mod galois;
pub mod iso;
pub mod linalg;
pub mod products;
pub mod random;
pub mod report;

pub use algebra::JJAlgebra;
pub use enumerate::Budget;
pub use error::{Error, Result};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use linalg::{BilinearMap, LinearMap, Matrix, Vector, VectorOps};
pub use report::{Condition, Report};
