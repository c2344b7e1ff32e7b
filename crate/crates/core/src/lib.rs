//! Exact computations on positively graded factorial algebras.

pub mod bk;
pub mod bruteforce;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod graded;
pub mod grading;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod scalar;
pub mod signature;

pub use error::{Error, Result};
pub use parse::parse_poly;
pub use poly::{Monomial, Poly, Ring};
pub use scalar::{FieldSpec, Scalar};
