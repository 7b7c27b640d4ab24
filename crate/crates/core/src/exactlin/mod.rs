//! Exact linear algebra over ℚ and 𝔽_p.

mod frame;
mod matrix;
pub mod poly;
mod scalar;
mod subspace;
pub mod vector;

pub use frame::Frame;
pub use matrix::{Matrix, Rref};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{EchelonBuilder, Subspace};
