pub mod algebra;
pub mod error;
pub mod exactlin;
pub mod groupoid;
pub mod leavitt;
pub mod paction;
pub mod schema;
pub mod skewring;

pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Matrix, Scalar, Subspace};
