//! Exact rational scalars and dense linear algebra shared by every other module.

mod matrix;
mod rat;
mod upoly;

pub use matrix::RatMatrix;
pub use rat::{primitive_integer_vector, q, ParseRatError, Rat};
pub use upoly::UPoly;
