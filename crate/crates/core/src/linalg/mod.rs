//! Matrices over the polynomial ring and over the coefficient field.

mod kmatrix;
mod poly_matrix;

pub use kmatrix::{KMatrix, Rref};
pub use poly_matrix::PolyMatrix;
