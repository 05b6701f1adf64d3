//! Trimmed pfaffian ideals in k[x, y, z]: pfaffians, the trimmed
//! Buchsbaum–Eisenbud resolution with its DG-algebra structure, and the
//! classification of the resulting Tor algebras.
//!
//! Matrix and basis indices are 1-based throughout, matching the usual
//! labels e_i, f_i, u^k_l, v^k_{αβ}, w^k.

pub mod classify;
pub mod dgproducts;
mod error;
pub mod families;
pub mod io;
pub mod linalg;
pub mod pfaffian;
pub mod polyring;
pub mod resolution;

pub use error::{Error, Result};
pub use polyring::{Field, FieldElement, Monomial, Polynomial};
