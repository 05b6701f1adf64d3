//! Pfaffians of skew-symmetric matrices, the signs σ, and the pfaffian
//! identities they satisfy.

mod identities;
mod matrix;
mod sign;

pub use identities::{check_identities, Identity, IdentityReport, IdentityResult};
pub use matrix::{SkewMatrix, MAX_SIZE};
pub use sign::{sigma3, sigma5, Sign};
