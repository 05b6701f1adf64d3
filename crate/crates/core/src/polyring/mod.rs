//! Exact arithmetic in k[x, y, z] for k = F_p or Q.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{Field, FieldElement};
pub use monomial::Monomial;
pub use poly::Polynomial;
