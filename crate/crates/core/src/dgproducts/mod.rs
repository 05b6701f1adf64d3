//! The DG algebra structure on the trimmed resolution.

mod constants;
mod element;
mod leibniz;
mod product;
mod table;

pub use constants::{d_constant, DConstant};
pub use element::ChainElement;
pub use leibniz::{verify_leibniz, verify_leibniz_on, LeibnizReport, LeibnizViolation};
pub use product::{gorenstein_product, product};
pub use table::{full_table, gorenstein_table, ProductRecord, ProductTable};
