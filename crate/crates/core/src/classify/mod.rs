//! Format and Tor algebra class of trimmed pfaffian ideals.

mod conjectures;
mod conjugate;
mod report;
mod tor;

pub use conjectures::{check_conjectures, ConjectureReport};
pub use conjugate::conjugate_trim_set;
pub use report::{classify, q1_bar, TorClass, TorReport};
pub use tor::{tor_products, tor_products_with, Representative, TorProduct, TorProductTable};
