//! The Gorenstein resolution F of R/I and the trimmed resolution of R/J
//! built from F and t Koszul complexes.

mod basis;
mod complex;
mod diagrams;
mod minimize;
mod trimmed;

pub use basis::BasisElement;
pub use complex::{ChainComplex, ComplexDocument, DifferentialDocument};
pub use diagrams::{verify_diagrams, DiagramFailure, DiagramReport};
pub use minimize::minimize;
pub use trimmed::{gorenstein_resolution, pair_index, trimmed_resolution, TrimSource, TrimmedData, PAIRS};
