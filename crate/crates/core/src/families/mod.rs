//! Explicit matrix families and randomized realizability scans.

mod build;
mod random;
mod scan;

pub use build::{band_matrix, build_family, family_checks, FamilyKind, FamilyReport, FamilySpec};
pub use random::{random_polynomial, random_skew_matrix};
pub use scan::{realizability_scan, trial_matrix, write_csv, ScanConfig, ScanOutput, ScanRecord};
