use thiserror::Error;

use crate::polyring::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u32),
    #[error("{}", not_in_m(.position, .value))]
    EntryNotInMaximalIdeal { position: Option<(usize, usize)>, value: String },
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("repeated index {0}")]
    RepeatedIndex(usize),
    #[error("unsupported matrix size {0}: need an odd size of at least 5")]
    UnsupportedSize(usize),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

fn not_in_m(position: &Option<(usize, usize)>, value: &str) -> String {
    match position {
        Some((i, j)) => format!("entry ({i}, {j}) = {value} has a nonzero constant term"),
        None => format!("{value} has a nonzero constant term"),
    }
}
