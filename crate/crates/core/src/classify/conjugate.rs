use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;

/// Conjugates T by the permutation moving the chosen generators to the
/// front, in the given order, with the others following in increasing order.
///
/// Returns the new matrix and `order`, where `order[a]` is the old index now
/// at position a + 1.
pub fn conjugate_trim_set(t_matrix: &SkewMatrix, generators: &[usize]) -> Result<(SkewMatrix, Vec<usize>)> {
    let m = t_matrix.size();
    if generators.is_empty() {
        return Err(Error::Argument("empty trim set".into()));
    }
    for (n, &g) in generators.iter().enumerate() {
        if !(1..=m).contains(&g) {
            return Err(Error::IndexOutOfRange { index: g, size: m });
        }
        if generators[..n].contains(&g) {
            return Err(Error::RepeatedIndex(g));
        }
    }
    let mut order = generators.to_vec();
    order.extend((1..=m).filter(|i| !generators.contains(i)));
    Ok((t_matrix.permute(&order)?, order))
}
