use super::complex::ChainComplex;
use crate::linalg::PolyMatrix;
use crate::polyring::Polynomial;

/// First entry with a nonzero constant term, scanning ∂₁, ∂₂, ∂₃ in row-major order.
fn find_unit(diffs: &[PolyMatrix; 3]) -> Option<(usize, usize, usize)> {
    for (d, m) in diffs.iter().enumerate() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.get(r, c).is_unit() {
                    return Some((d, r, c));
                }
            }
        }
    }
    None
}

/// Splits off trivial summands R --u--> R until every differential entry
/// lies in the maximal ideal.
///
/// With p = ∂_d[r][c] a unit, ∂_d is replaced by
/// (p·∂_d[−r,−c] − ∂_d[−r,c]·∂_d[r,−c]) / p′, where p′ is the previous pivot
/// used on ∂_d (1 at first). This is fraction-free Bareiss elimination: the
/// division is exact, and each entry stays a minor of the original matrix
/// instead of picking up a factor of every earlier pivot. The result is the
/// Schur complement scaled by a unit. Column r of ∂_{d−1} and row c of
/// ∂_{d+1} are dropped, and the two basis symbols are deleted. Over the local
/// ring at (x, y, z) the result is isomorphic to a minimal resolution.
pub fn minimize(complex: &ChainComplex) -> ChainComplex {
    let field = complex.field();
    let (mut bases, mut diffs) = complex.clone().into_parts();
    let mut previous = [Polynomial::one(field), Polynomial::one(field), Polynomial::one(field)];
    while let Some((d, r, c)) = find_unit(&diffs) {
        let a = &diffs[d];
        let p = a.get(r, c).clone();
        let prev = &previous[d];
        let mut reduced = PolyMatrix::zeros(field, a.rows() - 1, a.cols() - 1);
        for (ni, i) in (0..a.rows()).filter(|&i| i != r).enumerate() {
            for (nj, j) in (0..a.cols()).filter(|&j| j != c).enumerate() {
                let v = &(&p * a.get(i, j)) - &(a.get(i, c) * a.get(r, j));
                let v = if prev.is_constant() {
                    v.scale(&prev.constant_term().inv().expect("nonzero pivot"))
                } else {
                    v.div_exact(prev).expect("Bareiss division is exact")
                };
                reduced.set(ni, nj, v);
            }
        }
        diffs[d] = reduced;
        previous[d] = p;
        if d > 0 {
            diffs[d - 1] = diffs[d - 1].remove_col(r);
        }
        if d < 2 {
            diffs[d + 1] = diffs[d + 1].remove_row(c);
        }
        // ∂_{d+1} is diffs[d]: its rows are C_d, its columns C_{d+1}.
        bases[d].remove(r);
        bases[d + 1].remove(c);
    }
    ChainComplex::new(field, bases, diffs).expect("elimination preserves shapes")
}
