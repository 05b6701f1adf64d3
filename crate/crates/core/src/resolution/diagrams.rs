use serde::Serialize;

use super::trimmed::TrimmedData;
use crate::linalg::PolyMatrix;
use crate::polyring::Polynomial;

/// Which commuting square failed for which Koszul copy k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramFailure {
    pub k: usize,
    /// 1 for δ₁ᵏ∘q₁ᵏ = D₀ᵏ′, 2 for δ₂ᵏ∘q₂ᵏ = q₁ᵏ∘D₃.
    pub diagram: u8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub failures: Vec<DiagramFailure>,
}

impl DiagramReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks both commuting diagrams relating F to each Koszul copy.
pub fn verify_diagrams(td: &TrimmedData) -> DiagramReport {
    let field = td.field();
    let m = td.size();
    let z = |l| Polynomial::var(field, l);
    let mut failures = Vec::new();
    for k in 1..=td.t() {
        let rows: Vec<usize> = (3 * (k - 1)..3 * k).collect();
        let q1k = td.q1().submatrix(&rows, &(0..m).collect::<Vec<_>>());
        let q2k = td.q2().submatrix(&rows, &[0]);

        // δ₁ᵏ∘q₁ᵏ(f_i) against the e_k coordinate of D₂(f_i), namely T_{k,i}.
        let delta1 = PolyMatrix::from_rows(field, vec![vec![z(1), z(2), z(3)]]).expect("row");
        let lhs = delta1.try_mul(&q1k).expect("shapes");
        let rhs = PolyMatrix::from_rows(field, vec![(1..=m).map(|i| td.matrix().entry(k, i).clone()).collect()])
            .expect("row");
        if lhs != rhs {
            failures.push(DiagramFailure { k, diagram: 1 });
        }

        let delta2 = PolyMatrix::from_rows(
            field,
            vec![
                vec![z(2).neg(), z(3).neg(), Polynomial::zero(field)],
                vec![z(1), Polynomial::zero(field), z(3).neg()],
                vec![Polynomial::zero(field), z(1), z(2)],
            ],
        )
        .expect("3x3");
        let d3 = PolyMatrix::from_rows(field, (1..=m).map(|i| vec![td.y(i).clone()]).collect()).expect("column");
        if delta2.try_mul(&q2k).expect("shapes") != q1k.try_mul(&d3).expect("shapes") {
            failures.push(DiagramFailure { k, diagram: 2 });
        }
    }
    DiagramReport { failures }
}
