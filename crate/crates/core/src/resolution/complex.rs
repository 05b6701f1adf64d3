use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::basis::BasisElement;
use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::polyring::{Field, Polynomial};

/// A complex 0 → C₃ → C₂ → C₁ → C₀ of free modules with labeled bases.
///
/// `differential(d)` is ∂_d : C_d → C_{d−1}, with rows indexed by the
/// basis of C_{d−1} and columns by the basis of C_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: Field,
    bases: [Vec<BasisElement>; 4],
    differentials: [PolyMatrix; 3],
    positions: [HashMap<BasisElement, usize>; 4],
}

impl ChainComplex {
    pub fn new(field: Field, bases: [Vec<BasisElement>; 4], differentials: [PolyMatrix; 3]) -> Result<ChainComplex> {
        for (d, m) in differentials.iter().enumerate() {
            field.check_same(&m.field())?;
            if m.rows() != bases[d].len() || m.cols() != bases[d + 1].len() {
                return Err(Error::Argument(format!(
                    "differential {} is {}x{} but the bases have sizes {} and {}",
                    d + 1,
                    m.rows(),
                    m.cols(),
                    bases[d].len(),
                    bases[d + 1].len()
                )));
            }
        }
        let positions = bases.clone().map(|b| b.into_iter().enumerate().map(|(n, e)| (e, n)).collect::<HashMap<_, _>>());
        for (d, (b, p)) in bases.iter().zip(&positions).enumerate() {
            if p.len() != b.len() {
                return Err(Error::Argument(format!("repeated basis label in degree {d}")));
            }
        }
        Ok(ChainComplex { field, bases, differentials, positions })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Basis of C_d, d ∈ 0..=3.
    pub fn basis(&self, d: usize) -> &[BasisElement] {
        &self.bases[d]
    }

    pub fn rank(&self, d: usize) -> usize {
        self.bases[d].len()
    }

    pub fn ranks(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|d| self.rank(d))
    }

    /// ∂_d for d ∈ 1..=3.
    pub fn differential(&self, d: usize) -> &PolyMatrix {
        assert!((1..=3).contains(&d), "differential index {d} out of range");
        &self.differentials[d - 1]
    }

    /// Position of a basis symbol in degree d.
    pub fn position(&self, d: usize, b: &BasisElement) -> Option<usize> {
        self.positions.get(d)?.get(b).copied()
    }

    pub fn contains(&self, b: &BasisElement) -> bool {
        self.position(b.degree(), b).is_some()
    }

    /// Degrees d ∈ {1, 2} with ∂_d ∘ ∂_{d+1} ≠ 0.
    pub fn d_squared_failures(&self) -> Vec<usize> {
        (1..=2)
            .filter(|&d| {
                !self
                    .differential(d)
                    .try_mul(self.differential(d + 1))
                    .expect("compatible shapes")
                    .is_zero()
            })
            .collect()
    }

    pub fn is_complex(&self) -> bool {
        self.d_squared_failures().is_empty()
    }

    /// True when every differential entry lies in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|m| {
            (0..m.rows()).all(|i| m.row(i).iter().all(Polynomial::in_maximal_ideal))
        })
    }

    pub(crate) fn into_parts(self) -> ([Vec<BasisElement>; 4], [PolyMatrix; 3]) {
        (self.bases, self.differentials)
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            field: self.field,
            bases: self.bases.clone().to_vec(),
            differentials: (1..=3)
                .map(|d| DifferentialDocument { degree: d, entries: self.differential(d).to_strings() })
                .collect(),
        }
    }

    pub fn from_document(doc: &ComplexDocument) -> Result<ChainComplex> {
        let bases: [Vec<BasisElement>; 4] = doc
            .bases
            .clone()
            .try_into()
            .map_err(|_| Error::Argument("expected four bases".into()))?;
        if doc.differentials.len() != 3 {
            return Err(Error::Argument("expected three differentials".into()));
        }
        let mut diffs = Vec::new();
        for (n, dd) in doc.differentials.iter().enumerate() {
            if dd.degree != n + 1 {
                return Err(Error::Argument("differentials must be listed by degree".into()));
            }
            let rows = dd
                .entries
                .iter()
                .map(|row| row.iter().map(|s| Polynomial::parse(s, doc.field)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let m = if rows.is_empty() {
                PolyMatrix::zeros(doc.field, 0, bases[n + 1].len())
            } else {
                PolyMatrix::from_rows(doc.field, rows)?
            };
            diffs.push(m);
        }
        let diffs: [PolyMatrix; 3] = diffs.try_into().expect("three differentials");
        ChainComplex::new(doc.field, bases, diffs)
    }
}

/// Serialized form: basis labels per degree and differentials as rows of
/// polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub field: Field,
    pub bases: Vec<Vec<BasisElement>>,
    pub differentials: Vec<DifferentialDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDocument {
    pub degree: usize,
    pub entries: Vec<Vec<String>>,
}
