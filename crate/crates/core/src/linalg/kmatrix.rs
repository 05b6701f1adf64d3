use std::fmt;

use crate::polyring::{Field, FieldElement};

/// Dense matrix over the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Reduced row echelon form with its pivot columns (0-based, increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: KMatrix,
    pub pivots: Vec<usize>,
}

impl KMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> KMatrix {
        KMatrix { field, rows, cols, data: vec![FieldElement::zero(field); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> KMatrix {
        let mut m = KMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::one(field));
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> KMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        KMatrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> KMatrix {
        let mut t = KMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = KMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Row reduction scanning columns left to right and taking the first
    /// nonzero entry at or below the current row as pivot.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j).sub(&factor.mul(m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of {v : self·v = 0}, one vector per free column.
    ///
    /// The vector for free column j is e_j − Σ R[row][j]·e_{pivot(row)}.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let Rref { matrix, pivots } = self.rref();
        (0..self.cols)
            .filter(|j| !pivots.contains(j))
            .map(|j| {
                let mut v = vec![FieldElement::zero(self.field); self.cols];
                v[j] = FieldElement::one(self.field);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = matrix.get(row, j).neg();
                }
                v
            })
            .collect()
    }

    /// Invertible P, Q with P·self·Q = [[I_r, 0], [0, 0]], r the rank.
    pub fn rank_normal_form(&self) -> (KMatrix, KMatrix, usize) {
        let (n, c) = (self.rows, self.cols);
        let mut aug = KMatrix::zeros(self.field, n, c + n);
        for i in 0..n {
            for j in 0..c {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, c + i, FieldElement::one(self.field));
        }
        let reduced = aug.rref();
        let pivots: Vec<usize> = reduced.pivots.iter().copied().filter(|&j| j < c).collect();
        let mut p = KMatrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                p.set(i, j, reduced.matrix.get(i, c + j).clone());
            }
        }
        // Clear the non-pivot columns against the pivot columns, then move
        // the pivot columns to the front.
        let order: Vec<usize> = pivots.iter().copied().chain((0..c).filter(|j| !pivots.contains(j))).collect();
        let mut q = KMatrix::zeros(self.field, c, c);
        for (new, &j) in order.iter().enumerate() {
            q.set(j, new, FieldElement::one(self.field));
            if !pivots.contains(&j) {
                for (row, &pc) in pivots.iter().enumerate() {
                    q.set(pc, new, reduced.matrix.get(row, j).neg());
                }
            }
        }
        (p, q, pivots.len())
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<KMatrix> {
        assert_eq!(self.rows, self.cols, "square matrix expected");
        let n = self.rows;
        let mut aug = KMatrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, FieldElement::one(self.field));
        }
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = KMatrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.matrix.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: &[&[i64]]) -> KMatrix {
        KMatrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&v| FieldElement::from_i64(field, v)).collect()).collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let q = Field::Rational;
        let a = m(q, &[&[0, 2, 4], &[1, 1, 1], &[1, 2, 3]]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix, m(q, &[&[1, 0, -1], &[0, 1, 2], &[0, 0, 0]]));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f5 = Field::prime(5).unwrap();
        let a = m(f5, &[&[1, 2, 3, 4], &[2, 4, 1, 3]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 4 - a.rank());
        for v in ker {
            let col = KMatrix::from_rows(f5, v.into_iter().map(|x| vec![x]).collect());
            assert!(a.mul(&col).is_zero());
        }
    }

    #[test]
    fn rank_normal_form_diagonalizes() {
        let f = Field::prime(5).unwrap();
        let a = m(f, &[&[1, 2, 0, 3], &[2, 4, 1, 1], &[3, 1, 1, 4]]);
        let (p, q, r) = a.rank_normal_form();
        assert_eq!(r, a.rank());
        let d = p.mul(&a).mul(&q);
        for i in 0..3 {
            for j in 0..4 {
                assert_eq!(d.get(i, j).is_one(), i == j && i < r);
                assert!(d.get(i, j).is_zero() || d.get(i, j).is_one());
            }
        }
        assert!(p.inverse().is_some() && q.inverse().is_some());
    }

    #[test]
    fn inverses() {
        let f7 = Field::prime(7).unwrap();
        let a = m(f7, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), KMatrix::identity(f7, 2));
        assert!(m(f7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
