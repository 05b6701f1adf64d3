use std::fmt;

use rayon::prelude::*;

use super::KMatrix;
use crate::error::{Error, Result};
use crate::polyring::{Field, Polynomial};

/// Dense matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { field, rows, cols, data: vec![Polynomial::zero(field); rows * cols] }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Argument("ragged matrix rows".into()));
        }
        for p in rows.iter().flatten() {
            field.check_same(&p.field())?;
        }
        Ok(PolyMatrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Parses rows of polynomial strings.
    pub fn parse(field: Field, rows: &[&[&str]]) -> Result<PolyMatrix> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| Polynomial::parse(s, field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(field, rows)
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

    /// Entry at 0-based (i, j).
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix { data: self.data.iter().map(Polynomial::neg).collect(), ..self.clone() }
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.field.check_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::Argument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / other.cols, idx % other.cols);
                let mut acc = Polynomial::zero(self.field);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(PolyMatrix { field: self.field, rows: self.rows, cols: other.cols, data })
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.field.check_same(&other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Argument("matrix shapes differ".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(PolyMatrix { data, ..self.clone() })
    }

    /// Entrywise constant terms, i.e. the matrix tensored with k.
    pub fn constant_part(&self) -> KMatrix {
        let mut k = KMatrix::zeros(self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                k.set(i, j, self.get(i, j).constant_term());
            }
        }
        k
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn remove_row(&self, r: usize) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        self.submatrix(&rows, &(0..self.cols).collect::<Vec<_>>())
    }

    pub fn remove_col(&self, c: usize) -> PolyMatrix {
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != c).collect();
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &cols)
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Argument("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = Polynomial::one(self.field);
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return Ok(Polynomial::zero(self.field));
                };
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(a.get(k, k) * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                    let v = num.div_exact(&prev).expect("Bareiss division is exact");
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(if n == 0 { Polynomial::one(self.field) } else { a.get(n - 1, n - 1).signed(sign) })
    }

    /// Entries rendered with the polynomial text grammar.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let q = Field::Rational;
        let a = PolyMatrix::parse(q, &[&["x", "y"], &["0", "z"]]).unwrap();
        let b = PolyMatrix::parse(q, &[&["y"], &["-x"]]).unwrap();
        let ab = a.try_mul(&b).unwrap();
        assert_eq!(ab, PolyMatrix::parse(q, &[&["0"], &["-x*z"]]).unwrap());
        assert_eq!(a.transpose().transpose(), a);
        assert!(b.try_mul(&b).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let q = Field::Rational;
        let a = PolyMatrix::parse(q, &[&["x", "y", "1"], &["z", "0", "x"], &["y^2", "1", "z"]]).unwrap();
        // x(0·z − x·1) − y(z·z − x·y²) + 1(z·1 − 0·y²)
        let expected = Polynomial::parse("-x^2 - y*z^2 + x*y^3 + z", q).unwrap();
        assert_eq!(a.determinant().unwrap(), expected);
        let singular = PolyMatrix::parse(q, &[&["0", "x"], &["0", "y"]]).unwrap();
        assert!(singular.determinant().unwrap().is_zero());
    }
}
