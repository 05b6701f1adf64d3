use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::polyring::{Field, Polynomial};

/// Largest supported size; index subsets are keyed by a u64 bitmask.
pub const MAX_SIZE: usize = 63;

type Cache = RwLock<HashMap<u64, Arc<Polynomial>>>;

/// Odd-size skew-symmetric matrix over k[x, y, z] with zero diagonal and
/// entries in the maximal ideal.
///
/// Pfaffians of principal submatrices are memoized per matrix; clones
/// share the cache.
#[derive(Clone)]
pub struct SkewMatrix {
    field: Field,
    size: usize,
    entries: Vec<Polynomial>,
    cache: Arc<Cache>,
}

impl PartialEq for SkewMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.size == other.size && self.entries == other.entries
    }
}

impl Eq for SkewMatrix {}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewMatrix")
            .field("field", &self.field)
            .field("size", &self.size)
            .field("entries", &self.to_poly_matrix().to_strings())
            .finish()
    }
}

fn check_size(size: usize) -> Result<()> {
    if size % 2 == 0 || size > MAX_SIZE {
        return Err(Error::Argument(format!("matrix size must be odd and at most {MAX_SIZE}, got {size}")));
    }
    Ok(())
}

impl SkewMatrix {
    fn raw(field: Field, size: usize, entries: Vec<Polynomial>) -> SkewMatrix {
        SkewMatrix { field, size, entries, cache: Arc::new(RwLock::new(HashMap::new())) }
    }

    pub fn zero(field: Field, size: usize) -> Result<SkewMatrix> {
        check_size(size)?;
        Ok(SkewMatrix::raw(field, size, vec![Polynomial::zero(field); size * size]))
    }

    /// Builds T from its strictly upper-triangular entries (1-based i < j);
    /// omitted pairs are zero.
    pub fn from_upper<I>(field: Field, size: usize, upper: I) -> Result<SkewMatrix>
    where
        I: IntoIterator<Item = (usize, usize, Polynomial)>,
    {
        check_size(size)?;
        let mut entries = vec![Polynomial::zero(field); size * size];
        let mut seen = vec![false; size * size];
        for (i, j, p) in upper {
            for idx in [i, j] {
                if idx == 0 || idx > size {
                    return Err(Error::IndexOutOfRange { index: idx, size });
                }
            }
            if i >= j {
                return Err(Error::NotSkewSymmetric(i, j));
            }
            field.check_same(&p.field())?;
            if !p.in_maximal_ideal() {
                return Err(Error::EntryNotInMaximalIdeal { position: Some((i, j)), value: p.to_string() });
            }
            let at = (i - 1) * size + (j - 1);
            if seen[at] {
                return Err(Error::Argument(format!("duplicate entry ({i}, {j})")));
            }
            seen[at] = true;
            entries[(j - 1) * size + (i - 1)] = p.neg();
            entries[at] = p;
        }
        Ok(SkewMatrix::raw(field, size, entries))
    }

    /// Builds T from a full matrix, validating every invariant.
    pub fn from_matrix(m: &PolyMatrix) -> Result<SkewMatrix> {
        if m.rows() != m.cols() {
            return Err(Error::Argument("matrix must be square".into()));
        }
        let size = m.rows();
        check_size(size)?;
        for i in 0..size {
            for j in 0..size {
                let a = m.get(i, j);
                if i == j && !a.is_zero() {
                    return Err(Error::NotSkewSymmetric(i + 1, j + 1));
                }
                if a != &m.get(j, i).neg() {
                    return Err(Error::NotSkewSymmetric(i + 1, j + 1));
                }
                if !a.in_maximal_ideal() {
                    return Err(Error::EntryNotInMaximalIdeal {
                        position: Some((i + 1, j + 1)),
                        value: a.to_string(),
                    });
                }
            }
        }
        let entries = (0..size).flat_map(|i| m.row(i).to_vec()).collect();
        Ok(SkewMatrix::raw(m.field(), size, entries))
    }

    /// Parses rows of polynomial strings into a validated matrix.
    pub fn parse(field: Field, rows: &[&[&str]]) -> Result<SkewMatrix> {
        SkewMatrix::from_matrix(&PolyMatrix::parse(field, rows)?)
    }

    /// Skips all validation. Only for negative tests of the verifiers.
    #[doc(hidden)]
    pub fn from_matrix_unchecked(m: &PolyMatrix) -> SkewMatrix {
        let entries = (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect();
        SkewMatrix::raw(m.field(), m.rows(), entries)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// T_{i,j}, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * self.size + (j - 1)]
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        let rows = (0..self.size)
            .map(|i| self.entries[i * self.size..(i + 1) * self.size].to_vec())
            .collect();
        PolyMatrix::from_rows(self.field, rows).expect("square matrix")
    }

    /// Nonzero strictly upper-triangular entries (i, j, T_{i,j}).
    pub fn upper_entries(&self) -> Vec<(usize, usize, Polynomial)> {
        let mut out = Vec::new();
        for i in 1..=self.size {
            for j in i + 1..=self.size {
                let p = self.entry(i, j);
                if !p.is_zero() {
                    out.push((i, j, p.clone()));
                }
            }
        }
        out
    }

    /// P·T·Pᵀ where `order[a]` is the old index placed at new position a+1.
    pub fn permute(&self, order: &[usize]) -> Result<SkewMatrix> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.size).collect::<Vec<_>>() {
            return Err(Error::Argument("not a permutation of 1..=m".into()));
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for &a in order {
            for &b in order {
                entries.push(self.entry(a, b).clone());
            }
        }
        Ok(SkewMatrix::raw(self.field, n, entries))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size {
            Err(Error::IndexOutOfRange { index: i, size: self.size })
        } else {
            Ok(())
        }
    }

    /// pf of the principal submatrix on a strictly increasing index list.
    pub fn pfaffian_keep(&self, indices: &[usize]) -> Result<Polynomial> {
        let mut mask = 0u64;
        for (n, &i) in indices.iter().enumerate() {
            self.check_index(i)?;
            if mask & bit(i) != 0 {
                return Err(Error::RepeatedIndex(i));
            }
            if n > 0 && indices[n - 1] > i {
                return Err(Error::Argument("indices must be increasing".into()));
            }
            mask |= bit(i);
        }
        Ok((*self.pf_mask(mask)).clone())
    }

    /// pf of T with the listed rows and columns removed; 0 on repeats.
    pub fn pfaffian_drop(&self, removed: &[usize]) -> Result<Polynomial> {
        for &i in removed {
            self.check_index(i)?;
        }
        Ok((*self.pf_without(removed)).clone())
    }

    /// Unchecked `pfaffian_drop` for internal callers; indices must be in range.
    pub(crate) fn pf_without(&self, removed: &[usize]) -> Arc<Polynomial> {
        let mut mask = self.full_mask();
        for &i in removed {
            debug_assert!(i >= 1 && i <= self.size);
            if mask & bit(i) == 0 {
                return Arc::new(Polynomial::zero(self.field));
            }
            mask &= !bit(i);
        }
        self.pf_mask(mask)
    }

    /// y_i = (−1)^{i+1} pf_drop{i}.
    pub fn generator(&self, i: usize) -> Polynomial {
        self.pf_without(&[i]).signed(if i % 2 == 1 { 1 } else { -1 })
    }

    /// (y_1, …, y_m).
    pub fn generators(&self) -> Vec<Polynomial> {
        (1..=self.size).map(|i| self.generator(i)).collect()
    }

    fn full_mask(&self) -> u64 {
        ((1u64 << self.size) - 1) << 1
    }

    /// Expansion along the smallest index b of S:
    /// Pf(S) = Σ_q (−1)^{q−1} T_{b,s_q} Pf(S ∖ {b, s_q}).
    pub(crate) fn pf_mask(&self, mask: u64) -> Arc<Polynomial> {
        let n = mask.count_ones();
        if n % 2 == 1 {
            return Arc::new(Polynomial::zero(self.field));
        }
        if n == 0 {
            return Arc::new(Polynomial::one(self.field));
        }
        if let Some(p) = self.cache.read().get(&mask) {
            return p.clone();
        }
        let value = Arc::new(self.expand(mask, |m| self.pf_mask(m)));
        self.cache.write().insert(mask, value.clone());
        value
    }

    fn expand(&self, mask: u64, sub: impl Fn(u64) -> Arc<Polynomial>) -> Polynomial {
        let b = mask.trailing_zeros() as usize;
        let rest = mask & !bit(b);
        let mut acc = Polynomial::zero(self.field);
        let mut q = 0usize;
        let mut bits = rest;
        while bits != 0 {
            let r = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            q += 1;
            let t = self.entry(b, r);
            if t.is_zero() {
                continue;
            }
            let pf = sub(rest & !bit(r));
            if pf.is_zero() {
                continue;
            }
            let term = t * &pf;
            if q % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    /// The same recursion without memoization; exponential, for cross-checks.
    pub fn pfaffian_keep_uncached(&self, indices: &[usize]) -> Result<Polynomial> {
        let mut mask = 0u64;
        for &i in indices {
            self.check_index(i)?;
            mask |= bit(i);
        }
        fn go(t: &SkewMatrix, mask: u64) -> Polynomial {
            match mask.count_ones() {
                0 => Polynomial::one(t.field),
                n if n % 2 == 1 => Polynomial::zero(t.field),
                _ => t.expand(mask, |m| Arc::new(go(t, m))),
            }
        }
        Ok(go(self, mask))
    }

    /// Number of memoized subsets.
    pub fn cached_pfaffians(&self) -> usize {
        self.cache.read().len()
    }
}

#[inline]
fn bit(i: usize) -> u64 {
    1u64 << i
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SkewMatrix {
        let f2 = Field::prime(2).unwrap();
        SkewMatrix::parse(
            f2,
            &[
                &["0", "0", "0", "x", "z"],
                &["0", "0", "x", "z", "y"],
                &["0", "x", "0", "y", "0"],
                &["x", "z", "y", "0", "0"],
                &["z", "y", "0", "0", "0"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn submaximal_pfaffians() {
        let t = example();
        let f2 = t.field();
        let expected = ["y^2", "y*z", "x*y + z^2", "x*z", "x^2"];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(t.pfaffian_drop(&[i + 1]).unwrap(), Polynomial::parse(e, f2).unwrap());
        }
        assert!(t.pfaffian_drop(&[2, 2]).unwrap().is_zero());
    }

    #[test]
    fn conventions() {
        let t = example();
        assert!(t.pfaffian_keep(&[]).unwrap() == Polynomial::one(t.field()));
        assert!(t.pfaffian_keep(&[1, 2, 3]).unwrap().is_zero());
        assert!(matches!(t.pfaffian_keep(&[1, 6]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(t.pfaffian_keep(&[2, 2]), Err(Error::RepeatedIndex(2))));
        assert!(matches!(t.pfaffian_drop(&[0]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn four_by_four_expansion() {
        let q = Field::Rational;
        let names = ["x", "y", "z", "x^2", "y^2", "z^2"];
        let mut upper = Vec::new();
        let mut n = 0;
        for i in 1..=4 {
            for j in i + 1..=4 {
                upper.push((i, j, Polynomial::parse(names[n], q).unwrap()));
                n += 1;
            }
        }
        let t = SkewMatrix::from_upper(q, 5, upper).unwrap();
        let e = |i, j| t.entry(i, j).clone();
        let expected = &(&(&e(1, 2) * &e(3, 4)) - &(&e(1, 3) * &e(2, 4))) + &(&e(1, 4) * &e(2, 3));
        assert_eq!(t.pfaffian_keep(&[1, 2, 3, 4]).unwrap(), expected);
    }

    #[test]
    fn validation() {
        let q = Field::Rational;
        let x = Polynomial::var(q, 1);
        assert!(matches!(
            SkewMatrix::from_upper(q, 5, [(1, 2, &x + &Polynomial::one(q))]),
            Err(Error::EntryNotInMaximalIdeal { position: Some((1, 2)), .. })
        ));
        assert!(matches!(SkewMatrix::from_upper(q, 5, [(2, 1, x.clone())]), Err(Error::NotSkewSymmetric(2, 1))));
        assert!(SkewMatrix::from_upper(q, 4, []).is_err());
        let sym = PolyMatrix::parse(q, &[&["0", "x", "0"], &["x", "0", "0"], &["0", "0", "0"]]).unwrap();
        assert!(matches!(SkewMatrix::from_matrix(&sym), Err(Error::NotSkewSymmetric(1, 2))));
    }

    #[test]
    fn permuting() {
        let t = example();
        let p = t.permute(&[3, 1, 2, 4, 5]).unwrap();
        assert_eq!(p.entry(1, 2), t.entry(3, 1));
        assert_eq!(p.pfaffian_drop(&[1]).unwrap(), t.pfaffian_drop(&[3]).unwrap());
    }
}
