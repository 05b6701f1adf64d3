use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::element::ChainElement;
use super::product::{gorenstein_product, positive_basis, Multiplier};
use crate::error::Result;
use crate::pfaffian::SkewMatrix;
use crate::polyring::{Field, Polynomial};
use crate::resolution::{gorenstein_resolution, BasisElement, TrimmedData};

/// Products of all ordered pairs of positive-degree basis elements with
/// degree sum at most 3. Pairs of higher degree are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTable {
    field: Field,
    entries: BTreeMap<(BasisElement, BasisElement), ChainElement>,
}

/// One serialized table entry.
#[derive(Clone, Debug, Serialize)]
pub struct ProductRecord {
    pub x: String,
    pub y: String,
    pub product: Vec<(String, String)>,
}

impl ProductTable {
    fn build<F>(field: Field, basis: &[BasisElement], f: F) -> Result<ProductTable>
    where
        F: Fn(BasisElement, BasisElement) -> Result<ChainElement> + Sync,
    {
        let pairs: Vec<_> = basis
            .iter()
            .flat_map(|&x| basis.iter().map(move |&y| (x, y)))
            .filter(|(x, y)| x.degree() + y.degree() <= 3)
            .collect();
        let entries = pairs
            .into_par_iter()
            .map(|(x, y)| Ok(((x, y), f(x, y)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(ProductTable { field, entries })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// x·y for basis elements; zero for unlisted pairs of degree sum ≥ 4,
    /// the other factor for the unit.
    pub fn get(&self, x: BasisElement, y: BasisElement) -> ChainElement {
        match (x, y) {
            (BasisElement::One, b) | (b, BasisElement::One) => return ChainElement::basis(self.field, b),
            _ => {}
        }
        self.entries
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| ChainElement::zero(self.field, (x.degree() + y.degree()).min(3)))
    }

    /// Number of stored pairs.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored entries in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&(BasisElement, BasisElement), &ChainElement)> {
        self.entries.iter()
    }

    /// Bilinear extension to arbitrary elements; degree-0 factors act as scalars.
    pub fn multiply(&self, a: &ChainElement, b: &ChainElement) -> ChainElement {
        let deg = a.degree() + b.degree();
        let mut out = ChainElement::zero(self.field, deg.min(3));
        if deg > 3 {
            return out;
        }
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                let c: Polynomial = cx * cy;
                for (z, cz) in self.get(*x, *y).terms() {
                    out.add_term(*z, &(cz * &c));
                }
            }
        }
        out
    }

    /// Pairs violating y·x = (−1)^{|x||y|} x·y or x·x = 0 for odd x.
    pub fn commutativity_failures(&self) -> Vec<(BasisElement, BasisElement)> {
        self.entries
            .iter()
            .filter(|((x, y), xy)| {
                if x == y && x.degree() % 2 == 1 {
                    return !xy.is_zero();
                }
                let sign = if x.degree() * y.degree() % 2 == 1 { -1 } else { 1 };
                self.get(*y, *x) != xy.signed(sign)
            })
            .map(|(k, _)| *k)
            .collect()
    }

    /// Replaces one entry. Only for negative tests.
    #[doc(hidden)]
    pub fn insert(&mut self, x: BasisElement, y: BasisElement, value: ChainElement) {
        self.entries.insert((x, y), value);
    }

    /// Entries in deterministic order as string records.
    pub fn to_records(&self) -> Vec<ProductRecord> {
        self.entries
            .iter()
            .map(|((x, y), p)| ProductRecord { x: x.to_string(), y: y.to_string(), product: p.to_record() })
            .collect()
    }
}

/// The full product table of a trimmed resolution.
pub fn full_table(td: &TrimmedData) -> ProductTable {
    let mult = Multiplier::new(td);
    let basis = positive_basis(td.complex());
    ProductTable::build(td.field(), &basis, |x, y| mult.product(x, y)).expect("basis elements come from the complex")
}

/// The product table of the Buchsbaum–Eisenbud resolution of R/I.
pub fn gorenstein_table(t: &SkewMatrix) -> ProductTable {
    let basis: Vec<_> = (1..=3).flat_map(|d| gorenstein_resolution(t).basis(d).to_vec()).collect();
    ProductTable::build(t.field(), &basis, |x, y| gorenstein_product(t, x, y)).expect("valid basis")
}
