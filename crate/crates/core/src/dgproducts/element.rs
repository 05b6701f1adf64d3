use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{Field, Polynomial};
use crate::resolution::{BasisElement, ChainComplex};

/// A homogeneous element Σ c_b·b of a complex, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainElement {
    field: Field,
    degree: usize,
    coords: BTreeMap<BasisElement, Polynomial>,
}

impl ChainElement {
    pub fn zero(field: Field, degree: usize) -> ChainElement {
        ChainElement { field, degree, coords: BTreeMap::new() }
    }

    /// The basis symbol itself, with coefficient 1.
    pub fn basis(field: Field, b: BasisElement) -> ChainElement {
        let mut e = ChainElement::zero(field, b.degree());
        e.add_term(b, &Polynomial::one(field));
        e
    }

    /// A degree-0 element c·1.
    pub fn scalar(c: Polynomial) -> ChainElement {
        let mut e = ChainElement::zero(c.field(), 0);
        e.add_term(BasisElement::One, &c);
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Nonzero coordinates in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Polynomial)> {
        self.coords.iter()
    }

    pub fn coefficient(&self, b: &BasisElement) -> Polynomial {
        self.coords.get(b).cloned().unwrap_or_else(|| Polynomial::zero(self.field))
    }

    /// Adds c·b; panics if b has the wrong degree.
    pub fn add_term(&mut self, b: BasisElement, c: &Polynomial) {
        assert_eq!(b.degree(), self.degree, "{b} does not have degree {}", self.degree);
        if c.is_zero() {
            return;
        }
        let sum = match self.coords.get(&b) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coords.remove(&b);
        } else {
            self.coords.insert(b, sum);
        }
    }

    /// Removes the coordinate of b. Only for negative tests.
    #[doc(hidden)]
    pub fn remove_term(&mut self, b: &BasisElement) {
        self.coords.remove(b);
    }

    pub fn add(&self, other: &ChainElement) -> ChainElement {
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, c);
        }
        out
    }

    pub fn sub(&self, other: &ChainElement) -> ChainElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChainElement {
        ChainElement {
            coords: self.coords.iter().map(|(b, c)| (*b, c.neg())).collect(),
            ..self.clone()
        }
    }

    /// Multiplication by a ring element.
    pub fn scale(&self, c: &Polynomial) -> ChainElement {
        let mut out = ChainElement::zero(self.field, self.degree);
        if c.is_zero() {
            return out;
        }
        for (b, d) in self.terms() {
            out.add_term(*b, &(d * c));
        }
        out
    }

    /// Multiplication by ±1.
    pub fn signed(&self, sign: i32) -> ChainElement {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// ∂ applied in the given complex; the zero element of degree 0 for degree 0.
    pub fn boundary(&self, complex: &ChainComplex) -> Result<ChainElement> {
        if self.degree == 0 {
            return Ok(ChainElement::zero(self.field, 0));
        }
        let d = complex.differential(self.degree);
        let mut out = ChainElement::zero(self.field, self.degree - 1);
        for (b, c) in self.terms() {
            let col = complex
                .position(self.degree, b)
                .ok_or_else(|| Error::Argument(format!("{b} is not a basis element of this complex")))?;
            for (row, target) in complex.basis(self.degree - 1).iter().enumerate() {
                let entry = d.get(row, col);
                if !entry.is_zero() {
                    out.add_term(*target, &(entry * c));
                }
            }
        }
        Ok(out)
    }

    /// Coordinates as (label, polynomial) string pairs.
    pub fn to_record(&self) -> Vec<(String, String)> {
        self.terms().map(|(b, c)| (b.to_string(), c.to_string())).collect()
    }
}

impl Serialize for ChainElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if c.len() == 1 => (true, rest.to_string()),
                _ => (false, text),
            };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let label = if *b == BasisElement::One { String::new() } else { b.to_string() };
            match (body.as_str(), label.is_empty()) {
                (_, true) => write!(f, "{body}")?,
                ("1", false) => write!(f, "{label}")?,
                (_, false) if c.len() > 1 => write!(f, "({body})*{label}")?,
                (_, false) => write!(f, "{body}*{label}")?,
            }
        }
        Ok(())
    }
}
