use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;

use super::field::{Coefficient, Field, FieldElement};
use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Terms {
    Modular(Vec<(Monomial, u32)>),
    Rational(Vec<(Monomial, BigRational)>),
}

/// Sparse polynomial in x, y, z over a [`Field`].
///
/// Terms are kept sorted by decreasing monomial (graded lex) with no zero
/// coefficients, so derived equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    terms: Terms,
}

fn add_terms<C: Coefficient>(a: &[(Monomial, C)], b: &[(Monomial, C)], p: u32) -> Vec<(Monomial, C)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1.add(&b[j].1, p);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sort by decreasing monomial, merge duplicates, drop zeros.
fn normalize<C: Coefficient>(mut v: Vec<(Monomial, C)>, p: u32) -> Vec<(Monomial, C)> {
    v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(Monomial, C)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = last.1.add(&c, p),
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|l| l.1.is_zero()) {
        out.pop();
    }
    out
}

fn mul_terms<C: Coefficient>(a: &[(Monomial, C)], b: &[(Monomial, C)], p: u32) -> Vec<(Monomial, C)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.len() == 1 {
        // A monomial order is preserved by multiplication, so no resort.
        let (m, c) = &short[0];
        return long
            .iter()
            .filter_map(|(n, d)| {
                let e = c.mul(d, p);
                (!e.is_zero()).then(|| (m.mul(*n), e))
            })
            .collect();
    }
    let mut v = Vec::with_capacity(a.len() * b.len());
    for (m, c) in short {
        for (n, d) in long {
            v.push((m.mul(*n), c.mul(d, p)));
        }
    }
    normalize(v, p)
}

impl Polynomial {
    pub fn zero(field: Field) -> Polynomial {
        let terms = match field {
            Field::Prime { .. } => Terms::Modular(Vec::new()),
            Field::Rational => Terms::Rational(Vec::new()),
        };
        Polynomial { field, terms }
    }

    pub fn one(field: Field) -> Polynomial {
        Polynomial::constant(FieldElement::one(field))
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        Polynomial::term(Monomial::ONE, c)
    }

    /// The variable z_l (x, y, z for l = 1, 2, 3).
    pub fn var(field: Field, l: usize) -> Polynomial {
        Polynomial::term(Monomial::var(l), FieldElement::one(field))
    }

    pub fn term(m: Monomial, c: FieldElement) -> Polynomial {
        Polynomial::from_terms(c.field(), [(m, c)])
    }

    pub fn from_i64(field: Field, n: i64) -> Polynomial {
        Polynomial::constant(FieldElement::from_i64(field, n))
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    ///
    /// Panics if a coefficient belongs to another field.
    pub fn from_terms<I>(field: Field, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let p = field.modulus();
        let terms = match field {
            Field::Prime { p: q } => Terms::Modular(normalize(
                terms
                    .into_iter()
                    .map(|(m, c)| match c {
                        FieldElement::Modular { value, p } if p == q => (m, value),
                        other => panic!("coefficient {other:?} is not in {field}"),
                    })
                    .collect(),
                p,
            )),
            Field::Rational => Terms::Rational(normalize(
                terms
                    .into_iter()
                    .map(|(m, c)| match c {
                        FieldElement::Rational(q) => (m, q),
                        other => panic!("coefficient {other:?} is not in {field}"),
                    })
                    .collect(),
                p,
            )),
        };
        Polynomial { field, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        match &self.terms {
            Terms::Modular(v) => v.len(),
            Terms::Rational(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> Vec<(Monomial, FieldElement)> {
        match &self.terms {
            Terms::Modular(v) => {
                let p = self.field.modulus();
                v.iter().map(|(m, c)| (*m, FieldElement::Modular { value: *c, p })).collect()
            }
            Terms::Rational(v) => v.iter().map(|(m, c)| (*m, FieldElement::Rational(c.clone()))).collect(),
        }
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        match &self.terms {
            Terms::Modular(v) => v.iter().map(|t| t.0).collect(),
            Terms::Rational(v) => v.iter().map(|t| t.0).collect(),
        }
    }

    pub fn coefficient(&self, m: Monomial) -> FieldElement {
        let p = self.field.modulus();
        match &self.terms {
            Terms::Modular(v) => match v.binary_search_by(|t| m.cmp(&t.0)) {
                Ok(i) => FieldElement::Modular { value: v[i].1, p },
                Err(_) => FieldElement::zero(self.field),
            },
            Terms::Rational(v) => match v.binary_search_by(|t| m.cmp(&t.0)) {
                Ok(i) => FieldElement::Rational(v[i].1.clone()),
                Err(_) => FieldElement::zero(self.field),
            },
        }
    }

    /// Coefficient of the monomial 1; this is the image in R/m = k.
    pub fn constant_term(&self) -> FieldElement {
        self.coefficient(Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.monomials().iter().all(|m| m.is_one())
    }

    /// Zero constant term, i.e. membership in m = (x, y, z).
    pub fn in_maximal_ideal(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Unit of the local ring: nonzero constant term.
    pub fn is_unit(&self) -> bool {
        !self.in_maximal_ideal()
    }

    /// Total degree of the leading term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.monomials().first().map(|m| m.degree())
    }

    /// Smallest total degree of a term, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.monomials().iter().map(|m| m.degree()).min()
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        let p = self.field.modulus();
        let terms = match (&self.terms, &other.terms) {
            (Terms::Modular(a), Terms::Modular(b)) => Terms::Modular(add_terms(a, b, p)),
            (Terms::Rational(a), Terms::Rational(b)) => Terms::Rational(add_terms(a, b, p)),
            _ => unreachable!("terms match the field"),
        };
        Ok(Polynomial { field: self.field, terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        let p = self.field.modulus();
        let terms = match (&self.terms, &other.terms) {
            (Terms::Modular(a), Terms::Modular(b)) => Terms::Modular(mul_terms(a, b, p)),
            (Terms::Rational(a), Terms::Rational(b)) => Terms::Rational(mul_terms(a, b, p)),
            _ => unreachable!("terms match the field"),
        };
        Ok(Polynomial { field: self.field, terms })
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.field.modulus();
        let terms = match &self.terms {
            Terms::Modular(v) => Terms::Modular(v.iter().map(|(m, c)| (*m, c.neg(p))).collect()),
            Terms::Rational(v) => Terms::Rational(v.iter().map(|(m, c)| (*m, -c)).collect()),
        };
        Polynomial { field: self.field, terms }
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        self * &Polynomial::constant(c.clone())
    }

    /// Multiplication by ±1 or 0.
    pub fn signed(&self, sign: i32) -> Polynomial {
        match sign {
            0 => Polynomial::zero(self.field),
            s if s > 0 => self.clone(),
            _ => self.neg(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        self * &Polynomial::term(m, FieldElement::one(self.field))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical decomposition f = c₁x + c₂y + c₃z.
    ///
    /// Each monomial goes to the first variable (x, then y, then z) that
    /// divides it.
    pub fn decompose_c(&self) -> Result<[Polynomial; 3]> {
        if !self.in_maximal_ideal() {
            return Err(Error::EntryNotInMaximalIdeal { position: None, value: self.to_string() });
        }
        let mut parts: [Vec<(Monomial, FieldElement)>; 3] = Default::default();
        for (m, c) in self.terms() {
            let l = (1..=3).find(|&l| m.div_var(l).is_some()).expect("nonconstant monomial");
            parts[l - 1].push((m.div_var(l).unwrap(), c));
        }
        Ok(parts.map(|v| Polynomial::from_terms(self.field, v)))
    }

    /// self / d when d divides self exactly, else `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = d.terms().into_iter().next()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms().into_iter().next() {
            if !lm.divides(m) {
                return None;
            }
            let e = m.exponents();
            let f = lm.exponents();
            let q = Polynomial::term(Monomial::new([e[0] - f[0], e[1] - f[1], e[2] - f[2]]), c.mul(&lc_inv));
            rem = &rem - &(&q * d);
            quotient.extend(q.terms());
        }
        Some(Polynomial::from_terms(self.field, quotient))
    }

    /// Keeps only the constant term.
    pub fn reduce_mod_m(&self) -> Polynomial {
        Polynomial::constant(self.constant_term())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials over different fields")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials over different fields")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
