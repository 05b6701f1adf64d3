use super::constants::{d2, d3, d4, sigma_pf_c};
use super::element::ChainElement;
use crate::error::{Error, Result};
use crate::pfaffian::{sigma3, SkewMatrix};
use crate::polyring::{Field, Polynomial};
use crate::resolution::{BasisElement, ChainComplex, TrimSource, TrimmedData, PAIRS};

use BasisElement::{One, E, F, G, U, V, W};

/// Koszul sign of u_l·v_{a,b} = ±w, zero when l ∈ {a, b}.
pub(crate) fn koszul_uv(l: usize, a: usize, b: usize) -> i32 {
    if l == a || l == b {
        0
    } else if l % 2 == 1 {
        1
    } else {
        -1
    }
}

fn third(a: usize, b: usize) -> usize {
    6 - a - b
}

fn parity(n: usize) -> i32 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// e_i·_F e_j = Σ_r σ_{i,j,r} pf{i,j,r} f_r, scaled by `scale`.
fn add_ef_ee(out: &mut ChainElement, t: &SkewMatrix, i: usize, j: usize, scale: &Polynomial) {
    if scale.is_zero() {
        return;
    }
    for r in 1..=t.size() {
        let s = sigma3(i, j, r);
        if s.is_zero() {
            continue;
        }
        let pf = t.pf_without(&[i, j, r]);
        if !pf.is_zero() {
            out.add_term(F(r), &(&*pf * scale).signed(s.value()));
        }
    }
}

/// Product in the Buchsbaum–Eisenbud resolution of R/I.
///
/// Odd squares are zero and the remaining pairs follow from graded
/// commutativity.
pub fn gorenstein_product(t: &SkewMatrix, x: BasisElement, y: BasisElement) -> Result<ChainElement> {
    let field = t.field();
    for b in [x, y] {
        let ok = match b {
            One | G => true,
            E(i) | F(i) => (1..=t.size()).contains(&i),
            _ => false,
        };
        if !ok {
            return Err(Error::Argument(format!("{b} is not a basis element of the Gorenstein resolution")));
        }
    }
    let deg = x.degree() + y.degree();
    let mut out = ChainElement::zero(field, deg.min(3));
    if deg > 3 {
        return Ok(ChainElement::zero(field, 3));
    }
    let one = Polynomial::one(field);
    match (x, y) {
        (One, b) | (b, One) => out.add_term(b, &one),
        (E(i), E(j)) => {
            if i < j {
                add_ef_ee(&mut out, t, i, j, &one)
            } else if i > j {
                add_ef_ee(&mut out, t, j, i, &one.neg())
            }
        }
        (E(i), F(j)) | (F(j), E(i)) => {
            if i == j {
                out.add_term(G, &one)
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Evaluates the DG product of two basis elements of a trimmed resolution.
pub(crate) struct Multiplier<'a> {
    td: &'a TrimmedData,
    src: &'a TrimSource,
    field: Field,
}

impl<'a> Multiplier<'a> {
    pub(crate) fn new(td: &'a TrimmedData) -> Multiplier<'a> {
        Multiplier { td, src: td.source(), field: td.field() }
    }

    fn z(&self, l: usize) -> Polynomial {
        Polynomial::var(self.field, l)
    }

    fn add_v_terms(&self, out: &mut ChainElement, coeff: impl Fn(usize, usize, usize) -> Polynomial) {
        for k in 1..=self.td.t() {
            for &(a, b) in &PAIRS {
                out.add_term(V { k, a, b }, &coeff(k, a, b));
            }
        }
    }

    /// a. e_i·e_j for i ≠ j, both > t.
    fn ee(&self, i: usize, j: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 2);
        add_ef_ee(&mut out, self.src.matrix(), i, j, &Polynomial::one(self.field));
        self.add_v_terms(&mut out, |k, a, b| d2(self.src, k, i, j, a, b));
        out
    }

    /// b. e_j·u^i_l with i ≤ t < j.
    fn eu(&self, j: usize, i: usize, l: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 2);
        add_ef_ee(&mut out, self.src.matrix(), i, j, &self.z(l));
        self.add_v_terms(&mut out, |k, a, b| d3(self.src, k, i, j, l, a, b));
        out
    }

    /// c. u^i_l·u^i_s = −y_i v^i_{l,s} for l < s.
    fn uu_same(&self, i: usize, l: usize, s: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 2);
        out.add_term(V { k: i, a: l, b: s }, &self.src.y(i).neg());
        out
    }

    /// d. u^i_l·u^j_s for i < j.
    fn uu(&self, i: usize, l: usize, j: usize, s: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 2);
        add_ef_ee(&mut out, self.src.matrix(), i, j, &(&self.z(l) * &self.z(s)));
        self.add_v_terms(&mut out, |k, a, b| d4(self.src, k, i, j, l, s, a, b));
        out
    }

    /// e. e_i·f_j with i > t.
    fn ef(&self, i: usize, j: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 3);
        if j > self.td.t() {
            if i == j {
                out.add_term(G, &Polynomial::one(self.field));
            }
        } else {
            out.add_term(W(j), &self.ef_coefficient(i, j));
        }
        out
    }

    /// Σ_r c_{r,j,3} d^{j,i,r}_{1,2}, the w^j coefficient of e_i·f_j for j ≤ t.
    fn ef_coefficient(&self, i: usize, j: usize) -> Polynomial {
        let mut acc = Polynomial::zero(self.field);
        for r in 1..=self.src.size() {
            let c = self.src.c(r, j, 3);
            if !c.is_zero() {
                acc += &(c * &d2(self.src, j, i, r, 1, 2));
            }
        }
        acc
    }

    /// f. e_j·v^i_{a,b}.
    fn ev(&self, j: usize, i: usize, a: usize, b: usize) -> ChainElement {
        let p = third(a, b);
        let mut out = ChainElement::zero(self.field, 3);
        out.add_term(W(i), &sigma_pf_c(self.src, i, j, i, p).signed(parity(p)));
        out
    }

    /// g and h. u^i_l·v^j_{a,b}.
    fn uv(&self, i: usize, l: usize, j: usize, a: usize, b: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 3);
        if i == j {
            let s = koszul_uv(l, a, b);
            if s != 0 {
                out.add_term(W(i), &self.src.y(i).signed(-s));
            }
        } else {
            let p = third(a, b);
            let c = &self.z(l) * &sigma_pf_c(self.src, i, j, j, p);
            out.add_term(W(j), &c.signed(parity(p)));
        }
        out
    }

    /// i. u^i_l·f_j.
    fn uf(&self, i: usize, l: usize, j: usize) -> ChainElement {
        let mut out = ChainElement::zero(self.field, 3);
        if i == j {
            out.add_term(G, &self.z(l).neg());
            let (phi, psi) = match l {
                1 => (2, 3),
                2 => (1, 3),
                _ => (1, 2),
            };
            out.add_term(W(i), &self.td.dk(i, phi, psi).signed(parity(l + 1)));
        } else if j <= self.td.t() {
            out.add_term(W(j), &(&self.z(l) * &self.ef_coefficient(i, j)).neg());
        }
        out
    }

    fn check(&self, b: &BasisElement) -> Result<()> {
        if self.td.complex().contains(b) {
            Ok(())
        } else {
            Err(Error::Argument(format!("{b} is not a basis element of this complex")))
        }
    }

    pub(crate) fn product(&self, x: BasisElement, y: BasisElement) -> Result<ChainElement> {
        self.check(&x)?;
        self.check(&y)?;
        let deg = x.degree() + y.degree();
        if deg > 3 {
            return Ok(ChainElement::zero(self.field, 3));
        }
        Ok(match (x, y) {
            (One, b) | (b, One) => ChainElement::basis(self.field, b),
            // degree 1 × degree 1
            (E(i), E(j)) if i < j => self.ee(i, j),
            (E(i), E(j)) if i > j => self.ee(j, i).neg(),
            (E(j), U { k: i, l }) => self.eu(j, i, l),
            (U { k: i, l }, E(j)) => self.eu(j, i, l).neg(),
            (U { k: i, l }, U { k: j, l: s }) if i == j && l < s => self.uu_same(i, l, s),
            (U { k: i, l }, U { k: j, l: s }) if i == j && l > s => self.uu_same(i, s, l).neg(),
            (U { k: i, l }, U { k: j, l: s }) if i < j => self.uu(i, l, j, s),
            (U { k: i, l }, U { k: j, l: s }) if i > j => self.uu(j, s, i, l).neg(),
            // degree 1 × degree 2, and the reverse with the same sign
            (E(i), F(j)) | (F(j), E(i)) => self.ef(i, j),
            (E(j), V { k: i, a, b }) | (V { k: i, a, b }, E(j)) => self.ev(j, i, a, b),
            (U { k: i, l }, V { k: j, a, b }) | (V { k: j, a, b }, U { k: i, l }) => self.uv(i, l, j, a, b),
            (U { k: i, l }, F(j)) | (F(j), U { k: i, l }) => self.uf(i, l, j),
            // odd squares
            _ => ChainElement::zero(self.field, deg),
        })
    }
}

/// The DG product x·y on the trimmed resolution.
pub fn product(td: &TrimmedData, x: BasisElement, y: BasisElement) -> Result<ChainElement> {
    Multiplier::new(td).product(x, y)
}

/// Basis of a complex in degrees 1..=3, in order.
pub(crate) fn positive_basis(c: &ChainComplex) -> Vec<BasisElement> {
    (1..=3).flat_map(|d| c.basis(d).iter().copied()).collect()
}
