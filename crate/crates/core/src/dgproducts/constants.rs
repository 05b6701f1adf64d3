use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pfaffian::{sigma3, sigma5};
use crate::polyring::Polynomial;
use crate::resolution::{TrimSource, TrimmedData};

/// The families of correction constants d, indexed by their superscripts.
///
/// Each is antisymmetric in its subscript pair: d_{b,a} = −d_{a,b}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DConstant {
    /// d^k_{a,b}, the entries of Q₂.
    Koszul { k: usize },
    /// d^{k,i,j}_{a,b}.
    Two { k: usize, i: usize, j: usize },
    /// d^{k,i,j,l}_{a,b}.
    Three { k: usize, i: usize, j: usize, l: usize },
    /// d^{k,i,j,l,s}_{a,b}.
    Four { k: usize, i: usize, j: usize, l: usize, s: usize },
}

/// Σ_r σ_{i,j,r} pf{i,j,r} c_{r,q,p}.
pub(crate) fn sigma_pf_c(src: &TrimSource, i: usize, j: usize, q: usize, p: usize) -> Polynomial {
    let mut acc = Polynomial::zero(src.field());
    for r in 1..=src.size() {
        let s = sigma3(i, j, r);
        let c = src.c(r, q, p);
        if s.is_zero() || c.is_zero() {
            continue;
        }
        acc += &(c * &src.pf(&[i, j, r])).signed(s.value());
    }
    acc
}

/// d^{k,i,j}_{a,b} for a < b, memoized on the source.
fn two_index(src: &TrimSource, k: usize, i: usize, j: usize, a: usize, b: usize) -> Arc<Polynomial> {
    let key = (k, i, j, a, b);
    if let Some(p) = src.triple_constants.read().get(&key) {
        return p.clone();
    }
    let m = src.size();
    let mut acc = Polynomial::zero(src.field());
    for r in 1..=m {
        let s3 = sigma3(i, j, r);
        let cr = src.c(r, k, b);
        if s3.is_zero() || cr.is_zero() {
            continue;
        }
        for h in 1..=m {
            let s5 = sigma5(i, j, r, h, k);
            let ch = src.c(h, k, a);
            if s5.is_zero() || ch.is_zero() {
                continue;
            }
            let pf = src.pf(&[i, j, r, h, k]);
            if pf.is_zero() {
                continue;
            }
            acc += &(&(cr * ch) * &pf).signed((s3 * s5).value());
        }
    }
    let value = Arc::new(acc);
    src.triple_constants.write().insert(key, value.clone());
    value
}

/// d^{k,i,j}_{a,b} for any a ≠ b.
pub(crate) fn d2(src: &TrimSource, k: usize, i: usize, j: usize, a: usize, b: usize) -> Polynomial {
    if a < b {
        (*two_index(src, k, i, j, a, b)).clone()
    } else {
        two_index(src, k, i, j, b, a).neg()
    }
}

/// The index of {1,2,3} ∖ {a, b}.
fn third(a: usize, b: usize) -> usize {
    6 - a - b
}

/// d^{k,i,j,l}_{a,b} for a < b.
fn three_index(src: &TrimSource, k: usize, i: usize, j: usize, l: usize, a: usize, b: usize) -> Polynomial {
    let field = src.field();
    if k != i {
        return &Polynomial::var(field, l) * &d2(src, k, i, j, a, b);
    }
    if l == third(a, b) {
        Polynomial::zero(field)
    } else if l == a {
        sigma_pf_c(src, i, j, i, b)
    } else {
        sigma_pf_c(src, i, j, i, a).neg()
    }
}

/// d^{k,i,j,l,s}_{a,b} for a < b.
fn four_index(src: &TrimSource, k: usize, i: usize, j: usize, l: usize, s: usize, a: usize, b: usize) -> Polynomial {
    let field = src.field();
    let z = |n| Polynomial::var(field, n);
    if k != i && k != j {
        &(&z(l) * &z(s)) * &d2(src, k, i, j, a, b)
    } else if k == i {
        &z(s) * &three_index(src, i, i, j, l, a, b)
    } else if s == third(a, b) {
        Polynomial::zero(field)
    } else if s == a {
        &z(l) * &sigma_pf_c(src, i, j, j, b)
    } else {
        (&z(l) * &sigma_pf_c(src, i, j, j, a)).neg()
    }
}

/// Evaluates a correction constant with subscripts (a, b), a ≠ b.
pub fn d_constant(td: &TrimmedData, which: DConstant, a: usize, b: usize) -> Result<Polynomial> {
    let m = td.size();
    let t = td.t();
    let bad = |what: &str| Err(Error::Argument(format!("{what} in {which:?}")));
    if a == b || !(1..=3).contains(&a) || !(1..=3).contains(&b) {
        return bad("invalid subscript pair");
    }
    let (k, i, j) = match which {
        DConstant::Koszul { k } => (k, 1, 1),
        DConstant::Two { k, i, j } | DConstant::Three { k, i, j, .. } | DConstant::Four { k, i, j, .. } => (k, i, j),
    };
    if !(1..=t).contains(&k) {
        return bad("k outside 1..=t");
    }
    if !(1..=m).contains(&i) || !(1..=m).contains(&j) {
        return bad("index outside 1..=m");
    }
    let src = td.source();
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let value = match which {
        DConstant::Koszul { k } => td.dk(k, lo, hi),
        DConstant::Two { k, i, j } => d2(src, k, i, j, lo, hi),
        DConstant::Three { k, i, j, l } => {
            if !(1..=3).contains(&l) {
                return bad("l outside 1..=3");
            }
            three_index(src, k, i, j, l, lo, hi)
        }
        DConstant::Four { k, i, j, l, s } => {
            if !(1..=3).contains(&l) || !(1..=3).contains(&s) {
                return bad("l or s outside 1..=3");
            }
            if k == i && i == j {
                return bad("k = i = j is not a defined case");
            }
            four_index(src, k, i, j, l, s, lo, hi)
        }
    };
    Ok(value.signed(sign))
}

pub(crate) fn d3(src: &TrimSource, k: usize, i: usize, j: usize, l: usize, a: usize, b: usize) -> Polynomial {
    if a < b {
        three_index(src, k, i, j, l, a, b)
    } else {
        three_index(src, k, i, j, l, b, a).neg()
    }
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn d4(src: &TrimSource, k: usize, i: usize, j: usize, l: usize, s: usize, a: usize, b: usize) -> Polynomial {
    if a < b {
        four_index(src, k, i, j, l, s, a, b)
    } else {
        four_index(src, k, i, j, l, s, b, a).neg()
    }
}
