#![allow(dead_code)]

use trimtor::linalg::PolyMatrix;
use trimtor::pfaffian::SkewMatrix;
use trimtor::{Field, Polynomial};

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}

pub fn poly(field: Field, s: &str) -> Polynomial {
    Polynomial::parse(s, field).unwrap()
}

pub fn matrix(field: Field, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::parse(field, rows).unwrap()
}

/// The 5×5 matrix over F₂ with pfaffians y², yz, xy+z², xz, x².
pub fn example_matrix() -> SkewMatrix {
    SkewMatrix::parse(
        f2(),
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

/// Sign of the permutation taking `from` to `to` (same elements), by
/// counting crossing pairs in the two-row diagram.
pub fn crossing_sign(from: &[usize], to: &[usize]) -> i32 {
    let pos: Vec<usize> = from.iter().map(|a| to.iter().position(|b| b == a).unwrap()).collect();
    let mut crossings = 0;
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            if pos[a] > pos[b] {
                crossings += 1;
            }
        }
    }
    if crossings % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Pfaffian as a signed sum over perfect matchings.
pub fn matching_pfaffian(t: &SkewMatrix, indices: &[usize]) -> Polynomial {
    let field = t.field();
    if indices.is_empty() {
        return Polynomial::one(field);
    }
    if indices.len() % 2 == 1 {
        return Polynomial::zero(field);
    }
    let mut acc = Polynomial::zero(field);
    let mut used = vec![false; indices.len()];
    let mut word = Vec::new();
    fn go(t: &SkewMatrix, idx: &[usize], used: &mut Vec<bool>, word: &mut Vec<usize>, acc: &mut Polynomial) {
        let Some(first) = (0..idx.len()).find(|&n| !used[n]) else {
            let mut prod = Polynomial::one(t.field());
            for pair in word.chunks(2) {
                prod = &prod * t.entry(idx[pair[0]], idx[pair[1]]);
            }
            let sorted: Vec<usize> = (0..idx.len()).collect();
            *acc = &*acc + &prod.signed(crossing_sign(&sorted, word));
            return;
        };
        used[first] = true;
        for second in first + 1..idx.len() {
            if used[second] {
                continue;
            }
            used[second] = true;
            word.push(first);
            word.push(second);
            go(t, idx, used, word, acc);
            word.truncate(word.len() - 2);
            used[second] = false;
        }
        used[first] = false;
    }
    go(t, indices, &mut used, &mut word, &mut acc);
    acc
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(a: &PolyMatrix) -> Polynomial {
    let n = a.rows();
    let field = a.field();
    if n == 0 {
        return Polynomial::one(field);
    }
    let mut acc = Polynomial::zero(field);
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = cofactor_det(&a.submatrix(&rows, &cols));
        let term = a.get(0, j) * &minor;
        acc = &acc + &term.signed(if j % 2 == 0 { 1 } else { -1 });
    }
    acc
}

/// Builds a chain element from (label, coefficient) pairs.
pub fn element(field: Field, degree: usize, terms: &[(&str, &str)]) -> trimtor::dgproducts::ChainElement {
    let mut e = trimtor::dgproducts::ChainElement::zero(field, degree);
    for (label, c) in terms {
        e.add_term(label.parse().unwrap(), &poly(field, c));
    }
    e
}

pub fn basis(label: &str) -> trimtor::resolution::BasisElement {
    label.parse().unwrap()
}

/// (−1)^{i+1} sgn((m)∖{i} → j r (m)∖{i,j,r}).
pub fn sigma3_oracle(i: usize, j: usize, r: usize) -> i32 {
    if i == j || j == r || i == r {
        return 0;
    }
    let m = i.max(j).max(r);
    let from: Vec<usize> = (1..=m).filter(|&x| x != i).collect();
    let to: Vec<usize> = [j, r].into_iter().chain((1..=m).filter(|x| ![i, j, r].contains(x))).collect();
    let s = crossing_sign(&from, &to);
    if i % 2 == 1 {
        s
    } else {
        -s
    }
}

/// sgn((m)∖{i,j,r} → k h (m)∖{i,j,r,k,h}).
pub fn sigma5_oracle(i: usize, j: usize, r: usize, h: usize, k: usize) -> i32 {
    let idx = [i, j, r, h, k];
    if (0..5).any(|a| (a + 1..5).any(|b| idx[a] == idx[b])) {
        return 0;
    }
    let m = *idx.iter().max().unwrap();
    let from: Vec<usize> = (1..=m).filter(|x| ![i, j, r].contains(x)).collect();
    let to: Vec<usize> = [k, h].into_iter().chain((1..=m).filter(|x| !idx.contains(x))).collect();
    crossing_sign(&from, &to)
}
