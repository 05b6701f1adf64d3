use std::fmt;

use serde::Serialize;

use super::report::q1_bar;
use crate::dgproducts::{full_table, ProductTable};
use crate::linalg::KMatrix;
use crate::polyring::{Field, FieldElement};
use crate::resolution::{BasisElement, TrimmedData};

/// A k-linear combination of basis symbols of C⊗k.
pub type Representative = Vec<(BasisElement, FieldElement)>;

/// Multiplication on Tor = H(C⊗k) in chosen bases of Tor₁, Tor₂, Tor₃.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorProductTable {
    field: Field,
    labels: [Vec<String>; 3],
    /// [a][b] ↦ coordinates of 𝖾_a·𝖾_b in Tor₂.
    one_one: Vec<Vec<Vec<FieldElement>>>,
    /// [a][b] ↦ coordinates of 𝖾_a·𝖿_b in Tor₃.
    one_two: Vec<Vec<Vec<FieldElement>>>,
}

/// A nonzero product of two basis classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorProduct {
    pub x: String,
    pub y: String,
    pub product: Vec<(String, String)>,
}

fn nonzero(v: &[FieldElement]) -> bool {
    v.iter().any(|c| !c.is_zero())
}

impl TorProductTable {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimensions of Tor₁, Tor₂, Tor₃.
    pub fn dims(&self) -> [usize; 3] {
        [0, 1, 2].map(|d| self.labels[d].len())
    }

    /// Basis labels of Tor_d, d ∈ 1..=3.
    pub fn labels(&self, d: usize) -> &[String] {
        &self.labels[d - 1]
    }

    pub fn has_degree_one_products(&self) -> bool {
        self.one_one.iter().flatten().any(|v| nonzero(v))
    }

    /// All nonzero products of basis classes with degree sum ≤ 3.
    pub fn nonzero_products(&self) -> Vec<TorProduct> {
        let mut out = Vec::new();
        let render = |coords: &[FieldElement], labels: &[String]| -> Vec<(String, String)> {
            coords
                .iter()
                .zip(labels)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, l)| (l.clone(), c.to_string()))
                .collect()
        };
        for (a, row) in self.one_one.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if nonzero(v) {
                    out.push(TorProduct {
                        x: self.labels[0][a].clone(),
                        y: self.labels[0][b].clone(),
                        product: render(v, &self.labels[1]),
                    });
                }
            }
        }
        for (a, row) in self.one_two.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if nonzero(v) {
                    out.push(TorProduct {
                        x: self.labels[0][a].clone(),
                        y: self.labels[1][b].clone(),
                        product: render(v, &self.labels[2]),
                    });
                }
            }
        }
        out
    }

    /// When Tor₁·Tor₁ = 0 and Tor₁·Tor₂ spans at most a line of Tor₃,
    /// returns the spanning vector and the scalar pairing matrix.
    fn line_pairing(&self) -> Option<(Vec<FieldElement>, KMatrix)> {
        if self.has_degree_one_products() {
            return None;
        }
        let [n1, n2, n3] = self.dims();
        let zero = FieldElement::zero(self.field);
        let gamma = self
            .one_two
            .iter()
            .flatten()
            .find(|v| nonzero(v))
            .cloned()
            .unwrap_or_else(|| {
                let mut v = vec![zero.clone(); n3];
                if n3 > 0 {
                    v[0] = FieldElement::one(self.field);
                }
                v
            });
        let lead = gamma.iter().position(|c| !c.is_zero())?;
        let lead_inv = gamma[lead].inv().expect("nonzero");
        let mut pairing = KMatrix::zeros(self.field, n1, n2);
        for a in 0..n1 {
            for b in 0..n2 {
                let v = &self.one_two[a][b];
                let lambda = v[lead].mul(&lead_inv);
                if v.iter().zip(&gamma).any(|(x, g)| *x != lambda.mul(g)) {
                    return None;
                }
                pairing.set(a, b, lambda);
            }
        }
        Some((gamma, pairing))
    }

    /// r when the table is a class G(r) table: no products of degree-1
    /// classes and a Tor₁ × Tor₂ pairing of rank r into a single line.
    pub fn g_rank(&self) -> Option<usize> {
        self.line_pairing().map(|(_, p)| p.rank())
    }

    /// The same multiplication after a change of bases of Tor₁, Tor₂, Tor₃
    /// making the pairing diagonal, so the only nonzero products are
    /// 𝖾′_i·𝖿′_i = 𝗀′ for i ≤ r. `None` unless the table has class G shape.
    pub fn normal_form(&self) -> Option<TorProductTable> {
        let (gamma, pairing) = self.line_pairing()?;
        let [n1, n2, n3] = self.dims();
        let field = self.field;
        let zero = FieldElement::zero(field);
        let (p, q, _) = pairing.rank_normal_form();
        let q_inv = q.inverse().expect("invertible");
        // Tor₃ basis: γ first, then the standard vectors other than its lead.
        let lead = gamma.iter().position(|c| !c.is_zero())?;
        let mut basis3 = KMatrix::zeros(field, n3, n3);
        let mut col = 1;
        for i in 0..n3 {
            basis3.set(i, 0, gamma[i].clone());
            if i != lead {
                basis3.set(i, col, FieldElement::one(field));
                col += 1;
            }
        }
        let to_new3 = basis3.inverse().expect("γ is nonzero");
        let apply = |m: &KMatrix, v: &[FieldElement]| -> Vec<FieldElement> {
            (0..m.rows()).map(|i| v.iter().enumerate().fold(zero.clone(), |acc, (j, x)| acc.add(&m.get(i, j).mul(x)))).collect()
        };
        let one_one = (0..n1)
            .map(|a| (0..n1).map(|b| apply(&q_inv, &bilinear(field, &self.one_one, |x| p.get(a, x).clone(), |y| p.get(b, y).clone(), n2))).collect())
            .collect();
        let one_two = (0..n1)
            .map(|a| (0..n2).map(|b| apply(&to_new3, &bilinear(field, &self.one_two, |x| p.get(a, x).clone(), |y| q.get(y, b).clone(), n3))).collect())
            .collect();
        let labels = [
            (1..=n1).map(|i| format!("e'{i}")).collect(),
            (1..=n2).map(|i| format!("f'{i}")).collect(),
            (1..=n3).map(|i| if i == 1 { "g'".to_string() } else { format!("w'{}", i - 1) }).collect(),
        ];
        Some(TorProductTable { field, labels, one_one, one_two })
    }

    /// True when this is exactly the class G(r) table in its own bases:
    /// 𝖾_i·𝖿_i = the first Tor₃ basis class for i ≤ r and all else zero.
    pub fn is_standard_g_table(&self, r: usize) -> bool {
        if self.has_degree_one_products() {
            return false;
        }
        self.one_two.iter().enumerate().all(|(a, row)| {
            row.iter().enumerate().all(|(b, v)| {
                v.iter().enumerate().all(|(c, x)| {
                    let expected = a == b && a < r && c == 0;
                    if expected {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
        })
    }
}

impl fmt::Display for TorProductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [n1, n2, n3] = self.dims();
        write!(f, "tor dims: ({n1}, {n2}, {n3})")?;
        for p in self.nonzero_products() {
            let rhs: Vec<String> = p.product.iter().map(|(l, c)| if c == "1" { l.clone() } else { format!("{c}*{l}") }).collect();
            write!(f, "\n{}*{} = {}", p.x, p.y, rhs.join(" + "))?;
        }
        Ok(())
    }
}

/// Σ_{x,y} left(x)·right(y)·table[x][y].
fn bilinear(
    field: Field,
    table: &[Vec<Vec<FieldElement>>],
    left: impl Fn(usize) -> FieldElement,
    right: impl Fn(usize) -> FieldElement,
    len: usize,
) -> Vec<FieldElement> {
    let mut acc = vec![FieldElement::zero(field); len];
    for (x, row) in table.iter().enumerate() {
        let lx = left(x);
        if lx.is_zero() {
            continue;
        }
        for (y, v) in row.iter().enumerate() {
            let c = lx.mul(&right(y));
            if c.is_zero() {
                continue;
            }
            for (k, vk) in v.iter().enumerate() {
                acc[k] = acc[k].add(&c.mul(vk));
            }
        }
    }
    acc
}

fn rep_label(rep: &Representative) -> String {
    if let [(b, c)] = rep.as_slice() {
        if c.is_one() {
            return b.to_string();
        }
    }
    rep.iter()
        .map(|(b, c)| if c.is_one() { b.to_string() } else { format!("{c}*{b}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// x·y reduced modulo m, as coordinates on the basis of C_{|x|+|y|}.
fn reduced_product(td: &TrimmedData, table: &ProductTable, x: &Representative, y: &Representative, degree: usize) -> Vec<FieldElement> {
    let basis = td.complex().basis(degree);
    let mut out = vec![FieldElement::zero(td.field()); basis.len()];
    for (a, ca) in x {
        for (b, cb) in y {
            let coeff = ca.mul(cb);
            for (z, cz) in table.get(*a, *b).terms() {
                let k = cz.constant_term();
                if !k.is_zero() {
                    let pos = td.complex().position(degree, z).expect("basis element");
                    out[pos] = out[pos].add(&k.mul(&coeff));
                }
            }
        }
    }
    out
}

/// The multiplication on Tor induced by the full product table, reduced mod m.
pub fn tor_products(td: &TrimmedData) -> TorProductTable {
    tor_products_with(td, &full_table(td))
}

/// As [`tor_products`], reusing an already computed table.
///
/// Tor₁ is represented by every e_i together with the u^k_l outside the
/// column space of Q₁⊗k; Tor₂ by the kernel vectors f′_j = f_j + Σ α_{j,l} f_l
/// of Q₁⊗k (one per non-pivot column j) and every v^k_{a,b}; Tor₃ by g, w^k.
pub fn tor_products_with(td: &TrimmedData, table: &ProductTable) -> TorProductTable {
    let field = td.field();
    let m = td.size();
    let t = td.t();
    let one = FieldElement::one(field);
    let q = q1_bar(td.matrix(), t);

    let mut tor1: Vec<Representative> = (t + 1..=m).map(|i| vec![(BasisElement::E(i), one.clone())]).collect();
    let image_pivots = q.transpose().rref().pivots;
    for row in 0..3 * t {
        if !image_pivots.contains(&row) {
            tor1.push(vec![(BasisElement::U { k: row / 3 + 1, l: row % 3 + 1 }, one.clone())]);
        }
    }

    let kernel = q.kernel();
    let pivots = q.rref().pivots;
    let free: Vec<usize> = (0..m).filter(|j| !pivots.contains(j)).collect();
    let mut tor2: Vec<Representative> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (BasisElement::F(i + 1), c.clone()))
                .collect()
        })
        .collect();
    let v_start = tor2.len();
    for b in td.complex().basis(2) {
        if let BasisElement::V { .. } = b {
            tor2.push(vec![(*b, one.clone())]);
        }
    }
    let tor3: Vec<Representative> = td.complex().basis(3).iter().map(|b| vec![(*b, one.clone())]).collect();

    let c2 = td.complex().basis(2);
    let to_tor2 = |coords: Vec<FieldElement>| -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(field); tor2.len()];
        for (n, &j) in free.iter().enumerate() {
            out[n] = coords[j].clone();
        }
        for (n, rep) in tor2.iter().enumerate().skip(v_start) {
            let pos = td.complex().position(2, &rep[0].0).expect("v basis");
            out[n] = coords[pos].clone();
        }
        debug_assert_eq!(c2.len(), coords.len());
        out
    };

    let one_one = tor1
        .iter()
        .map(|x| tor1.iter().map(|y| to_tor2(reduced_product(td, table, x, y, 2))).collect())
        .collect();
    let one_two = tor1
        .iter()
        .map(|x| tor2.iter().map(|y| reduced_product(td, table, x, y, 3)).collect())
        .collect();
    let labels = [&tor1, &tor2, &tor3].map(|reps| reps.iter().map(rep_label).collect());
    TorProductTable { field, labels, one_one, one_two }
}
