use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use rayon::prelude::*;

use super::basis::BasisElement;
use super::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::pfaffian::{sigma3, SkewMatrix};
use crate::polyring::{Field, Polynomial};

/// Koszul index pairs in basis order.
pub const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Position of (a, b), a < b, in [`PAIRS`].
pub fn pair_index(a: usize, b: usize) -> usize {
    match (a, b) {
        (1, 2) => 0,
        (1, 3) => 1,
        (2, 3) => 2,
        _ => panic!("invalid Koszul pair ({a}, {b})"),
    }
}

/// Key of a cached constant d^{k,i,j}_{a,b}.
pub(crate) type TripleKey = (usize, usize, usize, usize, usize);

/// Matrix-level data shared by every trimming of the same T: the
/// decomposition table c, the generators y, and caches of constants.
pub struct TrimSource {
    matrix: SkewMatrix,
    c: Vec<[Polynomial; 3]>,
    y: Vec<Polynomial>,
    pub(crate) triple_constants: RwLock<HashMap<TripleKey, Arc<Polynomial>>>,
}

impl TrimSource {
    pub fn new(matrix: &SkewMatrix) -> Result<Arc<TrimSource>> {
        let m = matrix.size();
        let c = (0..m * m)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / m + 1, idx % m + 1);
                matrix.entry(j, i).decompose_c().map_err(|_| Error::EntryNotInMaximalIdeal {
                    position: Some((j, i)),
                    value: matrix.entry(j, i).to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let y = (1..=m).into_par_iter().map(|i| matrix.generator(i)).collect();
        Ok(Arc::new(TrimSource { matrix: matrix.clone(), c, y, triple_constants: RwLock::new(HashMap::new()) }))
    }

    pub fn matrix(&self) -> &SkewMatrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// c_{i,j,l}, with T_{j,i} = Σ_l c_{i,j,l} z_l.
    pub fn c(&self, i: usize, j: usize, l: usize) -> &Polynomial {
        &self.c[(i - 1) * self.size() + (j - 1)][l - 1]
    }

    /// y_i = (−1)^{i+1} pf_drop{i}.
    pub fn y(&self, i: usize) -> &Polynomial {
        &self.y[i - 1]
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.y
    }

    /// pf of T with the listed indices removed (0 on repeats).
    pub(crate) fn pf(&self, removed: &[usize]) -> Arc<Polynomial> {
        self.matrix.pf_without(removed)
    }

    /// d^k_{a,b} = Σ_i Σ_r σ_{i,k,r} c_{i,k,b} c_{r,k,a} pf{i,k,r}, for any a ≠ b.
    pub fn koszul_constant(&self, k: usize, a: usize, b: usize) -> Polynomial {
        let m = self.size();
        let mut acc = Polynomial::zero(self.field());
        for i in 1..=m {
            let ci = self.c(i, k, b);
            if ci.is_zero() {
                continue;
            }
            for r in 1..=m {
                let s = sigma3(i, k, r);
                let cr = self.c(r, k, a);
                if s.is_zero() || cr.is_zero() {
                    continue;
                }
                let term = &(ci * cr) * &self.pf(&[i, k, r]);
                acc += &term.signed(s.value());
            }
        }
        acc
    }
}

/// The trimmed resolution of J for a fixed trim count t, together with
/// the data it is built from.
#[derive(Clone)]
pub struct TrimmedData {
    source: Arc<TrimSource>,
    t: usize,
    dk: Vec<[Polynomial; 3]>,
    q1: PolyMatrix,
    q2: PolyMatrix,
    complex: ChainComplex,
}

impl TrimmedData {
    pub fn new(source: Arc<TrimSource>, t: usize) -> Result<TrimmedData> {
        let m = source.size();
        if t == 0 || t > m {
            return Err(Error::Argument(format!("trim count {t} outside 1..={m}")));
        }
        let field = source.field();
        let dk: Vec<[Polynomial; 3]> = (1..=t)
            .into_par_iter()
            .map(|k| PAIRS.map(|(a, b)| source.koszul_constant(k, a, b)))
            .collect();
        let mut q1 = PolyMatrix::zeros(field, 3 * t, m);
        let mut q2 = PolyMatrix::zeros(field, 3 * t, 1);
        for k in 1..=t {
            for l in 1..=3 {
                for i in 1..=m {
                    q1.set(3 * (k - 1) + l - 1, i - 1, source.c(i, k, l).clone());
                }
                q2.set(3 * (k - 1) + l - 1, 0, dk[k - 1][l - 1].clone());
            }
        }
        let complex = build_complex(&source, t, &q1, &q2)?;
        Ok(TrimmedData { source, t, dk, q1, q2, complex })
    }

    pub fn source(&self) -> &Arc<TrimSource> {
        &self.source
    }

    pub fn matrix(&self) -> &SkewMatrix {
        self.source.matrix()
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn size(&self) -> usize {
        self.source.size()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn c(&self, i: usize, j: usize, l: usize) -> &Polynomial {
        self.source.c(i, j, l)
    }

    pub fn y(&self, i: usize) -> &Polynomial {
        self.source.y(i)
    }

    /// d^k_{a,b} for a ≠ b, with d^k_{b,a} = −d^k_{a,b}.
    pub fn dk(&self, k: usize, a: usize, b: usize) -> Polynomial {
        if a < b {
            self.dk[k - 1][pair_index(a, b)].clone()
        } else {
            self.dk[k - 1][pair_index(b, a)].neg()
        }
    }

    /// Q₁: rows u^k_l (3t), columns f_i (m).
    pub fn q1(&self) -> &PolyMatrix {
        &self.q1
    }

    /// Q₂: rows v^k_{ab} (3t), one column g.
    pub fn q2(&self) -> &PolyMatrix {
        &self.q2
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    /// A copy with Q₂ and the d^k constants replaced by zero. Only for
    /// negative tests of the verifiers.
    #[doc(hidden)]
    pub fn with_zero_q2(&self) -> TrimmedData {
        let field = self.field();
        let q2 = PolyMatrix::zeros(field, 3 * self.t, 1);
        let complex = build_complex(&self.source, self.t, &self.q1, &q2).expect("same shapes");
        TrimmedData {
            dk: vec![[0, 1, 2].map(|_| Polynomial::zero(field)); self.t],
            q2,
            complex,
            ..self.clone()
        }
    }
}

/// Convenience wrapper: builds the shared source and trims the first t generators.
pub fn trimmed_resolution(t_matrix: &SkewMatrix, t: usize) -> Result<TrimmedData> {
    TrimmedData::new(TrimSource::new(t_matrix)?, t)
}

fn koszul_deltas(field: Field) -> (Vec<Polynomial>, PolyMatrix, Vec<Polynomial>) {
    let z = |l| Polynomial::var(field, l);
    let zero = Polynomial::zero(field);
    let d1 = vec![z(1), z(2), z(3)];
    let d2 = PolyMatrix::from_rows(
        field,
        vec![
            vec![z(2).neg(), z(3).neg(), zero.clone()],
            vec![z(1), zero.clone(), z(3).neg()],
            vec![zero, z(1), z(2)],
        ],
    )
    .expect("3x3");
    let d3 = vec![z(3), z(2).neg(), z(1)];
    (d1, d2, d3)
}

fn trimmed_bases(m: usize, t: usize) -> [Vec<BasisElement>; 4] {
    let mut b1: Vec<BasisElement> = (t + 1..=m).map(BasisElement::E).collect();
    let mut b2: Vec<BasisElement> = (1..=m).map(BasisElement::F).collect();
    let mut b3 = vec![BasisElement::G];
    for k in 1..=t {
        b1.extend((1..=3).map(|l| BasisElement::U { k, l }));
        b2.extend(PAIRS.iter().map(|&(a, b)| BasisElement::V { k, a, b }));
        b3.push(BasisElement::W(k));
    }
    [vec![BasisElement::One], b1, b2, b3]
}

fn build_complex(source: &TrimSource, t: usize, q1: &PolyMatrix, q2: &PolyMatrix) -> Result<ChainComplex> {
    let m = source.size();
    let field = source.field();
    let (d1, d2, d3) = koszul_deltas(field);
    let bases = trimmed_bases(m, t);
    let kept = m - t;

    let mut p1 = PolyMatrix::zeros(field, 1, kept + 3 * t);
    for j in t + 1..=m {
        p1.set(0, j - t - 1, source.y(j).clone());
    }
    for k in 1..=t {
        for l in 1..=3 {
            p1.set(0, kept + 3 * (k - 1) + l - 1, (source.y(k) * &d1[l - 1]).neg());
        }
    }

    let mut p2 = PolyMatrix::zeros(field, kept + 3 * t, m + 3 * t);
    for j in t + 1..=m {
        for i in 1..=m {
            p2.set(j - t - 1, i - 1, source.matrix().entry(j, i).clone());
        }
    }
    for row in 0..3 * t {
        for i in 0..m {
            p2.set(kept + row, i, q1.get(row, i).neg());
        }
    }
    for k in 0..t {
        for a in 0..3 {
            for b in 0..3 {
                p2.set(kept + 3 * k + a, m + 3 * k + b, d2.get(a, b).clone());
            }
        }
    }

    let mut p3 = PolyMatrix::zeros(field, m + 3 * t, 1 + t);
    for i in 1..=m {
        p3.set(i - 1, 0, source.y(i).clone());
    }
    for k in 0..t {
        for a in 0..3 {
            p3.set(m + 3 * k + a, 0, q2.get(3 * k + a, 0).clone());
            p3.set(m + 3 * k + a, 1 + k, d3[a].clone());
        }
    }
    ChainComplex::new(field, bases, [p1, p2, p3])
}

/// The Buchsbaum–Eisenbud resolution 0 → R → R^m → R^m → R of R/I with
/// D₁ = (y_1 … y_m), D₂ = T, D₃ = D₁ᵀ.
pub fn gorenstein_resolution(t_matrix: &SkewMatrix) -> ChainComplex {
    let m = t_matrix.size();
    let field = t_matrix.field();
    let y = t_matrix.generators();
    let d1 = PolyMatrix::from_rows(field, vec![y.clone()]).expect("one row");
    let d2 = t_matrix.to_poly_matrix();
    let d3 = d1.transpose();
    let bases = [
        vec![BasisElement::One],
        (1..=m).map(BasisElement::E).collect(),
        (1..=m).map(BasisElement::F).collect(),
        vec![BasisElement::G],
    ];
    ChainComplex::new(field, bases, [d1, d2, d3]).expect("consistent shapes")
}
