use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::KMatrix;
use crate::pfaffian::SkewMatrix;
use crate::polyring::{FieldElement, Monomial};

/// Tor algebra class. `G(0)` and `G(1)` stand for H(0,0) and H(0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorClass {
    G(usize),
    NotG,
    /// Every pfaffian generator vanishes, so there is no grade-3 ideal to classify.
    Undetermined,
}

impl fmt::Display for TorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorClass::G(r) => write!(f, "G({r})"),
            TorClass::NotG => write!(f, "NotG"),
            TorClass::Undetermined => write!(f, "Undetermined"),
        }
    }
}

impl Serialize for TorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Format and class of the ideal obtained by trimming the first t generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorReport {
    pub m: usize,
    pub t: usize,
    pub rank_q1: usize,
    /// Pivot columns of Q₁⊗k among the last m − t columns.
    pub p: usize,
    pub format: [usize; 4],
    pub mu: usize,
    pub r: Option<usize>,
    pub class: TorClass,
    /// For m = 5: the first (i, j, k) with a nonzero 2×2 minor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minor_witness: Option<(usize, usize, usize)>,
}

impl TorReport {
    /// ℓ, the number of generators.
    pub fn l(&self) -> usize {
        self.format[1]
    }

    /// n, the last Betti number.
    pub fn n(&self) -> usize {
        self.format[3]
    }
}

impl fmt::Display for TorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.format;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "t: {}", self.t)?;
        writeln!(f, "rank_q1: {}", self.rank_q1)?;
        writeln!(f, "p: {}", self.p)?;
        writeln!(f, "format: ({a}, {b}, {c}, {d})")?;
        writeln!(f, "mu: {}", self.mu)?;
        match self.r {
            Some(r) => writeln!(f, "r: {r}")?,
            None => writeln!(f, "r: -")?,
        }
        write!(f, "class: {}", self.class)
    }
}

/// Q₁⊗k: row 3(k−1)+l−1, column i−1 holds the z_l coefficient of T_{k,i}.
pub fn q1_bar(t_matrix: &SkewMatrix, t: usize) -> KMatrix {
    let field = t_matrix.field();
    let m = t_matrix.size();
    let mut q = KMatrix::zeros(field, 3 * t, m);
    for k in 1..=t {
        for i in 1..=m {
            let entry = t_matrix.entry(k, i);
            for l in 1..=3 {
                q.set(3 * (k - 1) + l - 1, i - 1, entry.coefficient(Monomial::var(l)));
            }
        }
    }
    q
}

fn check_args(t_matrix: &SkewMatrix, t: usize) -> Result<()> {
    let m = t_matrix.size();
    if m < 5 || m % 2 == 0 {
        return Err(Error::UnsupportedSize(m));
    }
    if t == 0 || t > m {
        return Err(Error::Argument(format!("trim count {t} outside 1..={m}")));
    }
    Ok(())
}

/// First (i, j, k) with t < i < j ≤ 5, k ≤ t, at which the rows c̄_{h,k,·}
/// and c̄_{r,k,·}, {r, h} = [5] ∖ {i, j, k}, have a nonzero 2×2 minor.
fn minor_witness(q: &KMatrix, t: usize) -> Option<(usize, usize, usize)> {
    let row = |idx: usize, k: usize| -> [FieldElement; 3] { [1, 2, 3].map(|l| q.get(3 * (k - 1) + l - 1, idx - 1).clone()) };
    for i in t + 1..=5 {
        for j in i + 1..=5 {
            for k in 1..=t {
                let rest: Vec<usize> = (1..=5).filter(|x| ![i, j, k].contains(x)).collect();
                let (a, b) = (row(rest[0], k), row(rest[1], k));
                for (p, s) in [(0, 1), (0, 2), (1, 2)] {
                    if !a[p].mul(&b[s]).sub(&a[s].mul(&b[p])).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
    }
    None
}

/// Format and class of the trimming of the first t generators.
pub fn classify(t_matrix: &SkewMatrix, t: usize) -> Result<TorReport> {
    check_args(t_matrix, t)?;
    let undetermined = t_matrix.generators().iter().all(|y| y.is_zero());
    Ok(classify_from_q1(t_matrix.size(), t, &q1_bar(t_matrix, t), undetermined))
}

pub(crate) fn classify_from_q1(m: usize, t: usize, q: &KMatrix, undetermined: bool) -> TorReport {
    let pivots = q.rref().pivots;
    let rank_q1 = pivots.len();
    let p = pivots.iter().filter(|&&c| c >= t).count();
    let l = m + 2 * t - rank_q1;
    let format = [1, l, m + 3 * t - rank_q1, 1 + t];
    let witness = if m == 5 { minor_witness(q, t) } else { None };
    let class = if undetermined {
        TorClass::Undetermined
    } else if witness.is_some() {
        TorClass::NotG
    } else {
        TorClass::G(m - t - p)
    };
    let r = match class {
        TorClass::G(r) => Some(r),
        _ => None,
    };
    TorReport { m, t, rank_q1, p, format, mu: l, r, class, minor_witness: witness }
}
