use serde::Serialize;

use crate::classify::{classify, TorClass, TorReport};
use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::pfaffian::SkewMatrix;
use crate::polyring::{Field, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// T_s, size 4s + 3, trimming the first 2s + 1 generators.
    Odd,
    /// T′_s, size 4s + 1 with s ≥ 2, trimming the first 2s generators.
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub s: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, s: usize) -> Result<FamilySpec> {
        let min = match kind {
            FamilyKind::Odd => 1,
            FamilyKind::Even => 2,
        };
        if s < min {
            return Err(Error::Argument(format!("{kind:?} family needs s >= {min}, got {s}")));
        }
        Ok(FamilySpec { kind, s })
    }

    pub fn size(&self) -> usize {
        match self.kind {
            FamilyKind::Odd => 4 * self.s + 3,
            FamilyKind::Even => 4 * self.s + 1,
        }
    }

    pub fn trim(&self) -> usize {
        match self.kind {
            FamilyKind::Odd => 2 * self.s + 1,
            FamilyKind::Even => 2 * self.s,
        }
    }

    /// The format and class the family is known to have.
    pub fn expected(&self) -> ([usize; 4], TorClass) {
        let s = self.s;
        match self.kind {
            FamilyKind::Odd => ([1, 6 * s + 2, 8 * s + 3, 2 * s + 2], TorClass::G(2 * s)),
            FamilyKind::Even => ([1, 6 * s - 1, 8 * s - 1, 2 * s + 1], TorClass::G(2 * s - 1)),
        }
    }
}

type Dense = Vec<Vec<Polynomial>>;

fn x(field: Field) -> Polynomial {
    Polynomial::var(field, 1)
}

fn y2(field: Field) -> Polynomial {
    Polynomial::var(field, 2).pow(2)
}

/// U_s: x on i + j = s, z on i + j = s + 1, y² on i + j = s + 2 (1-based).
pub fn band_matrix(field: Field, s: usize) -> PolyMatrix {
    let mut u = PolyMatrix::zeros(field, s, s);
    for i in 1..=s {
        for j in 1..=s {
            let v = match i + j {
                d if d == s => x(field),
                d if d == s + 1 => Polynomial::var(field, 3),
                d if d == s + 2 => y2(field),
                _ => continue,
            };
            u.set(i - 1, j - 1, v);
        }
    }
    u
}

/// [[A, O_x, U], [−O_xᵀ, 0, ʸ²O], [−U, −(ʸ²O)ᵀ, O]] for n×n blocks A and U.
fn bordered(field: Field, a: &Dense, u: &PolyMatrix) -> Dense {
    let n = a.len();
    let size = 2 * n + 1;
    let mut out = vec![vec![Polynomial::zero(field); size]; size];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[i][j].clone();
            out[i][n + 1 + j] = u.get(i, j).clone();
            out[n + 1 + i][j] = u.get(i, j).neg();
        }
    }
    out[n - 1][n] = x(field);
    out[n][n - 1] = x(field).neg();
    out[n][n + 1] = y2(field);
    out[n + 1][n] = y2(field).neg();
    out
}

fn skew(field: Field, rows: Dense) -> SkewMatrix {
    SkewMatrix::from_matrix(&PolyMatrix::from_rows(field, rows).expect("square")).expect("family matrices are skew")
}

/// The family matrix and its trim count.
pub fn build_family(spec: FamilySpec, field: Field) -> Result<(SkewMatrix, usize)> {
    let spec = FamilySpec::new(spec.kind, spec.s)?;
    let s = spec.s;
    let inner = match spec.kind {
        FamilyKind::Odd => {
            let zero = vec![vec![Polynomial::zero(field); s]; s];
            let v = bordered(field, &zero, &band_matrix(field, s));
            bordered(field, &v, &band_matrix(field, 2 * s + 1))
        }
        FamilyKind::Even => {
            let u = band_matrix(field, s);
            let mut v = vec![vec![Polynomial::zero(field); 2 * s]; 2 * s];
            for i in 0..s {
                for j in 0..s {
                    v[i][s + j] = u.get(i, j).clone();
                    v[s + i][j] = u.get(i, j).neg();
                }
            }
            bordered(field, &v, &band_matrix(field, 2 * s))
        }
    };
    Ok((skew(field, inner), spec.trim()))
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub m: usize,
    pub t: usize,
    /// pf{1} = ±y^{4s+2}; odd family only.
    pub pf_first: Option<bool>,
    /// pf{2s+2}, the middle index, = ±det U_{2s+1} and contains z^{2s+1};
    /// odd family only.
    pub pf_middle: Option<bool>,
    /// pf{4s+3} contains x^{2s+1}; odd family only.
    pub pf_last: Option<bool>,
    pub report: TorReport,
    pub expected_format: [usize; 4],
    pub expected_class: TorClass,
}

impl FamilyReport {
    pub fn format_ok(&self) -> bool {
        self.report.format == self.expected_format
    }

    pub fn class_ok(&self) -> bool {
        self.report.class == self.expected_class
    }

    pub fn all_pass(&self) -> bool {
        [self.pf_first, self.pf_middle, self.pf_last].iter().all(|c| *c != Some(false)) && self.format_ok() && self.class_ok()
    }
}

fn is_pm_monomial(p: &Polynomial, m: Monomial) -> bool {
    let target = Polynomial::term(m, crate::FieldElement::one(p.field()));
    *p == target || *p == target.neg()
}

pub fn family_checks(spec: FamilySpec, field: Field) -> Result<FamilyReport> {
    let (t_matrix, t) = build_family(spec, field)?;
    let s = spec.s as u32;
    let m = t_matrix.size();
    let (pf_first, pf_middle, pf_last) = match spec.kind {
        FamilyKind::Odd => {
            let mid = 2 * spec.s + 2;
            let pf_mid = t_matrix.pfaffian_drop(&[mid])?;
            let det = band_matrix(field, mid - 1).determinant()?;
            let middle = (pf_mid == det || pf_mid == det.neg())
                && !pf_mid.coefficient(Monomial::new([0, 0, 2 * s + 1])).is_zero();
            let last = !t_matrix.pfaffian_drop(&[m])?.coefficient(Monomial::new([2 * s + 1, 0, 0])).is_zero();
            (
                Some(is_pm_monomial(&t_matrix.pfaffian_drop(&[1])?, Monomial::new([0, 4 * s + 2, 0]))),
                Some(middle),
                Some(last),
            )
        }
        FamilyKind::Even => (None, None, None),
    };
    let (expected_format, expected_class) = spec.expected();
    Ok(FamilyReport {
        spec,
        m,
        t,
        pf_first,
        pf_middle,
        pf_last,
        report: classify(&t_matrix, t)?,
        expected_format,
        expected_class,
    })
}
