use std::fmt;

use rayon::prelude::*;

use super::element::ChainElement;
use super::table::ProductTable;
use crate::error::Result;
use crate::resolution::{BasisElement, ChainComplex, TrimmedData};

/// A pair at which ∂(xy) ≠ ∂x·y + (−1)^{|x|} x·∂y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub x: BasisElement,
    pub y: BasisElement,
    /// ∂(xy) − ∂x·y − (−1)^{|x|} x·∂y.
    pub difference: ChainElement,
}

#[derive(Clone, Debug, Default)]
pub struct LeibnizReport {
    pub pairs_checked: usize,
    pub violations: Vec<LeibnizViolation>,
}

impl LeibnizReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LeibnizReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "leibniz: {} pairs, {} violations", self.pairs_checked, self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  ({}, {}): {}", v.x, v.y, v.difference)?;
        }
        Ok(())
    }
}

fn defect(c: &ChainComplex, table: &ProductTable, x: BasisElement, y: BasisElement) -> Result<ChainElement> {
    let field = c.field();
    let ex = ChainElement::basis(field, x);
    let ey = ChainElement::basis(field, y);
    let lhs = table.get(x, y).boundary(c)?;
    let first = table.multiply(&ex.boundary(c)?, &ey);
    let second = table.multiply(&ex, &ey.boundary(c)?);
    let sign = if x.degree() % 2 == 1 { -1 } else { 1 };
    Ok(lhs.sub(&first).sub(&second.signed(sign)))
}

/// Checks the Leibniz rule for every basis pair (x, y) with
/// 1 ≤ |x| ≤ |y| and |x| + |y| ≤ 3.
pub fn verify_leibniz_on(c: &ChainComplex, table: &ProductTable) -> Result<LeibnizReport> {
    let pairs: Vec<_> = (1..=3)
        .flat_map(|dx| c.basis(dx).iter().copied())
        .flat_map(|x| {
            (x.degree()..=3 - x.degree().min(3))
                .flat_map(|dy| c.basis(dy).iter().copied())
                .map(move |y| (x, y))
                .collect::<Vec<_>>()
        })
        .filter(|(x, y)| x.degree() <= y.degree() && x.degree() + y.degree() <= 3)
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(x, y)| defect(c, table, x, y).map(|d| (x, y, d)))
        .collect::<Result<Vec<_>>>()?;
    let violations = results
        .into_iter()
        .filter(|(_, _, d)| !d.is_zero())
        .map(|(x, y, difference)| LeibnizViolation { x, y, difference })
        .collect();
    Ok(LeibnizReport { pairs_checked: pairs.len(), violations })
}

/// Leibniz check on a trimmed resolution with the given table.
pub fn verify_leibniz(td: &TrimmedData, table: &ProductTable) -> LeibnizReport {
    verify_leibniz_on(td.complex(), table).expect("table entries lie in the complex")
}
