use serde::Serialize;

use super::report::{TorClass, TorReport};
use crate::error::{Error, Result};

/// Verdicts of the numerical constraints on class G(r) trimmings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// t = 1 ⇒ r = μ − 3; `None` when t ≠ 1.
    pub t1_equality: Option<bool>,
    /// t ≥ 2 ⇒ r ≤ μ − 4; `None` when t = 1.
    pub t2_bound: Option<bool>,
    /// 2t ≤ ℓ − r ≤ 3t.
    pub gap_bounds: bool,
    /// ℓ − r ≠ 3t − 1.
    pub gap_excludes_3t_minus_1: bool,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.t1_equality != Some(false) && self.t2_bound != Some(false) && self.gap_bounds && self.gap_excludes_3t_minus_1
    }
}

pub fn check_conjectures(report: &TorReport) -> Result<ConjectureReport> {
    let TorClass::G(r) = report.class else {
        return Err(Error::NotApplicable(format!("class {} is not G(r)", report.class)));
    };
    let (t, l, mu) = (report.t as i64, report.l() as i64, report.mu as i64);
    let r = r as i64;
    let gap = l - r;
    Ok(ConjectureReport {
        t1_equality: (t == 1).then_some(r == mu - 3),
        t2_bound: (t >= 2).then_some(r <= mu - 4),
        gap_bounds: 2 * t <= gap && gap <= 3 * t,
        gap_excludes_3t_minus_1: gap != 3 * t - 1,
    })
}
