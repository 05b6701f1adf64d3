use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::matrix::SkewMatrix;
use super::sign::{sigma3, sigma5, Sign};
use crate::polyring::Polynomial;

/// Above this size the expansion identity is checked only on index sets
/// missing at most five indices.
const FULL_EXPANSION_LIMIT: usize = 11;

/// The pfaffian identities checked by [`check_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// Pf(β) = Σ_{r∈β, r≠b} sgn(β → b r β∖{b,r}) T_{b,r} Pf(β∖{b,r}) for every b ∈ β.
    Expansion,
    /// y_i = Σ_r σ_{i,j,r} T_{j,r} pf{i,j,r} for i ≠ j.
    SinglePfaffian,
    /// Σ_r σ_{i,j,r} T_{k,r} pf{i,j,r} = 0 for distinct i, j, k.
    ThreePfaffianVanishing,
    /// pf{i,j,r} = Σ_h σ_{i,j,r,h,k} T_{k,h} pf{i,j,r,h,k} for distinct i, j, r, k.
    TriplePfaffian,
    /// Σ_r σ_{i,r,h} σ_{i,r,h,s,k} T_{j,r} pf{i,r,h,s,k} = 0 for i, h, s, k ≠ j.
    FivePfaffianVanishing,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Expansion,
        Identity::SinglePfaffian,
        Identity::ThreePfaffianVanishing,
        Identity::TriplePfaffian,
        Identity::FivePfaffianVanishing,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::Expansion => "expansion",
            Identity::SinglePfaffian => "single-pfaffian",
            Identity::ThreePfaffianVanishing => "three-pfaffian vanishing",
            Identity::TriplePfaffian => "triple-pfaffian",
            Identity::FivePfaffianVanishing => "five-pfaffian vanishing",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub identity: Identity,
    pub tuples_checked: usize,
    /// First failing index tuple in enumeration order.
    pub first_failure: Option<Vec<usize>>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub results: Vec<IdentityResult>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(IdentityResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.first_failure {
                None => writeln!(f, "{}: ok ({} tuples)", r.identity, r.tuples_checked)?,
                Some(t) => writeln!(f, "{}: FAILED at {:?}", r.identity, t)?,
            }
        }
        Ok(())
    }
}

fn add_signed(acc: &mut Polynomial, sign: Sign, a: &Polynomial, b: &Polynomial) {
    if sign.is_zero() || a.is_zero() || b.is_zero() {
        return;
    }
    let term = a * b;
    if sign == Sign::PLUS {
        *acc += &term;
    } else {
        *acc -= &term;
    }
}

fn run<F>(identity: Identity, tuples: Vec<Vec<usize>>, holds: F) -> IdentityResult
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let first_failure = tuples.par_iter().find_first(|t| !holds(t)).cloned();
    IdentityResult { identity, tuples_checked: tuples.len(), first_failure }
}

/// Ordered tuples of `len` distinct indices from 1..=m.
fn distinct_tuples(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(m: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 1..=m {
            if !cur.contains(&i) {
                cur.push(i);
                go(m, len, cur, out);
                cur.pop();
            }
        }
    }
    go(m, len, &mut cur, &mut out);
    out
}

/// Index sets on which the expansion identity is checked: every even
/// subset of size ≥ 2 for small m, otherwise complements of ≤ 5 indices.
fn expansion_sets(m: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (1..=m).collect();
    if m <= FULL_EXPANSION_LIMIT {
        (0u64..1 << m)
            .filter(|mask| mask.count_ones() >= 2 && mask.count_ones() % 2 == 0)
            .map(|mask| all.iter().copied().filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect()
    } else {
        let mut out = Vec::new();
        for drop in [1usize, 3, 5] {
            let mut removed: Vec<usize> = (1..=drop).collect();
            loop {
                out.push(all.iter().copied().filter(|i| !removed.contains(i)).collect());
                // next combination in lexicographic order
                let mut k = drop;
                while k > 0 && removed[k - 1] == m - drop + k {
                    k -= 1;
                }
                if k == 0 {
                    break;
                }
                removed[k - 1] += 1;
                for n in k..drop {
                    removed[n] = removed[n - 1] + 1;
                }
            }
        }
        out
    }
}

fn expansion_holds(t: &SkewMatrix, beta: &[usize], b_pos: usize) -> bool {
    let keep = |s: &[usize]| t.pfaffian_keep(s).expect("valid subset");
    let b = beta[b_pos];
    let mut rhs = Polynomial::zero(t.field());
    for (r_pos, &r) in beta.iter().enumerate() {
        if r_pos == b_pos {
            continue;
        }
        let rest: Vec<usize> = beta.iter().copied().filter(|&i| i != b && i != r).collect();
        let parity = b_pos + r_pos + 1 + usize::from(r_pos < b_pos);
        add_signed(&mut rhs, Sign::from_parity(parity), t.entry(b, r), &keep(&rest));
    }
    rhs == keep(beta)
}

/// Evaluates every identity at every admissible index tuple.
pub fn check_identities(t: &SkewMatrix) -> IdentityReport {
    let m = t.size();
    let field = t.field();
    let pf = |removed: &[usize]| t.pf_without(removed);

    let expansion_tuples: Vec<Vec<usize>> = expansion_sets(m)
        .into_iter()
        .flat_map(|beta| beta.iter().map(|&b| [&[b], beta.as_slice()].concat()).collect::<Vec<_>>())
        .collect();
    // Tuples are (b, β...).
    let expansion = run(Identity::Expansion, expansion_tuples, |tuple| {
        let beta = &tuple[1..];
        expansion_holds(t, beta, beta.iter().position(|&i| i == tuple[0]).expect("b in β"))
    });

    let single = run(Identity::SinglePfaffian, distinct_tuples(m, 2), |tu| {
        let (i, j) = (tu[0], tu[1]);
        let mut rhs = Polynomial::zero(field);
        for r in 1..=m {
            add_signed(&mut rhs, sigma3(i, j, r), t.entry(j, r), &pf(&[i, j, r]));
        }
        rhs == t.generator(i)
    });

    let three = run(Identity::ThreePfaffianVanishing, distinct_tuples(m, 3), |tu| {
        let (i, j, k) = (tu[0], tu[1], tu[2]);
        let mut sum = Polynomial::zero(field);
        for r in 1..=m {
            add_signed(&mut sum, sigma3(i, j, r), t.entry(k, r), &pf(&[i, j, r]));
        }
        sum.is_zero()
    });

    let triple = run(Identity::TriplePfaffian, distinct_tuples(m, 4), |tu| {
        let (i, j, r, k) = (tu[0], tu[1], tu[2], tu[3]);
        let mut rhs = Polynomial::zero(field);
        for h in 1..=m {
            add_signed(&mut rhs, sigma5(i, j, r, h, k), t.entry(k, h), &pf(&[i, j, r, h, k]));
        }
        rhs == *pf(&[i, j, r])
    });

    // Tuples with a repeat among i, h, s, k vanish termwise.
    let five_tuples: Vec<Vec<usize>> = distinct_tuples(m, 4)
        .into_iter()
        .flat_map(|ihsk| {
            (1..=m)
                .filter(|j| !ihsk.contains(j))
                .map(|j| [ihsk.as_slice(), &[j]].concat())
                .collect::<Vec<_>>()
        })
        .collect();
    let five = run(Identity::FivePfaffianVanishing, five_tuples, |tu| {
        let (i, h, s, k, j) = (tu[0], tu[1], tu[2], tu[3], tu[4]);
        let mut sum = Polynomial::zero(field);
        for r in 1..=m {
            let sign = sigma3(i, r, h) * sigma5(i, r, h, s, k);
            add_signed(&mut sum, sign, t.entry(j, r), &pf(&[i, r, h, s, k]));
        }
        sum.is_zero()
    });

    IdentityReport { results: vec![expansion, single, three, triple, five] }
}
