use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::random_skew_matrix;
use crate::classify::{classify, TorClass, TorReport};
use crate::error::{Error, Result};
use crate::pfaffian::SkewMatrix;
use crate::polyring::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Characteristic; 0 selects the rationals.
    pub p: u32,
    pub m: usize,
    pub trials: u64,
    pub min_degree: u32,
    pub max_degree: u32,
    pub seed: u64,
}

impl ScanConfig {
    pub fn field(&self) -> Result<Field> {
        if self.p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(self.p)
        }
    }
}

/// One classified (trial, t) pair. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub seed: u64,
    pub trial: u64,
    pub p: u32,
    pub m: usize,
    pub t: usize,
    pub rank_q1: usize,
    pub pivots_tail: usize,
    pub l: usize,
    pub n: usize,
    pub r: Option<usize>,
    pub class: TorClass,
}

impl ScanRecord {
    /// The TorReport this record was taken from, minus the m = 5 minor witness.
    pub fn report(&self) -> TorReport {
        TorReport {
            m: self.m,
            t: self.t,
            rank_q1: self.rank_q1,
            p: self.pivots_tail,
            format: [1, self.l, self.l + self.n - 1, self.n],
            mu: self.l,
            r: self.r,
            class: self.class,
            minor_witness: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanOutput {
    pub records: Vec<ScanRecord>,
    /// Trials whose pfaffian generators all vanished.
    pub skipped: Vec<u64>,
}

/// The matrix drawn for one trial: ChaCha8 seeded with `seed`, stream `trial`.
pub fn trial_matrix(config: &ScanConfig, trial: u64) -> Result<SkewMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial);
    Ok(random_skew_matrix(config.field()?, config.m, config.min_degree, config.max_degree, &mut rng))
}

pub fn realizability_scan(config: &ScanConfig) -> Result<ScanOutput> {
    if config.m < 5 || config.m % 2 == 0 {
        return Err(Error::UnsupportedSize(config.m));
    }
    if config.trials == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    if config.min_degree == 0 || config.min_degree > config.max_degree {
        return Err(Error::Argument(format!(
            "degree range {}..={} must be nonempty and start at 1 or more",
            config.min_degree, config.max_degree
        )));
    }
    config.field()?;
    let per_trial = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let t_matrix = trial_matrix(config, trial)?;
            if t_matrix.generators().iter().all(|y| y.is_zero()) {
                return Ok((trial, None));
            }
            let records = (1..=config.m)
                .map(|t| {
                    let rep = classify(&t_matrix, t)?;
                    Ok(ScanRecord {
                        seed: config.seed,
                        trial,
                        p: config.p,
                        m: config.m,
                        t,
                        rank_q1: rep.rank_q1,
                        pivots_tail: rep.p,
                        l: rep.l(),
                        n: rep.n(),
                        r: rep.r,
                        class: rep.class,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((trial, Some(records)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = ScanOutput::default();
    for (trial, records) in per_trial {
        match records {
            Some(r) => out.records.extend(r),
            None => out.skipped.push(trial),
        }
    }
    Ok(out)
}

/// Writes records as CSV with a header row.
pub fn write_csv<W: Write>(records: &[ScanRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Argument(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::Argument(format!("csv: {e}")))?;
    Ok(())
}
