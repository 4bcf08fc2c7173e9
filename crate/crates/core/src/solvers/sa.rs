//! Single-bit-flip Metropolis annealing with a geometric temperature schedule.
//!
//! Every read restarts from a uniformly random assignment. Read `k` draws
//! from ChaCha stream `k` of the run seed, so the result does not depend on
//! how reads are scheduled across threads.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fields::{dense, LocalFields};
use super::sample::{Assignment, SampleSet};
use crate::error::{Error, Result};
use crate::qubo::QuboProblem;
use crate::scalar::Scalar;

const PROBE_STREAM: u64 = u64::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaParams {
    pub reads: usize,
    pub sweeps: usize,
    /// Defaults to the largest single-flip `|dE|` at a random probe state.
    #[serde(default)]
    pub t_hot: Option<f64>,
    /// Defaults to `1e-3` times the smallest nonzero `|Q_ij|`.
    #[serde(default)]
    pub t_cold: Option<f64>,
    pub seed: u64,
}

impl Default for SaParams {
    fn default() -> Self {
        Self {
            reads: 1000,
            sweeps: 100,
            t_hot: None,
            t_cold: None,
            seed: 0,
        }
    }
}

impl SaParams {
    pub fn validate(&self) -> Result<()> {
        if self.reads == 0 {
            return Err(Error::InvalidParameter("reads must be >= 1".into()));
        }
        if self.sweeps == 0 {
            return Err(Error::InvalidParameter("sweeps must be >= 1".into()));
        }
        for t in [self.t_hot, self.t_cold].into_iter().flatten() {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "temperature {t} must be finite and > 0"
                )));
            }
        }
        if let (Some(hot), Some(cold)) = (self.t_hot, self.t_cold) {
            if hot <= cold {
                return Err(Error::InvalidParameter(format!(
                    "t_hot ({hot}) must exceed t_cold ({cold})"
                )));
            }
        }
        Ok(())
    }
}

/// Resolved geometric schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Schedule {
    pub t_hot: f64,
    pub t_cold: f64,
}

impl Schedule {
    pub fn resolve<T: Scalar>(problem: &QuboProblem<T>, params: &SaParams) -> Self {
        let t_cold = params.t_cold.unwrap_or_else(|| {
            problem
                .min_nonzero_abs_coefficient()
                .map(|q| 1e-3 * q.as_f64())
                .unwrap_or(1e-3)
        });
        let t_hot = params.t_hot.unwrap_or_else(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            rng.set_stream(PROBE_STREAM);
            let probe: Vec<u8> = (0..problem.n_vars()).map(|_| rng.gen_range(0..2)).collect();
            let matrix = dense(problem);
            LocalFields::new(&matrix, probe).max_abs_delta().as_f64()
        });
        let t_hot = if t_hot > t_cold { t_hot } else { t_cold * 1e3 };
        Self { t_hot, t_cold }
    }

    pub fn temperature(&self, sweep: usize, sweeps: usize) -> f64 {
        if sweeps <= 1 {
            return self.t_cold;
        }
        let frac = sweep as f64 / (sweeps - 1) as f64;
        self.t_hot * (self.t_cold / self.t_hot).powf(frac)
    }
}

fn anneal_read<T: Scalar>(
    matrix: &[T],
    n: usize,
    schedule: &Schedule,
    params: &SaParams,
    read: usize,
) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(read as u64);
    let start: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let mut state = LocalFields::new(matrix, start);
    for sweep in 0..params.sweeps {
        let beta = 1.0 / schedule.temperature(sweep, params.sweeps);
        for i in 0..n {
            let d = state.delta(i).as_f64();
            if d <= 0.0 || rng.gen::<f64>() < (-d * beta).exp() {
                state.flip(i);
            }
        }
    }
    Assignment::new(state.z).expect("binary state")
}

pub fn solve_sa<T: Scalar>(problem: &QuboProblem<T>, params: &SaParams) -> Result<SampleSet<T>> {
    params.validate()?;
    let started = Instant::now();
    let schedule = Schedule::resolve(problem, params);
    let matrix = dense(problem);
    let n = problem.n_vars();
    let reads: Vec<Assignment> = (0..params.reads)
        .into_par_iter()
        .map(|k| anneal_read(&matrix, n, &schedule, params, k))
        .collect();
    let record = serde_json::json!({
        "reads": params.reads,
        "sweeps": params.sweeps,
        "t_hot": schedule.t_hot,
        "t_cold": schedule.t_cold,
    });
    let mut set = SampleSet::from_reads(problem, "sa", record, Some(params.seed), reads)?;
    set.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(set)
}
