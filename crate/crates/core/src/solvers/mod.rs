//! Samplers producing [`SampleSet`]s for a QUBO.

mod exact;
mod fields;
mod sa;
mod sample;

use serde::{Deserialize, Serialize};

pub use exact::{
    enumerate_all, solve_exact, tie_tolerance, ExactConfig, DEFAULT_EXACT_LIMIT, EXACT_HARD_CAP,
};
pub use sa::{solve_sa, SaParams, Schedule};
pub use sample::{Assignment, RecordFile, SampleRecord, SampleSet, SampleSetFile};

use crate::error::Result;
use crate::qubo::QuboProblem;
use crate::scalar::Scalar;

/// Energy of `z` under `problem`, offset included.
pub fn energy<T: Scalar>(problem: &QuboProblem<T>, z: &Assignment) -> Result<T> {
    problem.energy(z.bits())
}

/// Anything that can be asked repeatedly for samples of a QUBO.
///
/// `round` distinguishes repeated calls inside iterative loops; stochastic
/// samplers derive their seed from it.
pub trait Sampler<T: Scalar> {
    fn sample(&self, problem: &QuboProblem<T>, round: usize) -> Result<SampleSet<T>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "solver", rename_all = "lowercase")]
pub enum SolverConfig {
    /// Ground states only.
    Exact(ExactConfig),
    /// Full spectrum, one record per assignment.
    Enumerate(ExactConfig),
    Sa(SaParams),
}

impl<T: Scalar> Sampler<T> for SolverConfig {
    fn sample(&self, problem: &QuboProblem<T>, round: usize) -> Result<SampleSet<T>> {
        match self {
            SolverConfig::Exact(c) => solve_exact(problem, c),
            SolverConfig::Enumerate(c) => enumerate_all(problem, c),
            SolverConfig::Sa(p) => solve_sa(
                problem,
                &SaParams {
                    seed: p.seed.wrapping_add(round as u64),
                    ..*p
                },
            ),
        }
    }
}
