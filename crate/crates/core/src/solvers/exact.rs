//! Exhaustive ground-state enumeration over Gray-code order.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fields::{dense, LocalFields};
use super::sample::{Assignment, SampleRecord, SampleSet};
use crate::error::{Error, Result};
use crate::qubo::QuboProblem;
use crate::scalar::Scalar;

pub const DEFAULT_EXACT_LIMIT: usize = 24;
pub const EXACT_HARD_CAP: usize = 30;

/// Incremental energies are replaced by a from-scratch evaluation every
/// `2^RESYNC_SHIFT` Gray steps.
const RESYNC_SHIFT: u32 = 10;
/// Top bits fixed per parallel chunk.
const SPLIT_BITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactConfig {
    pub limit: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            limit: DEFAULT_EXACT_LIMIT,
        }
    }
}

/// Energies within this distance of the minimum count as ground states.
pub fn tie_tolerance<T: Scalar>(energy: T) -> T {
    let rel = T::from_f64_lossy(1e-9).max(T::epsilon() * T::from_f64_lossy(1e3));
    rel * energy.abs().max(T::one())
}

#[derive(Debug)]
struct ChunkScan<T> {
    best: T,
    candidates: Vec<u64>,
    max_drift: T,
}

fn scan_chunk<T: Scalar>(
    problem: &QuboProblem<T>,
    matrix: &[T],
    low_bits: usize,
    high: u64,
) -> ChunkScan<T> {
    let n = problem.n_vars();
    let mut mask = high << low_bits;
    let start = Assignment::from_mask(mask, n);
    let mut energy = problem.energy_unchecked(start.bits());
    let mut state = LocalFields::new(matrix, start.bits().to_vec());
    let mut scan = ChunkScan {
        best: energy,
        candidates: vec![mask],
        max_drift: T::zero(),
    };
    let steps: u64 = 1 << low_bits;
    for step in 1..steps {
        let i = step.trailing_zeros() as usize;
        energy += state.delta(i);
        state.flip(i);
        mask ^= 1 << i;
        if step & ((1 << RESYNC_SHIFT) - 1) == 0 {
            let fresh = problem.energy_unchecked(&state.z);
            scan.max_drift = scan.max_drift.max((fresh - energy).abs());
            energy = fresh;
        }
        let tol = tie_tolerance(scan.best);
        if energy < scan.best - tol {
            scan.best = energy;
            scan.candidates.clear();
            scan.candidates.push(mask);
        } else if energy <= scan.best + tol {
            scan.best = scan.best.min(energy);
            scan.candidates.push(mask);
        }
    }
    scan
}

fn check_size(n_vars: usize, config: &ExactConfig) -> Result<()> {
    let limit = config.limit.min(EXACT_HARD_CAP);
    if n_vars > limit {
        return Err(Error::TooManyVariables { n_vars, limit });
    }
    Ok(())
}

/// Every assignment attaining the global minimum, each with count one.
pub fn solve_exact<T: Scalar>(
    problem: &QuboProblem<T>,
    config: &ExactConfig,
) -> Result<SampleSet<T>> {
    let n = problem.n_vars();
    check_size(n, config)?;
    let started = Instant::now();
    let matrix = dense(problem);
    let split = n.min(SPLIT_BITS);
    let low_bits = n - split;
    let chunks: Vec<ChunkScan<T>> = (0..1u64 << split)
        .into_par_iter()
        .map(|high| scan_chunk(problem, &matrix, low_bits, high))
        .collect();

    let mut records: Vec<SampleRecord<T>> = chunks
        .iter()
        .flat_map(|c| c.candidates.iter())
        .map(|&mask| {
            let assignment = Assignment::from_mask(mask, n);
            SampleRecord {
                energy: problem.energy_unchecked(assignment.bits()),
                assignment,
                count: 1,
            }
        })
        .collect();
    let min = records.iter().map(|r| r.energy).fold(T::infinity(), T::min);
    let tol = tie_tolerance(min);
    records.retain(|r| r.energy <= min + tol);

    let params = serde_json::json!({ "limit": config.limit });
    let mut set = SampleSet::from_records("exact", params, n, None, records);
    set.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(set)
}

/// Every assignment once (`2^n` records), for spectra and brute-force checks.
pub fn enumerate_all<T: Scalar>(
    problem: &QuboProblem<T>,
    config: &ExactConfig,
) -> Result<SampleSet<T>> {
    let n = problem.n_vars();
    check_size(n, config)?;
    let started = Instant::now();
    let records = (0..1u64 << n)
        .map(|mask| {
            let assignment = Assignment::from_mask(mask, n);
            SampleRecord {
                energy: problem.energy_unchecked(assignment.bits()),
                assignment,
                count: 1,
            }
        })
        .collect();
    let params = serde_json::json!({ "limit": config.limit });
    let mut set = SampleSet::from_records("enumerate", params, n, None, records);
    set.wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(set)
}
