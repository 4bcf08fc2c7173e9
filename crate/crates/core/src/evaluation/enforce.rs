//! Rejection loop that keeps sampling until the best admissible sample has
//! two connected parts.
//!
//! Disconnected samples are banned by canonical form (`min(z, 1 - z)`), so a
//! split and its mirror image are rejected together. The QUBO itself is
//! never modified.

use std::collections::BTreeSet;

use serde::Serialize;

use super::report::{decode, PartitionReport};
use crate::error::Result;
use crate::grid_model::SimGraph;
use crate::qubo::QuboProblem;
use crate::scalar::Scalar;
use crate::solvers::{Assignment, SampleSet, Sampler};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopStatus {
    /// A connected solution was accepted.
    Found,
    /// `max_rounds` passed without an admissible connected sample.
    Exhausted,
    /// `max_rounds == 0`: one raw sample set with feasibility flags.
    Disabled,
}

#[derive(Debug, Clone)]
pub struct LoopRound<T> {
    pub round: usize,
    pub samples: SampleSet<T>,
    /// Per record: both parts connected.
    pub feasible: Vec<bool>,
    /// Canonical assignments banned during this round.
    pub banned: Vec<Assignment>,
}

#[derive(Debug, Clone)]
pub struct ConnectedSolution<T> {
    pub assignment: Assignment,
    pub energy: T,
    pub report: PartitionReport,
}

#[derive(Debug, Clone)]
pub struct ConnectednessOutcome<T> {
    pub status: LoopStatus,
    pub rounds: Vec<LoopRound<T>>,
    pub best: Option<ConnectedSolution<T>>,
}

pub fn enforce_connectedness<T, S>(
    sim: &SimGraph,
    problem: &QuboProblem<T>,
    sampler: &S,
    max_rounds: usize,
) -> Result<ConnectednessOutcome<T>>
where
    T: Scalar,
    S: Sampler<T> + ?Sized,
{
    problem.check_len(sim.n_grid())?;
    if max_rounds == 0 {
        let samples = sampler.sample(problem, 0)?;
        let feasible = feasibility(sim, &samples)?;
        return Ok(ConnectednessOutcome {
            status: LoopStatus::Disabled,
            rounds: vec![LoopRound {
                round: 0,
                samples,
                feasible,
                banned: Vec::new(),
            }],
            best: None,
        });
    }

    let mut banned: BTreeSet<Assignment> = BTreeSet::new();
    let mut rounds = Vec::new();
    for round in 0..max_rounds {
        let samples = sampler.sample(problem, round)?;
        let feasible = feasibility(sim, &samples)?;
        let mut newly_banned = Vec::new();
        let mut accepted = None;
        for (record, &ok) in samples.records.iter().zip(&feasible) {
            let canonical = record.assignment.canonical();
            if banned.contains(&canonical) {
                continue;
            }
            if ok {
                accepted = Some(ConnectedSolution {
                    assignment: record.assignment.clone(),
                    energy: record.energy,
                    report: decode(sim, &record.assignment)?,
                });
                break;
            }
            banned.insert(canonical.clone());
            newly_banned.push(canonical);
        }
        rounds.push(LoopRound {
            round,
            samples,
            feasible,
            banned: newly_banned,
        });
        if let Some(best) = accepted {
            return Ok(ConnectednessOutcome {
                status: LoopStatus::Found,
                rounds,
                best: Some(best),
            });
        }
    }
    Ok(ConnectednessOutcome {
        status: LoopStatus::Exhausted,
        rounds,
        best: None,
    })
}

fn feasibility<T: Scalar>(sim: &SimGraph, samples: &SampleSet<T>) -> Result<Vec<bool>> {
    samples
        .records
        .iter()
        .map(|r| Ok(decode(sim, &r.assignment)?.both_connected()))
        .collect()
}
