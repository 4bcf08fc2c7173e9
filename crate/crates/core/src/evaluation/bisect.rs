use serde::Serialize;

use super::report::{decode, PartitionReport};
use crate::error::{Error, Result};
use crate::grid_model::SimGraph;
use crate::qubo::q_part;
use crate::solvers::{Assignment, Sampler};

#[derive(Debug, Clone, Serialize)]
pub struct Bisection {
    pub level: usize,
    /// Position among the sub-networks of this level.
    pub index: usize,
    pub name: String,
    pub bus_ids: Vec<u32>,
    pub assignment: Assignment,
    pub energy: f64,
    pub report: PartitionReport,
}

/// `P = 2^depth` parts obtained by repeated bisection.
#[derive(Debug, Clone, Serialize)]
pub struct MultiPartition {
    pub parts: usize,
    /// Part label in `0..parts` per bus, in case order.
    pub part_of: Vec<usize>,
    /// Every bisection, level by level.
    pub tree: Vec<Bisection>,
}

impl MultiPartition {
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.parts];
        for &p in &self.part_of {
            sizes[p] += 1;
        }
        sizes
    }
}

/// Splits the grid into `parts` pieces, solving a fresh partitioning QUBO
/// per sub-network at every level.
///
/// Sub-networks contain only their own buses and the components fully
/// inside them; lines cut at an upper level are never revisited. Part 1
/// (`z = 1`) of a sub-network becomes the lower-numbered child.
pub fn bisect_iterative<S>(sim: &SimGraph, parts: usize, sampler: &S) -> Result<MultiPartition>
where
    S: Sampler<f64> + ?Sized,
{
    if parts < 2 || !parts.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "number of parts must be a power of two >= 2, got {parts}"
        )));
    }
    let depth = parts.trailing_zeros() as usize;
    let mut groups: Vec<Vec<usize>> = vec![(0..sim.n_grid()).collect()];
    let mut tree = Vec::with_capacity(parts - 1);
    let mut round = 0;

    for level in 0..depth {
        let mut next = Vec::with_capacity(groups.len() * 2);
        for (index, group) in groups.iter().enumerate() {
            let name = format!("{}/L{level}.{index}", sim.name());
            if group.len() < 2 {
                return Err(Error::Unsplittable(format!("{name} ({} bus)", group.len())));
            }
            let sub = sim
                .restrict(name.clone(), group)
                .map_err(|e| Error::Unsplittable(format!("{name}: {e}")))?;
            let problem = q_part::<f64>(&sub)?;
            let samples = sampler.sample(&problem, round)?;
            round += 1;
            let best = samples.best().ok_or(Error::EmptySampleSet)?;
            let report = decode(&sub, &best.assignment)?;
            let bits = best.assignment.bits();
            next.push(
                group
                    .iter()
                    .zip(bits)
                    .filter(|(_, &b)| b == 1)
                    .map(|(&g, _)| g)
                    .collect(),
            );
            next.push(
                group
                    .iter()
                    .zip(bits)
                    .filter(|(_, &b)| b == 0)
                    .map(|(&g, _)| g)
                    .collect(),
            );
            tree.push(Bisection {
                level,
                index,
                name,
                bus_ids: sub.bus_ids().to_vec(),
                assignment: best.assignment.clone(),
                energy: best.energy,
                report,
            });
        }
        groups = next;
    }

    let mut part_of = vec![usize::MAX; sim.n_grid()];
    for (label, group) in groups.iter().enumerate() {
        for &bus in group {
            part_of[bus] = label;
        }
    }
    debug_assert!(part_of.iter().all(|&p| p < parts));
    Ok(MultiPartition {
        parts,
        part_of,
        tree,
    })
}
