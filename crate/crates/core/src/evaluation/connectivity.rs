use std::collections::VecDeque;

use serde::Serialize;

use super::report::PartitionReport;
use crate::grid_model::SimGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    Connected,
    Disconnected,
    /// The part holds no bus.
    Empty,
}

impl Connectivity {
    pub fn is_connected(self) -> bool {
        self == Connectivity::Connected
    }
}

/// Whether the buses of each part induce a connected grid sub-graph.
pub fn check_connected(sim: &SimGraph, report: &PartitionReport) -> [Connectivity; 2] {
    [1u8, 2].map(|label| part_connectivity(sim, &report.part_of, label))
}

fn part_connectivity(sim: &SimGraph, part_of: &[u8], label: u8) -> Connectivity {
    let members: Vec<usize> = (0..part_of.len())
        .filter(|&n| part_of[n] == label)
        .collect();
    let Some(&root) = members.first() else {
        return Connectivity::Empty;
    };
    let mut seen = vec![false; part_of.len()];
    seen[root] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([root]);
    while let Some(bus) = queue.pop_front() {
        for next in sim.grid_neighbors(bus) {
            if part_of[next] == label && !seen[next] {
                seen[next] = true;
                reached += 1;
                queue.push_back(next);
            }
        }
    }
    if reached == members.len() {
        Connectivity::Connected
    } else {
        Connectivity::Disconnected
    }
}
