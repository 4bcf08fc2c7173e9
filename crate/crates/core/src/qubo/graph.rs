use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid_model::SimGraph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub w: f64,
}

/// Undirected multigraph over partition variables `0..n_nodes`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    n_nodes: usize,
    edges: Vec<WeightedEdge>,
}

impl WeightedGraph {
    pub fn new(n_nodes: usize, edges: Vec<WeightedEdge>) -> Result<Self> {
        for e in &edges {
            if e.u >= n_nodes || e.v >= n_nodes || e.u == e.v {
                return Err(Error::InvalidEdge {
                    u: e.u,
                    v: e.v,
                    n_vars: n_nodes,
                });
            }
            if !e.w.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) has non-finite weight",
                    e.u, e.v
                )));
            }
        }
        Ok(Self { n_nodes, edges })
    }

    pub fn unweighted(n_nodes: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            n_nodes,
            pairs
                .iter()
                .map(|&(u, v)| WeightedEdge { u, v, w: 1.0 })
                .collect(),
        )
    }

    /// Bus graph of a simulation graph, each line weighted by `c_hat`.
    pub fn grid_of(sim: &SimGraph) -> Self {
        let edges = sim
            .lines()
            .map(|e| WeightedEdge {
                u: e.u,
                v: e.v,
                w: e.c_hat,
            })
            .collect();
        Self {
            n_nodes: sim.n_grid(),
            edges,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    /// Edge count per node, parallel edges counted separately.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_nodes];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }
}
