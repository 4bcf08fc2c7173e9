//! Objective builders for bipartitioning.
//!
//! Variable `z_n = 1` puts node `n` in part 1, `z_n = 0` in part 2.

use serde::Serialize;

use super::graph::{WeightedEdge, WeightedGraph};
use super::problem::{QuboBuilder, QuboProblem};
use crate::error::{Error, Result};
use crate::grid_model::SimGraph;
use crate::scalar::Scalar;

/// Per-bus incident component cost and its total.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostAggregates {
    /// `alpha[n]`: sum of `c_hat` over simulation-graph edges at bus `n`.
    pub alpha: Vec<f64>,
    /// Sum of `alpha`.
    pub beta: f64,
}

impl CostAggregates {
    pub fn of(sim: &SimGraph) -> Self {
        let alpha: Vec<f64> = (0..sim.n_grid())
            .map(|n| {
                sim.incident_edges(n)
                    .iter()
                    .map(|&k| sim.edges()[k].c_hat)
                    .sum()
            })
            .collect();
        let beta = alpha.iter().sum();
        Self { alpha, beta }
    }
}

/// `alpha(n, p)`: sum of `w^p` over edges incident to `n`.
pub fn weight_mass(graph: &WeightedGraph, p: f64) -> Vec<f64> {
    let mut alpha = vec![0.0; graph.n_nodes()];
    for e in graph.edges() {
        let wp = e.w.powf(p);
        alpha[e.u] += wp;
        alpha[e.v] += wp;
    }
    alpha
}

/// `(sum_n a_n z_n - sum_n a_n (1 - z_n))^2 = (2 a.z - S)^2`, expanded.
fn squared_imbalance<T: Scalar>(a: &[f64]) -> QuboProblem<T> {
    let s: f64 = a.iter().sum();
    let mut b = QuboBuilder::new(a.len());
    for (i, &ai) in a.iter().enumerate() {
        // z_i^2 = z_i folds the diagonal of 4 a_i a_j into the linear term.
        b.add_linear(i, T::from_f64_lossy(4.0 * ai * ai - 4.0 * ai * s))
            .expect("index in range");
        for (j, &aj) in a.iter().enumerate().skip(i + 1) {
            b.add_entry(i, j, T::from_f64_lossy(4.0 * ai * aj))
                .expect("index in range");
        }
    }
    b.add_offset(T::from_f64_lossy(s * s));
    b.build()
}

/// Weighted cut: energy is the total weight of edges whose endpoints differ.
pub fn q_cut<T: Scalar>(graph: &WeightedGraph) -> Result<QuboProblem<T>> {
    let mut b = QuboBuilder::new(graph.n_nodes());
    for e in graph.edges() {
        // w (z_u + z_v - 2 z_u z_v)
        let w = T::from_f64_lossy(e.w);
        b.add_linear(e.u, w)?;
        b.add_linear(e.v, w)?;
        b.add_entry(e.u, e.v, -w)?;
    }
    Ok(b.build().with_label("cut", 1.0))
}

/// `(N_1 - N_2)^2`.
pub fn q_size<T: Scalar>(n_vars: usize) -> Result<QuboProblem<T>> {
    if n_vars == 0 {
        return Err(Error::InvalidParameter(
            "q_size needs at least one variable".into(),
        ));
    }
    Ok(squared_imbalance(&vec![1.0; n_vars]).with_label("size", 1.0))
}

/// Squared imbalance of incident edge weight raised to `p`.
pub fn q_weights<T: Scalar>(graph: &WeightedGraph, p: f64) -> Result<QuboProblem<T>> {
    if !p.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "power p must be finite, got {p}"
        )));
    }
    if let Some(e) = graph.edges().iter().find(|e| e.w < 0.0) {
        return Err(Error::InvalidParameter(format!(
            "edge ({}, {}) has negative weight",
            e.u, e.v
        )));
    }
    Ok(squared_imbalance(&weight_mass(graph, p)).with_label("weights", 1.0))
}

/// Negative Newman modularity of the split `{z = 1}` / `{z = 0}`.
///
/// Edge weights are ignored; parallel edges count with multiplicity.
pub fn q_modularity<T: Scalar>(graph: &WeightedGraph) -> Result<QuboProblem<T>> {
    let m = graph.edges().len();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = graph.n_nodes();
    let mf = m as f64;
    let deg = graph.degrees();
    let mut adj = vec![0.0; n * n];
    for e in graph.edges() {
        adj[e.u * n + e.v] += 1.0;
        adj[e.v * n + e.u] += 1.0;
    }
    let mut b = QuboBuilder::new(n);
    for i in 0..n {
        for j in i..n {
            let null = (deg[i] * deg[j]) as f64 / (2.0 * mf);
            let q = -(adj[i * n + j] - null) / mf;
            b.add_entry(i, j, T::from_f64_lossy(q))?;
        }
    }
    Ok(b.build().with_label("modularity", 1.0))
}

/// `sum_i lambda_i Q_i`.
pub fn scalarize<T: Scalar>(objectives: &[(&QuboProblem<T>, f64)]) -> Result<QuboProblem<T>> {
    let Some((first, _)) = objectives.first() else {
        return Err(Error::InvalidParameter("nothing to scalarize".into()));
    };
    let n_vars = first.n_vars();
    let mut b = QuboBuilder::new(n_vars);
    let mut labels = Vec::new();
    for (problem, lambda) in objectives {
        if !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "weight {lambda} is not finite"
            )));
        }
        if problem.n_vars() != n_vars {
            return Err(Error::LengthMismatch {
                expected: n_vars,
                found: problem.n_vars(),
            });
        }
        let l = T::from_f64_lossy(*lambda);
        for t in problem.terms() {
            b.add_entry(t.i, t.j, l * t.q)?;
        }
        b.add_offset(l * problem.offset());
        for (name, w) in problem.labels() {
            labels.push((name.clone(), w * lambda));
        }
    }
    let mut out = b.build();
    for (name, w) in labels {
        let prev = out.labels().get(&name).copied().unwrap_or(0.0);
        out = out.with_label(name, prev + w);
    }
    Ok(out)
}

/// Squared component idle time, `(2 sum_n alpha(n) z_n - beta)^2`.
pub fn q_components<T: Scalar>(sim: &SimGraph) -> QuboProblem<T> {
    squared_imbalance(&CostAggregates::of(sim).alpha).with_label("components", 1.0)
}

/// Line weights `c_hat + 4 (N - 1) / c_max` for the cut objective.
pub fn cut_edge_weights(sim: &SimGraph) -> WeightedGraph {
    let n = sim.n_grid() as f64;
    let overhead = 4.0 * (n - 1.0) / sim.c_max();
    let edges = sim
        .lines()
        .map(|e| WeightedEdge {
            u: e.u,
            v: e.v,
            w: e.c_hat + overhead,
        })
        .collect();
    WeightedGraph::new(sim.n_grid(), edges).expect("lines join grid nodes")
}

/// `(2N - 1)^2 / c_max^2` times the size objective.
pub fn q_network<T: Scalar>(sim: &SimGraph) -> Result<QuboProblem<T>> {
    let n = sim.n_grid() as f64;
    let scale = (2.0 * n - 1.0).powi(2) / sim.c_max().powi(2);
    let size = q_size::<T>(sim.n_grid())?;
    Ok(scalarize(&[(&size, scale)])?
        .without_labels()
        .with_label("network", 1.0))
}

/// Components + cut + network, each with weight one.
pub fn q_part<T: Scalar>(sim: &SimGraph) -> Result<QuboProblem<T>> {
    let parts = PartTerms::of(sim)?;
    scalarize(&[
        (&parts.components, 1.0),
        (&parts.cut, 1.0),
        (&parts.network, 1.0),
    ])
}

/// The three terms of the partitioning objective, kept separate.
#[derive(Debug, Clone)]
pub struct PartTerms<T> {
    pub components: QuboProblem<T>,
    pub cut: QuboProblem<T>,
    pub network: QuboProblem<T>,
}

impl<T: Scalar> PartTerms<T> {
    pub fn of(sim: &SimGraph) -> Result<Self> {
        Ok(Self {
            components: q_components(sim),
            cut: q_cut(&cut_edge_weights(sim))?,
            network: q_network(sim)?,
        })
    }
}
