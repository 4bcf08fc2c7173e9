//! QUBO container and the objective builders.

mod builders;
mod graph;
mod problem;

pub use builders::{
    cut_edge_weights, q_components, q_cut, q_modularity, q_network, q_part, q_size, q_weights,
    scalarize, weight_mass, CostAggregates, PartTerms,
};
pub use graph::{WeightedEdge, WeightedGraph};
pub use problem::{QuboBuilder, QuboFile, QuboProblem, Term, ENERGY_CONVENTION};
