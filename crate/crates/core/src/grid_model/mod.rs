//! Case files, component cost models and the simulation graph.

mod cost;
mod matpower;
mod sim_graph;

pub use cost::{ComponentKind, CostModel};
pub use matpower::{parse_matpower, Branch, Bus, Generator, GridCase};
pub use sim_graph::{build_sim_graph, ComponentSpec, NodeKind, SimEdge, SimGraph, SimNode};
