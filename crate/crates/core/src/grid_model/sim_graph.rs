use serde::Serialize;

use super::cost::{ComponentKind, CostModel};
use super::matpower::GridCase;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Bus,
    Generator,
    Load,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimNode {
    pub index: usize,
    pub kind: NodeKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bus_id: Option<u32>,
}

/// One simulated component. Lines join two buses; every other kind joins
/// its bus to a private degree-one node.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimEdge {
    pub u: usize,
    pub v: usize,
    pub kind: ComponentKind,
    /// Raw FLOP cost.
    pub c: f64,
    /// `c / c_max`.
    pub c_hat: f64,
}

impl SimEdge {
    pub fn is_line(&self) -> bool {
        self.kind == ComponentKind::Line
    }
}

/// Grid topology augmented with one edge per simulated component.
///
/// Nodes `0..n_grid()` are buses in case-file order and double as QUBO
/// variable indices; component nodes follow.
#[derive(Debug, Clone, PartialEq)]
pub struct SimGraph {
    name: String,
    bus_ids: Vec<u32>,
    nodes: Vec<SimNode>,
    edges: Vec<SimEdge>,
    c_max: f64,
    incidence: Vec<Vec<usize>>,
}

/// A component to place in a [`SimGraph`], addressed by bus position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComponentSpec {
    Line {
        from: usize,
        to: usize,
        cost: f64,
    },
    Attached {
        bus: usize,
        kind: ComponentKind,
        cost: f64,
    },
}

/// Builds the simulation graph of a case under a cost model.
///
/// Edge order: lines in branch order, then generators in generator order,
/// then loads (buses with nonzero `Pd`) in bus order when enabled.
pub fn build_sim_graph(case: &GridCase, costs: &CostModel) -> Result<SimGraph> {
    case.validate()?;
    let bus_ids = case.bus_ids();
    let position = |id: u32| bus_ids.iter().position(|&b| b == id).expect("validated");

    let mut components = Vec::new();
    for br in &case.branches {
        components.push(ComponentSpec::Line {
            from: position(br.from_bus),
            to: position(br.to_bus),
            cost: costs.cost(ComponentKind::Line),
        });
    }
    for gen in &case.generators {
        components.push(ComponentSpec::Attached {
            bus: position(gen.bus),
            kind: ComponentKind::Generator,
            cost: costs.cost(ComponentKind::Generator),
        });
    }
    if costs.include_loads {
        for (n, bus) in case.buses.iter().enumerate() {
            if bus.load_mw != 0.0 {
                components.push(ComponentSpec::Attached {
                    bus: n,
                    kind: ComponentKind::Load,
                    cost: costs.cost(ComponentKind::Load),
                });
            }
        }
    }
    SimGraph::assemble(case.name.clone(), bus_ids, &components)
}

impl SimGraph {
    pub fn assemble(
        name: impl Into<String>,
        bus_ids: Vec<u32>,
        components: &[ComponentSpec],
    ) -> Result<Self> {
        let n_grid = bus_ids.len();
        let c_max = components
            .iter()
            .map(|c| match *c {
                ComponentSpec::Line { cost, .. } | ComponentSpec::Attached { cost, .. } => cost,
            })
            .fold(f64::NAN, f64::max);
        if components.is_empty() {
            return Err(Error::NoComponents);
        }

        let mut nodes: Vec<SimNode> = bus_ids
            .iter()
            .enumerate()
            .map(|(index, &id)| SimNode {
                index,
                kind: NodeKind::Bus,
                bus_id: Some(id),
            })
            .collect();
        let mut edges = Vec::with_capacity(components.len());
        for spec in components {
            let edge = match *spec {
                ComponentSpec::Line { from, to, cost } => {
                    check_component(from, n_grid, cost)?;
                    check_component(to, n_grid, cost)?;
                    if from == to {
                        return Err(Error::Semantic(format!(
                            "line at bus index {from} is a self-loop"
                        )));
                    }
                    SimEdge {
                        u: from,
                        v: to,
                        kind: ComponentKind::Line,
                        c: cost,
                        c_hat: cost / c_max,
                    }
                }
                ComponentSpec::Attached { bus, kind, cost } => {
                    check_component(bus, n_grid, cost)?;
                    let node_kind = match kind {
                        ComponentKind::Generator => NodeKind::Generator,
                        ComponentKind::Load => NodeKind::Load,
                        ComponentKind::Line => {
                            return Err(Error::Semantic("a line must join two buses".into()))
                        }
                    };
                    let index = nodes.len();
                    nodes.push(SimNode {
                        index,
                        kind: node_kind,
                        bus_id: None,
                    });
                    SimEdge {
                        u: bus,
                        v: index,
                        kind,
                        c: cost,
                        c_hat: cost / c_max,
                    }
                }
            };
            edges.push(edge);
        }

        let mut incidence = vec![Vec::new(); nodes.len()];
        for (k, e) in edges.iter().enumerate() {
            incidence[e.u].push(k);
            incidence[e.v].push(k);
        }
        Ok(Self {
            name: name.into(),
            bus_ids,
            nodes,
            edges,
            c_max,
            incidence,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of buses `N`, which is also the number of QUBO variables.
    pub fn n_grid(&self) -> usize {
        self.bus_ids.len()
    }

    pub fn nodes(&self) -> &[SimNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[SimEdge] {
        &self.edges
    }

    pub fn c_max(&self) -> f64 {
        self.c_max
    }

    pub fn bus_ids(&self) -> &[u32] {
        &self.bus_ids
    }

    pub fn index_of_bus(&self, bus_id: u32) -> Option<usize> {
        self.bus_ids.iter().position(|&b| b == bus_id)
    }

    /// Indices of the edges incident to `node`.
    pub fn incident_edges(&self, node: usize) -> &[usize] {
        &self.incidence[node]
    }

    pub fn lines(&self) -> impl Iterator<Item = &SimEdge> + '_ {
        self.edges.iter().filter(|e| e.is_line())
    }

    /// Grid-only neighbours of a bus (one entry per parallel line).
    pub fn grid_neighbors(&self, bus: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[bus].iter().filter_map(move |&k| {
            let e = &self.edges[k];
            e.is_line().then_some(if e.u == bus { e.v } else { e.u })
        })
    }

    /// The component specs this graph was assembled from, in edge order.
    pub fn component_specs(&self) -> Vec<ComponentSpec> {
        self.edges
            .iter()
            .map(|e| {
                if e.is_line() {
                    ComponentSpec::Line {
                        from: e.u,
                        to: e.v,
                        cost: e.c,
                    }
                } else {
                    ComponentSpec::Attached {
                        bus: e.u,
                        kind: e.kind,
                        cost: e.c,
                    }
                }
            })
            .collect()
    }

    /// Fresh graph over a subset of buses with the components fully inside it.
    ///
    /// Lines with an endpoint outside `buses` are dropped. Costs are
    /// renormalized by the sub-network's own `c_max`. `buses` holds grid
    /// indices of `self`; the returned graph numbers them in the given order.
    pub fn restrict(&self, name: impl Into<String>, buses: &[usize]) -> Result<SimGraph> {
        let mut local = vec![usize::MAX; self.n_grid()];
        for (k, &b) in buses.iter().enumerate() {
            if b >= self.n_grid() {
                return Err(Error::Semantic(format!("bus index {b} out of range")));
            }
            local[b] = k;
        }
        let inside = |b: usize| local[b] != usize::MAX;
        let components: Vec<ComponentSpec> = self
            .component_specs()
            .into_iter()
            .filter_map(|spec| match spec {
                ComponentSpec::Line { from, to, cost } if inside(from) && inside(to) => {
                    Some(ComponentSpec::Line {
                        from: local[from],
                        to: local[to],
                        cost,
                    })
                }
                ComponentSpec::Attached { bus, kind, cost } if inside(bus) => {
                    Some(ComponentSpec::Attached {
                        bus: local[bus],
                        kind,
                        cost,
                    })
                }
                _ => None,
            })
            .collect();
        let bus_ids = buses.iter().map(|&b| self.bus_ids[b]).collect();
        SimGraph::assemble(name, bus_ids, &components)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "N": self.n_grid(),
            "nodes": self.nodes,
            "edges": self.edges,
            "c_max": self.c_max,
        })
    }
}

fn check_component(bus: usize, n_grid: usize, cost: f64) -> Result<()> {
    if bus >= n_grid {
        return Err(Error::Semantic(format!(
            "component references bus index {bus}, only {n_grid} buses"
        )));
    }
    if !(cost.is_finite() && cost > 0.0) {
        return Err(Error::CostModel(format!(
            "component cost must be > 0, got {cost}"
        )));
    }
    Ok(())
}
