use serde::Serialize;

use super::connectivity::{check_connected, Connectivity};
use crate::error::{Error, Result};
use crate::grid_model::SimGraph;
use crate::solvers::Assignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentSide {
    Part1,
    Part2,
    Cut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutEdge {
    /// Index into the simulation graph's edge list.
    pub edge: usize,
    pub from_bus: u32,
    pub to_bus: u32,
}

/// A bipartition decoded against the parallel-simulation cost model.
///
/// All costs are raw FLOP counts. Signed quantities are part 1 minus part 2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionReport {
    /// 1 or 2 per bus.
    pub part_of: Vec<u8>,
    pub n1: usize,
    pub n2: usize,
    pub cut_edges: Vec<CutEdge>,
    pub m_c: usize,
    /// Side of every simulation-graph edge.
    pub component_assignment: Vec<ComponentSide>,
    /// Component idle time: cost in part 1 minus cost in part 2, cut excluded.
    pub delta_w_components: f64,
    /// Imbalance of bus-incident cost: a line inside a part counts once per
    /// endpoint, a cut line cancels. This is the quantity squared by the
    /// component objective (times `c_max`).
    pub delta_w_incident: f64,
    /// Cut overhead with the `M_c << N` approximation.
    pub w_cut: f64,
    /// Cut overhead before the approximation: `w_cut + M_c`.
    pub w_cinj: f64,
    pub delta_n: i64,
    /// `2 N dN - dN`.
    pub delta_w_networks: i64,
    pub connected: [Connectivity; 2],
}

/// Objective-scale values implied by a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalizedOverheads {
    /// `(delta_w_incident / c_max)^2`
    pub components: f64,
    /// `w_cut / c_max`
    pub cut: f64,
    /// `(delta_w_networks / c_max)^2`
    pub network: f64,
}

pub const REPORT_CSV_HEADER: &str = "N1,N2,M_c,dW_comp,W_cut,dW_net,connected1,connected2,energy";

impl PartitionReport {
    pub fn both_connected(&self) -> bool {
        self.connected.iter().all(|c| c.is_connected())
    }

    pub fn normalized(&self, c_max: f64) -> NormalizedOverheads {
        NormalizedOverheads {
            components: (self.delta_w_incident / c_max).powi(2),
            cut: self.w_cut / c_max,
            network: (self.delta_w_networks as f64 / c_max).powi(2),
        }
    }

    pub fn csv_row(&self, energy: Option<f64>) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n1,
            self.n2,
            self.m_c,
            self.delta_w_components,
            self.w_cut,
            self.delta_w_networks,
            self.connected[0].is_connected(),
            self.connected[1].is_connected(),
            energy.map(|e| e.to_string()).unwrap_or_default()
        )
    }
}

/// Decodes `z` into parts, cut set and cost-model quantities.
pub fn decode(sim: &SimGraph, z: &Assignment) -> Result<PartitionReport> {
    let n = sim.n_grid();
    if z.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: z.len(),
        });
    }
    let bits = z.bits();
    let part_of: Vec<u8> = bits.iter().map(|&b| if b == 1 { 1 } else { 2 }).collect();
    let n1 = z.ones();
    let n2 = n - n1;

    let mut cut_edges = Vec::new();
    let mut sides = Vec::with_capacity(sim.edges().len());
    let (mut c1, mut c2, mut c_cut) = (0.0, 0.0, 0.0);
    let mut incident = 0.0;
    for (k, e) in sim.edges().iter().enumerate() {
        let side_of = |bus: usize| {
            if bits[bus] == 1 {
                ComponentSide::Part1
            } else {
                ComponentSide::Part2
            }
        };
        let sign = |bus: usize| if bits[bus] == 1 { 1.0 } else { -1.0 };
        let side = if e.is_line() {
            incident += e.c * (sign(e.u) + sign(e.v));
            if bits[e.u] != bits[e.v] {
                cut_edges.push(CutEdge {
                    edge: k,
                    from_bus: sim.bus_ids()[e.u],
                    to_bus: sim.bus_ids()[e.v],
                });
                ComponentSide::Cut
            } else {
                side_of(e.u)
            }
        } else {
            incident += e.c * sign(e.u);
            side_of(e.u)
        };
        match side {
            ComponentSide::Part1 => c1 += e.c,
            ComponentSide::Part2 => c2 += e.c,
            ComponentSide::Cut => c_cut += e.c,
        }
        sides.push(side);
    }

    let m_c = cut_edges.len();
    let n_i = n as i64;
    let delta_n = n1 as i64 - n2 as i64;
    let w_cut = c_cut + 4.0 * (n as f64 - 1.0) * m_c as f64;
    let mut report = PartitionReport {
        part_of,
        n1,
        n2,
        cut_edges,
        m_c,
        component_assignment: sides,
        delta_w_components: c1 - c2,
        delta_w_incident: incident,
        w_cut,
        w_cinj: w_cut + m_c as f64,
        delta_n,
        delta_w_networks: 2 * n_i * delta_n - delta_n,
        connected: [Connectivity::Empty; 2],
    };
    report.connected = check_connected(sim, &report);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_model::{ComponentKind, ComponentSpec};

    fn two_bus() -> SimGraph {
        SimGraph::assemble(
            "two",
            vec![1, 2],
            &[
                ComponentSpec::Line {
                    from: 0,
                    to: 1,
                    cost: 5.0,
                },
                ComponentSpec::Attached {
                    bus: 0,
                    kind: ComponentKind::Generator,
                    cost: 10.0,
                },
                ComponentSpec::Attached {
                    bus: 1,
                    kind: ComponentKind::Generator,
                    cost: 10.0,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn balanced_split() {
        let r = decode(&two_bus(), &Assignment::parse("10").unwrap()).unwrap();
        assert_eq!((r.n1, r.n2, r.m_c), (1, 1, 1));
        assert_eq!(r.delta_w_components, 0.0);
        assert_eq!(r.w_cut, 9.0);
        assert_eq!(r.w_cinj, 10.0);
        assert_eq!(r.delta_w_networks, 0);
        assert_eq!(
            r.cut_edges,
            vec![CutEdge {
                edge: 0,
                from_bus: 1,
                to_bus: 2
            }]
        );
        assert_eq!(
            r.component_assignment,
            vec![
                ComponentSide::Cut,
                ComponentSide::Part1,
                ComponentSide::Part2
            ]
        );
        assert!(r.both_connected());
    }

    #[test]
    fn one_sided_split() {
        let r = decode(&two_bus(), &Assignment::parse("11").unwrap()).unwrap();
        assert_eq!(r.m_c, 0);
        assert_eq!(r.delta_w_components, 25.0);
        assert_eq!(r.delta_w_incident, 30.0);
        assert_eq!(r.delta_w_networks, 6);
        assert_eq!(r.connected, [Connectivity::Connected, Connectivity::Empty]);
        let z = decode(&two_bus(), &Assignment::parse("00").unwrap()).unwrap();
        assert_eq!(z.delta_n, -2);
    }

    #[test]
    fn complement_swaps_parts() {
        let sim = two_bus();
        let a = decode(&sim, &Assignment::parse("10").unwrap()).unwrap();
        let b = decode(&sim, &Assignment::parse("01").unwrap()).unwrap();
        assert_eq!((a.n1, a.n2), (b.n2, b.n1));
        assert_eq!(a.delta_w_components, -b.delta_w_components);
        assert_eq!(a.w_cut, b.w_cut);
    }

    #[test]
    fn length_mismatch() {
        assert!(decode(&two_bus(), &Assignment::parse("101").unwrap()).is_err());
    }

    #[test]
    fn csv_row_layout() {
        let r = decode(&two_bus(), &Assignment::parse("10").unwrap()).unwrap();
        assert_eq!(r.csv_row(Some(0.9)), "1,1,1,0,9,0,true,true,0.9");
        assert_eq!(
            REPORT_CSV_HEADER.split(',').count(),
            r.csv_row(None).split(',').count()
        );
    }
}
