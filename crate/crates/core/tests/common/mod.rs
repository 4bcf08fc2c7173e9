#![allow(dead_code)]

use gridqubo::grid_model::{
    build_sim_graph, parse_matpower, ComponentKind, ComponentSpec, CostModel, GridCase, SimGraph,
};
use gridqubo::solvers::Assignment;
use rand::Rng;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/data/{name}.m", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn case(name: &str) -> GridCase {
    parse_matpower(&fixture(name)).unwrap()
}

pub fn sim(name: &str) -> SimGraph {
    build_sim_graph(&case(name), &CostModel::default()).unwrap()
}

pub fn all_assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0..1u64 << n).map(move |m| Assignment::from_mask(m, n))
}

/// Random connected grid: a random spanning tree plus extra lines, random
/// generator and load attachments with random costs.
pub fn random_sim(rng: &mut impl Rng, n: usize) -> SimGraph {
    let mut specs = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        specs.push(ComponentSpec::Line {
            from: u,
            to: v,
            cost: rng.gen_range(1.0..8.0),
        });
    }
    for _ in 0..rng.gen_range(0..=n) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            specs.push(ComponentSpec::Line {
                from: u,
                to: v,
                cost: rng.gen_range(1.0..8.0),
            });
        }
    }
    for bus in 0..n {
        if rng.gen_bool(0.4) {
            specs.push(ComponentSpec::Attached {
                bus,
                kind: ComponentKind::Generator,
                cost: rng.gen_range(5.0..15.0),
            });
        }
        if rng.gen_bool(0.3) {
            specs.push(ComponentSpec::Attached {
                bus,
                kind: ComponentKind::Load,
                cost: rng.gen_range(1.0..4.0),
            });
        }
    }
    SimGraph::assemble("random", (1..=n as u32).collect(), &specs).unwrap()
}

/// Union-find over lines inside each part; `[part1, part2]` connected flags.
pub fn union_find_connected(sim: &SimGraph, z: &Assignment) -> [bool; 2] {
    let n = sim.n_grid();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let bits = z.bits();
    for e in sim.lines() {
        if bits[e.u] == bits[e.v] {
            let (a, b) = (root(&mut parent, e.u), root(&mut parent, e.v));
            parent[a] = b;
        }
    }
    [1u8, 0].map(|side| {
        let members: Vec<usize> = (0..n).filter(|&k| bits[k] == side).collect();
        match members.first() {
            None => false,
            Some(&first) => {
                let r = root(&mut parent, first);
                members.iter().all(|&m| root(&mut parent, m) == r)
            }
        }
    })
}
