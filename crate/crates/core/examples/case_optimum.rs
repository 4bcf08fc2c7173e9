//! Prints the exhaustive partitioning optimum of a MATPOWER case.
//!
//! `cargo run --release -p gridqubo --example case_optimum -- path/to/case14.m [--loads]`

use gridqubo::evaluation::decode;
use gridqubo::grid_model::{build_sim_graph, parse_matpower, CostModel};
use gridqubo::qubo::q_part;
use gridqubo::solvers::{solve_exact, ExactConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .ok_or("usage: case_optimum <case.m>")?;
    let case = parse_matpower(&std::fs::read_to_string(path)?)?;
    let mut costs = CostModel::default();
    costs.include_loads = std::env::args().any(|a| a == "--loads");
    let sim = build_sim_graph(&case, &costs)?;
    let problem = q_part::<f64>(&sim)?;
    let set = solve_exact(&problem, &ExactConfig { limit: 30 })?;
    println!(
        "{}: N={} ground states={} ({:.1} ms)",
        case.name,
        sim.n_grid(),
        set.records.len(),
        set.wall_time_ms
    );
    for r in &set.records {
        let rep = decode(&sim, &r.assignment)?;
        println!(
            "  {} E={:.6} N1={} N2={} M_c={} dW_comp={} W_cut={} connected={:?}",
            r.assignment,
            r.energy,
            rep.n1,
            rep.n2,
            rep.m_c,
            rep.delta_w_components,
            rep.w_cut,
            rep.connected
        );
    }
    Ok(())
}
