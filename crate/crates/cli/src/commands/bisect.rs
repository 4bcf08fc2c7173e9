use serde_json::json;

use gridqubo::evaluation::bisect_iterative;

use super::{Ctx, Verdict};
use crate::args::BisectArgs;
use crate::error::CliResult;
use crate::input::{default_solver, load_sim, solver_config};

pub fn run(args: &BisectArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    let sim = load_sim(&args.case, &ctx.costs)?;
    let config = solver_config(&args.solver, ctx.seed, default_solver(sim.n_grid()))?;
    let mp = bisect_iterative(&sim, args.parts, &config)?;

    let labels: Vec<_> = sim
        .bus_ids()
        .iter()
        .zip(&mp.part_of)
        .map(|(bus, part)| json!({"bus_id": bus, "part": part}))
        .collect();
    ctx.out.json(
        "bisect.json",
        &json!({
            "parts": mp.parts,
            "part_sizes": mp.part_sizes(),
            "labels": labels,
            "solver": config,
            "tree": mp.tree,
        }),
    )?;
    let mut csv = String::from("bus_id,part\n");
    for (bus, part) in sim.bus_ids().iter().zip(&mp.part_of) {
        csv.push_str(&format!("{bus},{part}\n"));
    }
    ctx.out.text("parts.csv", &csv)?;
    ctx.out.say(format!(
        "{} parts with sizes {:?}",
        mp.parts,
        mp.part_sizes()
    ));
    for node in &mp.tree {
        ctx.out.say(format!(
            "  {}: N1={} N2={} M_c={}",
            node.name, node.report.n1, node.report.n2, node.report.m_c
        ));
    }
    Ok(None)
}
