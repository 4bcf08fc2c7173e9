use serde_json::json;

use gridqubo::grid_model::SimGraph;
use gridqubo::qubo::q_size;

use super::{Ctx, Verdict};
use crate::args::{BuildArgs, ObjectiveKind};
use crate::error::{CliError, CliResult};
use crate::input::{build_objective, load_sim};

pub fn bus_index(sim: &SimGraph) -> serde_json::Value {
    let buses: Vec<_> = sim
        .bus_ids()
        .iter()
        .enumerate()
        .map(|(index, id)| json!({"index": index, "bus_id": id}))
        .collect();
    json!({ "name": sim.name(), "buses": buses })
}

pub fn run(args: &BuildArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    let (problem, sim) = match (&args.case, args.n_vars) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--n-vars only applies without --case".into(),
            ))
        }
        (None, Some(n)) if args.objective.objective == ObjectiveKind::Size => (q_size(n)?, None),
        (None, _) => {
            return Err(CliError::Usage(
                "--case is required unless building --objective size with --n-vars".into(),
            ))
        }
        (Some(path), None) => {
            let sim = load_sim(path, &ctx.costs)?;
            (build_objective(&sim, &args.objective)?, Some(sim))
        }
    };
    ctx.out.json("qubo.json", &problem.to_file())?;
    if let Some(sim) = &sim {
        ctx.out.json("sim_graph.json", &sim.to_json())?;
        ctx.out.json("bus_index.json", &bus_index(sim))?;
    }
    ctx.out.say(format!(
        "n_vars={} terms={} offset={}",
        problem.n_vars(),
        problem.terms().len(),
        problem.offset()
    ));
    Ok(None)
}
