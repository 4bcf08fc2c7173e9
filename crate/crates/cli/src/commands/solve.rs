use serde_json::json;

use gridqubo::evaluation::{decode, enforce_connectedness, LoopStatus};
use gridqubo::metrics::{quality_stats, Reference};
use gridqubo::qubo::QuboFile;
use gridqubo::solvers::{solve_exact, ExactConfig, Sampler, SolverConfig};

use super::{anneal_time, Ctx, Verdict};
use crate::args::{SolveArgs, SolverKind};
use crate::error::CliResult;
use crate::input::{build_objective, in_file, load_sim, read_text, solver_config};

pub fn run(args: &SolveArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    let (problem, sim) = match (&args.qubo, &args.case) {
        (Some(path), _) => {
            let text = read_text(path)?;
            let file = in_file(
                path,
                serde_json::from_str::<QuboFile>(&text).map_err(Into::into),
            )?;
            (in_file(path, file.into_problem())?, None)
        }
        (None, Some(path)) => {
            let sim = load_sim(path, &ctx.costs)?;
            (build_objective(&sim, &args.objective)?, Some(sim))
        }
        (None, None) => unreachable!("clap requires --case or --qubo"),
    };
    let config = solver_config(&args.solver, ctx.seed, SolverKind::Sa)?;

    let mut verdict = None;
    let (samples, outcome) = match (&sim, args.connected) {
        (Some(sim), true) => {
            let outcome = enforce_connectedness(sim, &problem, &config, args.max_rounds)?;
            let last = outcome
                .rounds
                .last()
                .expect("at least one round")
                .samples
                .clone();
            (last, Some(outcome))
        }
        _ => (config.sample(&problem, 0)?, None),
    };

    let exact_own = matches!(config, SolverConfig::Exact(_)) && outcome.is_none();
    let reference = if exact_own {
        Some((
            samples.best().expect("exact yields ground states").energy,
            Reference::Exact,
        ))
    } else if args.quality.exact_reference || matches!(config, SolverConfig::Exact(_)) {
        let ground = solve_exact(
            &problem,
            &ExactConfig {
                limit: args.solver.exact_limit,
            },
        )?;
        Some((
            ground.best().expect("exact yields ground states").energy,
            Reference::Exact,
        ))
    } else {
        None
    };
    let (t_a, unit) = anneal_time(&config, &samples, args.quality.wall_clock);
    let stats = quality_stats(&samples, reference, args.quality.p_s, t_a, unit)?;

    let mut file = samples.to_file();
    file.meta = None;
    ctx.out.json("samples.json", &file)?;
    ctx.out.json("stats.json", &stats)?;
    let mut csv = String::from("L\n");
    for l in stats.l_per_read(&samples) {
        csv.push_str(&format!("{l}\n"));
    }
    ctx.out.text("l_values.csv", &csv)?;

    let best = samples.best().expect("non-empty sample set");
    if let Some(sim) = &sim {
        let report = decode(sim, &best.assignment)?;
        ctx.out.json(
            "best_report.json",
            &json!({"bits": best.assignment, "energy": best.energy, "report": report}),
        )?;
    }
    if let Some(outcome) = &outcome {
        let rounds: Vec<_> = outcome
            .rounds
            .iter()
            .map(|r| {
                json!({
                    "round": r.round,
                    "records": r.samples.records.len(),
                    "feasible_records": r.feasible.iter().filter(|&&f| f).count(),
                    "banned": r.banned,
                })
            })
            .collect();
        let best_connected = outcome
            .best
            .as_ref()
            .map(|b| json!({"bits": b.assignment, "energy": b.energy, "report": b.report}));
        ctx.out.json(
            "connected.json",
            &json!({"status": outcome.status, "rounds": rounds, "best": best_connected}),
        )?;
        match (&outcome.status, &outcome.best) {
            (LoopStatus::Found, Some(b)) => ctx.out.say(format!(
                "connected solution {} E={} after {} round(s)",
                b.assignment,
                b.energy,
                outcome.rounds.len()
            )),
            (LoopStatus::Exhausted, _) => {
                verdict = Some(format!(
                    "no connected partition accepted within {} round(s)",
                    args.max_rounds
                ))
            }
            _ => {}
        }
    }

    ctx.out.say(format!(
        "best E={} bits={} L_min={} n_opt={}/{} TTS={} reference={}",
        best.energy,
        best.assignment,
        stats.l_min,
        stats.n_opt,
        stats.n_s,
        stats.tts,
        match stats.reference {
            Reference::Exact => "exact",
            Reference::BestKnown => "best-known",
        }
    ));
    Ok(verdict)
}
