use serde::Serialize;
use serde_json::json;

use gridqubo::metrics::{quality_stats, AnnealTimeUnit, Reference, Tts};
use gridqubo::solvers::{solve_exact, solve_sa, ExactConfig, SaParams, SolverConfig};
use gridqubo::Samples;

use super::{anneal_time, Ctx, Verdict};
use crate::args::{SolverKind, SweepArgs, SweepParam};
use crate::error::{CliError, CliResult};
use crate::input::{build_objective, load_sim};

#[derive(Debug, Serialize)]
struct Row {
    param: SweepParam,
    value: usize,
    rep: usize,
    seed: u64,
    reads: usize,
    sweeps: usize,
    l_min: f64,
    tts: Tts,
    t_a: f64,
    t_a_unit: AnnealTimeUnit,
    mean: f64,
    q05: f64,
    q25: f64,
    q50: f64,
    q75: f64,
    q95: f64,
    n_opt: u64,
    n_s: u64,
}

const CSV_HEADER: &str =
    "param,value,rep,seed,reads,sweeps,L_min,TTS,t_a,mean,q05,q25,q50,q75,q95,n_opt,n_s";

impl Row {
    fn csv(&self) -> String {
        let param = match self.param {
            SweepParam::Sweeps => "sweeps",
            SweepParam::Reads => "reads",
        };
        format!(
            "{param},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.value,
            self.rep,
            self.seed,
            self.reads,
            self.sweeps,
            self.l_min,
            self.tts,
            self.t_a,
            self.mean,
            self.q05,
            self.q25,
            self.q50,
            self.q75,
            self.q95,
            self.n_opt,
            self.n_s
        )
    }
}

pub fn run(args: &SweepArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    if args.solver.solver == Some(SolverKind::Exact) {
        return Err(CliError::Usage(
            "sweep varies annealing parameters; use --solver sa".into(),
        ));
    }
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be >= 1".into()));
    }
    let sim = load_sim(&args.case, &ctx.costs)?;
    let problem = build_objective(&sim, &args.objective)?;

    let mut runs: Vec<(usize, usize, SaParams, Samples)> = Vec::new();
    for &value in &args.values {
        for rep in 0..args.reps {
            let mut params = SaParams {
                reads: args.solver.reads,
                sweeps: args.solver.sweeps,
                t_hot: args.solver.t_hot,
                t_cold: args.solver.t_cold,
                seed: ctx.seed.wrapping_add(rep as u64),
            };
            match args.param {
                SweepParam::Sweeps => params.sweeps = value,
                SweepParam::Reads => params.reads = value,
            }
            params.validate()?;
            let samples = solve_sa(&problem, &params)?;
            runs.push((value, rep, params, samples));
        }
    }

    let reference = if args.quality.exact_reference {
        let ground = solve_exact(
            &problem,
            &ExactConfig {
                limit: args.solver.exact_limit,
            },
        )?;
        (
            ground.best().expect("exact yields ground states").energy,
            Reference::Exact,
        )
    } else {
        let lowest = runs
            .iter()
            .filter_map(|(.., s)| s.best().map(|r| r.energy))
            .fold(f64::INFINITY, f64::min);
        (lowest, Reference::BestKnown)
    };

    let mut rows = Vec::with_capacity(runs.len());
    for (value, rep, params, samples) in &runs {
        let (t_a, unit) = anneal_time(&SolverConfig::Sa(*params), samples, args.quality.wall_clock);
        let stats = quality_stats(samples, Some(reference), args.quality.p_s, t_a, unit)?;
        rows.push(Row {
            param: args.param,
            value: *value,
            rep: *rep,
            seed: params.seed,
            reads: params.reads,
            sweeps: params.sweeps,
            l_min: stats.l_min,
            tts: stats.tts,
            t_a,
            t_a_unit: unit,
            mean: stats.summary.mean,
            q05: stats.summary.q05,
            q25: stats.summary.q25,
            q50: stats.summary.q50,
            q75: stats.summary.q75,
            q95: stats.summary.q95,
            n_opt: stats.n_opt,
            n_s: stats.n_s,
        });
    }

    let mut csv = format!("{CSV_HEADER}\n");
    for row in &rows {
        csv.push_str(&row.csv());
        csv.push('\n');
    }
    ctx.out.text("sweep.csv", &csv)?;
    ctx.out.json(
        "sweep.json",
        &json!({"reference": {"energy": reference.0, "kind": reference.1}, "rows": rows}),
    )?;
    for &value in &args.values {
        let of_value: Vec<&Row> = rows.iter().filter(|r| r.value == value).collect();
        let mean = of_value.iter().map(|r| r.mean).sum::<f64>() / of_value.len() as f64;
        let hits = of_value.iter().filter(|r| r.l_min == 0.0).count();
        ctx.out.say(format!(
            "{}={value}: mean L={mean:.6} L_min=0 in {hits}/{} reps",
            if args.param == SweepParam::Sweeps {
                "sweeps"
            } else {
                "reads"
            },
            of_value.len()
        ));
    }
    Ok(None)
}
