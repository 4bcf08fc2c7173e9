use std::fs;
use std::path::Path;

use gridqubo::grid_model::{build_sim_graph, parse_matpower, CostModel, GridCase, SimGraph};
use gridqubo::qubo::{
    cut_edge_weights, q_components, q_cut, q_modularity, q_network, q_part, q_size, q_weights,
    scalarize, WeightedGraph,
};
use gridqubo::solvers::{ExactConfig, SaParams, SolverConfig, DEFAULT_EXACT_LIMIT};
use gridqubo::Qubo;

use crate::args::{ObjectiveArgs, ObjectiveKind, SolverArgs, SolverKind};
use crate::error::{CliError, CliResult};

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Attaches the offending path to core errors raised while reading a file.
pub fn in_file<T>(path: &Path, r: gridqubo::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_costs(path: Option<&Path>) -> CliResult<CostModel> {
    match path {
        None => Ok(CostModel::default()),
        Some(p) => in_file(p, CostModel::from_json(&read_text(p)?)),
    }
}

pub fn load_case(path: &Path) -> CliResult<GridCase> {
    in_file(path, parse_matpower(&read_text(path)?))
}

pub fn load_sim(path: &Path, costs: &CostModel) -> CliResult<SimGraph> {
    let case = load_case(path)?;
    in_file(path, build_sim_graph(&case, costs))
}

fn single(sim: &SimGraph, kind: ObjectiveKind, p: f64) -> CliResult<Qubo> {
    let grid = WeightedGraph::grid_of(sim);
    Ok(match kind {
        ObjectiveKind::Part => q_part(sim)?,
        ObjectiveKind::Components => q_components(sim),
        ObjectiveKind::Cut => q_cut(&cut_edge_weights(sim))?,
        ObjectiveKind::Network => q_network(sim)?,
        ObjectiveKind::Size => q_size(sim.n_grid())?,
        ObjectiveKind::Weights => q_weights(&grid, p)?,
        ObjectiveKind::Mod => q_modularity(&grid)?,
        ObjectiveKind::Scalarized => unreachable!("handled by build_objective"),
    })
}

pub fn build_objective(sim: &SimGraph, args: &ObjectiveArgs) -> CliResult<Qubo> {
    if args.objective != ObjectiveKind::Scalarized {
        if !args.terms.is_empty() {
            return Err(CliError::Usage(
                "--term is only valid with --objective scalarized".into(),
            ));
        }
        return single(sim, args.objective, args.p);
    }
    if args.terms.is_empty() {
        return Err(CliError::Usage(
            "--objective scalarized needs at least one --term name=lambda".into(),
        ));
    }
    let built = args
        .terms
        .iter()
        .map(|&(kind, lambda)| Ok((single(sim, kind, args.p)?, lambda)))
        .collect::<CliResult<Vec<_>>>()?;
    let refs: Vec<(&Qubo, f64)> = built.iter().map(|(q, l)| (q, *l)).collect();
    Ok(scalarize(&refs)?)
}

/// Solver configuration; `default` applies when `--solver` is absent.
pub fn solver_config(args: &SolverArgs, seed: u64, default: SolverKind) -> CliResult<SolverConfig> {
    let exact = ExactConfig {
        limit: args.exact_limit,
    };
    Ok(match args.solver.unwrap_or(default) {
        SolverKind::Exact => SolverConfig::Exact(exact),
        SolverKind::Sa => {
            let params = SaParams {
                reads: args.reads,
                sweeps: args.sweeps,
                t_hot: args.t_hot,
                t_cold: args.t_cold,
                seed,
            };
            params.validate()?;
            SolverConfig::Sa(params)
        }
    })
}

/// Exact for problems the exhaustive solver handles by default, annealing otherwise.
pub fn default_solver(n_vars: usize) -> SolverKind {
    if n_vars <= DEFAULT_EXACT_LIMIT {
        SolverKind::Exact
    } else {
        SolverKind::Sa
    }
}
