pub mod bisect;
pub mod build;
pub mod estimate;
pub mod evaluate;
pub mod fetch;
pub mod solve;
pub mod sweep;

use gridqubo::grid_model::CostModel;
use gridqubo::metrics::AnnealTimeUnit;
use gridqubo::solvers::SolverConfig;
use gridqubo::Samples;

use crate::output::Output;

pub struct Ctx {
    pub seed: u64,
    pub costs: CostModel,
    pub out: Output,
}

/// `Some(message)` when the run finished but a required solution was not found.
pub type Verdict = Option<String>;

/// Wall-clock times below this are clamped so a time-to-solution stays defined.
const MIN_WALL_MS: f64 = 1e-6;

/// Annealing time per read and its unit.
pub fn anneal_time(
    config: &SolverConfig,
    samples: &Samples,
    wall_clock: bool,
) -> (f64, AnnealTimeUnit) {
    match config {
        SolverConfig::Sa(p) if !wall_clock => (p.sweeps as f64, AnnealTimeUnit::Sweeps),
        SolverConfig::Sa(_) => (
            (samples.wall_time_ms / samples.total_reads as f64).max(MIN_WALL_MS),
            AnnealTimeUnit::WallClockMs,
        ),
        _ => (
            samples.wall_time_ms.max(MIN_WALL_MS),
            AnnealTimeUnit::WallClockMs,
        ),
    }
}
