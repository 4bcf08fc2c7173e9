use gridqubo::metrics::{estimate_embedding, CouplerBase, EmbeddingLaw};

use super::{Ctx, Verdict};
use crate::args::{CouplerBaseArg, EstimateArgs};
use crate::error::{CliError, CliResult};
use crate::input::{in_file, load_case, read_text};

pub fn run(args: &EstimateArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    let n = match (args.n, &args.case) {
        (Some(n), _) => n,
        (None, Some(path)) => load_case(path)?.buses.len(),
        (None, None) => unreachable!("clap requires --n or --case"),
    };
    let mut law = match &args.law {
        None => EmbeddingLaw::default(),
        Some(path) => in_file(
            path,
            serde_json::from_str(&read_text(path)?).map_err(Into::into),
        )?,
    };
    if let Some(base) = args.coupler_base {
        law.coupler_base = match base {
            CouplerBaseArg::Buses => CouplerBase::Buses,
            CouplerBaseArg::LogicalCouplers => CouplerBase::LogicalCouplers,
        };
    }
    let estimate = estimate_embedding(n, &law).map_err(|e| CliError::Usage(e.to_string()))?;
    ctx.out.json("estimate.json", &estimate)?;
    ctx.out.say(format!(
        "N={n}: logical couplers={} physical qubits={:.0} physical couplers={:.0} -> {}",
        estimate.logical_couplers,
        estimate.physical_qubits,
        estimate.physical_couplers,
        if estimate.feasible {
            "feasible"
        } else {
            "infeasible"
        }
    ));
    Ok(None)
}
