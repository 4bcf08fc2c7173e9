use serde_json::json;

use gridqubo::evaluation::{decode, REPORT_CSV_HEADER};
use gridqubo::qubo::q_part;
use gridqubo::solvers::{Assignment, SampleSetFile};

use super::{Ctx, Verdict};
use crate::args::EvaluateArgs;
use crate::error::{CliError, CliResult};
use crate::input::{in_file, load_sim, read_text};

fn read_assignment(args: &EvaluateArgs) -> CliResult<Assignment> {
    if let Some(bits) = &args.bits {
        return Assignment::parse(bits.trim()).map_err(|e| CliError::Usage(format!("--bits: {e}")));
    }
    let path = args
        .assignment
        .as_ref()
        .expect("clap requires --assignment or --bits");
    let text = read_text(path)?;
    let text = text.trim();
    if !text.starts_with('{') {
        return in_file(path, Assignment::parse(text));
    }
    let file = in_file(
        path,
        serde_json::from_str::<SampleSetFile>(text).map_err(Into::into),
    )?;
    file.records
        .into_iter()
        .min_by(|a, b| {
            a.energy
                .total_cmp(&b.energy)
                .then_with(|| a.bits.cmp(&b.bits))
        })
        .map(|r| r.bits)
        .ok_or_else(|| CliError::Input {
            path: path.clone(),
            source: gridqubo::Error::EmptySampleSet,
        })
}

pub fn run(args: &EvaluateArgs, ctx: &mut Ctx) -> CliResult<Verdict> {
    let sim = load_sim(&args.case, &ctx.costs)?;
    let z = read_assignment(args)?;
    let report = decode(&sim, &z)?;
    let energy = q_part::<f64>(&sim)?.energy(z.bits())?;
    ctx.out.json(
        "report.json",
        &json!({
            "bits": z,
            "energy": energy,
            "c_max": sim.c_max(),
            "normalized": report.normalized(sim.c_max()),
            "report": report,
        }),
    )?;
    ctx.out.text(
        "report.csv",
        &format!("{REPORT_CSV_HEADER}\n{}\n", report.csv_row(Some(energy))),
    )?;
    ctx.out.say(format!(
        "N1={} N2={} M_c={} dW_comp={} W_cut={} dW_net={} connected={}/{} energy={}",
        report.n1,
        report.n2,
        report.m_c,
        report.delta_w_components,
        report.w_cut,
        report.delta_w_networks,
        report.connected[0].is_connected(),
        report.connected[1].is_connected(),
        energy
    ));
    Ok(None)
}
