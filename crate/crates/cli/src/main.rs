mod args;
mod commands;
mod error;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::Ctx;
use error::CliResult;
use output::Output;

fn run(cli: Cli) -> CliResult<Option<String>> {
    let g = &cli.global;
    let costs = input::load_costs(g.cost_model.as_deref())?;
    let (name, args) = match &cli.command {
        Command::Build(a) => ("build", serde_json::to_value(a)),
        Command::Solve(a) => ("solve", serde_json::to_value(a)),
        Command::Evaluate(a) => ("evaluate", serde_json::to_value(a)),
        Command::Sweep(a) => ("sweep", serde_json::to_value(a)),
        Command::Estimate(a) => ("estimate", serde_json::to_value(a)),
        Command::Bisect(a) => ("bisect", serde_json::to_value(a)),
        Command::FetchCases(a) => ("fetch-cases", serde_json::to_value(a)),
    };
    let config = json!({
        "command": name,
        "seed": g.seed,
        "cost_model": costs.to_json(),
        "args": args.map_err(gridqubo::Error::from)?,
    });
    let out = Output::create(&g.out_dir, name, g.seed, config, g.quiet)?;
    let mut ctx = Ctx {
        seed: g.seed,
        costs,
        out,
    };
    let verdict = match &cli.command {
        Command::Build(a) => commands::build::run(a, &mut ctx),
        Command::Solve(a) => commands::solve::run(a, &mut ctx),
        Command::Evaluate(a) => commands::evaluate::run(a, &mut ctx),
        Command::Sweep(a) => commands::sweep::run(a, &mut ctx),
        Command::Estimate(a) => commands::estimate::run(a, &mut ctx),
        Command::Bisect(a) => commands::bisect::run(a, &mut ctx),
        Command::FetchCases(a) => commands::fetch::run(a, &mut ctx, &g.out_dir),
    }?;
    ctx.out.finish()?;
    Ok(verdict)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(message)) => {
            eprintln!("gridqubo: {message}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("gridqubo: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
