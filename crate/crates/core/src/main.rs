use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dirac_cavity::scenario::{
    run_figure2, run_figure3, run_report, run_validate, write_result, ScenarioConfig, SweepResult,
};
use dirac_cavity::{Error, Result};

#[derive(Parser)]
#[command(version, about = "Entanglement degradation of Dirac fields in accelerated cavities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-segment degradation against u for several s and k
    Figure2(Common),
    /// One-way-trip degradation over the (u, v) square
    Figure3(Common),
    /// Closed-form and density-matrix evaluation of one scenario
    Report(Common),
    /// Run the invariant checks
    Validate(Common),
}

#[derive(Args)]
struct Common {
    /// JSON scenario file; defaults apply to missing keys
    #[arg(long)]
    config: Option<PathBuf>,
    /// CSV output path (a .meta.json sidecar is written next to it)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Mode window half-width for leakage sums
    #[arg(long)]
    window: Option<usize>,
    /// Acceleration parameter, keeping the cavity length
    #[arg(long)]
    h: Option<f64>,
    /// Sweep grid as NxN or UxV
    #[arg(long, value_parser = parse_grid)]
    grid: Option<(usize, usize)>,
}

fn parse_grid(text: &str) -> std::result::Result<(usize, usize), String> {
    let (u, v) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected NxN, got {text:?}"))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    Ok((parse(u)?, parse(v)?))
}

impl Common {
    fn load(&self) -> Result<ScenarioConfig> {
        let mut config = match &self.config {
            Some(path) => ScenarioConfig::load(path)?,
            None => ScenarioConfig::default(),
        };
        if let Some(out) = &self.out {
            config.out = Some(out.clone());
        }
        if let Some(window) = self.window {
            config.window = window;
        }
        if let Some(h) = self.h {
            config.set_h(h);
        }
        if let Some((u, v)) = self.grid {
            config.set_grid(u, v);
        }
        config.validate()?;
        Ok(config)
    }
}

fn emit(name: &str, config: &ScenarioConfig, result: &SweepResult) -> Result<()> {
    write_result(config.out.as_deref(), name, config, result)?;
    result.check(config.tolerance)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Figure2(common) => {
            let config = common.load()?;
            emit("figure2", &config, &run_figure2(&config)?)
        }
        Command::Figure3(common) => {
            let config = common.load()?;
            emit("figure3", &config, &run_figure3(&config)?)
        }
        Command::Report(common) => {
            let config = common.load()?;
            let report = run_report(&config)?;
            if config.out.is_some() {
                eprintln!(
                    "negativity {:.10} (density matrices {:.10}), discrepancy {:.3e}",
                    report.closed_form.negativity, report.oracle_negativity, report.row.discrepancy
                );
            }
            if report.row.validity_flag {
                eprintln!("warning: |k|h >= 0.3, outside the perturbative regime");
            }
            let result = SweepResult { rows: vec![report.row] };
            emit("report", &config, &result)
        }
        Command::Validate(common) => {
            let config = common.load()?;
            let checks = run_validate(&config)?;
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                println!("{status} {} {}", c.name, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Error::ToleranceBreach(format!("{failed} check(s) failed")));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
