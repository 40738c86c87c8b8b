//! Configuration-driven sweeps and reports behind the command-line tool.

mod config;
mod output;
mod sweep;
mod validate;

pub use config::{GeometrySpec, LengthAndH, ScenarioConfig, SweepConfig, Trajectory, Walls};
pub use output::{sidecar_path, write_csv, write_result};
pub use sweep::{
    fmt_f64, run_figure2, run_figure3, run_report, ScenarioReport, SweepResult, SweepRow, COLUMNS,
};
pub use validate::{run_validate, Check};
