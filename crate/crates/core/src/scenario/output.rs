use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::ScenarioConfig;
use super::sweep::{SweepResult, COLUMNS};
use crate::error::{Error, Result};

/// Path of the JSON sidecar that accompanies `csv_path`.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    let mut name = csv_path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

#[derive(Debug, Serialize)]
struct Metadata<'a> {
    command: &'a str,
    library_version: &'static str,
    columns: [&'static str; 11],
    rows: usize,
    window: usize,
    composition_window: usize,
    tolerance: f64,
    max_discrepancy: f64,
    config: &'a ScenarioConfig,
}

pub fn write_csv<W: Write>(writer: W, result: &SweepResult) -> csv::Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(COLUMNS)?;
    for row in &result.rows {
        csv.write_record(row.fields())?;
    }
    csv.flush()?;
    Ok(())
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let source = match e.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => io::Error::other(format!("{other:?}")),
    };
    Error::io(path, source)
}

/// Writes the CSV to `path` plus its metadata sidecar, or the CSV alone to
/// standard output when no path is given.
pub fn write_result(
    path: Option<&Path>,
    command: &str,
    config: &ScenarioConfig,
    result: &SweepResult,
) -> Result<()> {
    let Some(path) = path else {
        let stdout = io::stdout();
        return write_csv(stdout.lock(), result).map_err(|e| csv_error(Path::new("<stdout>"), e));
    };
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(file, result).map_err(|e| csv_error(path, e))?;

    let meta = Metadata {
        command,
        library_version: env!("CARGO_PKG_VERSION"),
        columns: COLUMNS,
        rows: result.rows.len(),
        window: config.window,
        composition_window: config.composition_window,
        tolerance: config.tolerance,
        max_discrepancy: result.max_discrepancy(),
        config,
    };
    let sidecar = sidecar_path(path);
    let mut text = serde_json::to_string_pretty(&meta).expect("metadata serialises");
    text.push('\n');
    std::fs::write(&sidecar, text).map_err(|e| Error::io(&sidecar, e))
}
