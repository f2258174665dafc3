//! CSV and JSON artifacts plus the run manifest.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use super::CliError;

/// Nine significant digits, `.` decimal separator.
pub fn fmt_number(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn fmt_optional(x: Option<f64>) -> String {
    x.map(fmt_number).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub seed: u64,
    pub config: serde_json::Value,
    /// Every file written, `manifest.json` last.
    pub outputs: Vec<PathBuf>,
    pub wall_time_seconds: f64,
}

/// Collects the files written into one output directory.
pub struct OutputDir {
    dir: PathBuf,
    written: Vec<PathBuf>,
    started: Instant,
}

impl OutputDir {
    pub fn create(dir: &Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        Ok(Self { dir: dir.to_path_buf(), written: Vec::new(), started: Instant::now() })
    }

    pub fn write_csv(&mut self, name: &str, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
        let path = self.dir.join(name);
        let io = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_path(&path).map_err(io)?;
        w.write_record(header).map_err(io)?;
        for row in rows {
            w.write_record(row).map_err(io)?;
        }
        w.flush().map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        self.written.push(path);
        Ok(())
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<(), CliError> {
        let path = self.dir.join(name);
        let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Other(e.to_string()))?;
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        self.written.push(path);
        Ok(())
    }

    /// Writes `manifest.json` and returns it.
    pub fn finish(mut self, command: &str, seed: u64, config: serde_json::Value) -> Result<RunManifest, CliError> {
        let path = self.dir.join("manifest.json");
        self.written.push(path.clone());
        let manifest = RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            config,
            outputs: self.written,
            wall_time_seconds: self.started.elapsed().as_secs_f64(),
        };
        let mut text = serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Other(e.to_string()))?;
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Ok(manifest)
    }
}
