//! Experiment files.
//!
//! A file has one `[experiment]` table, optional `[regressor]` and `[noise]`
//! tables, one or more `[[algorithm]]` entries and, for `sweep`, a `[sweep]`
//! table of grids. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::filters::{AlgorithmKind, AlgorithmSpec};
use crate::simkit::{ExperimentConfig, NoiseKind, NoiseModel, RegressorKind, RegressorModel, SimError, TailWindow, TrueSystem};
use crate::theory;

/// Seed used when neither the file nor `--seed` provides one.
pub const DEFAULT_SEED: u64 = 0x5EED_2015;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub experiment: ExperimentSection,
    #[serde(default)]
    pub regressor: RegressorSection,
    #[serde(default)]
    pub noise: NoiseSection,
    #[serde(rename = "algorithm", default)]
    pub algorithms: Vec<AlgorithmSection>,
    pub sweep: Option<SweepSection>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default = "default_order")]
    pub filter_order: usize,
    pub iterations: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    pub seed: Option<u64>,
    pub tail_window: Option<TailSetting>,
    #[serde(default)]
    pub tracking_q_var: f64,
    /// Fixed true system; drawn at random per trial when absent.
    pub true_system: Option<Vec<f64>>,
    pub initial_weights: Option<Vec<f64>>,
    /// Adds predicted curves to `curves.csv` where a prediction exists.
    #[serde(default = "yes")]
    pub theory: bool,
}

fn default_order() -> usize {
    5
}

fn default_trials() -> usize {
    100
}

fn yes() -> bool {
    true
}

/// An integer selects the last `n` iterations, a float a trailing fraction.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum TailSetting {
    Last(u64),
    Fraction(f64),
}

impl From<TailSetting> for TailWindow {
    fn from(t: TailSetting) -> Self {
        match t {
            TailSetting::Last(n) => TailWindow::Last(n as usize),
            TailSetting::Fraction(f) => TailWindow::Fraction(f),
        }
    }
}

/// Parses `--tail-window`: `0.1` is a fraction, `1000` a count.
pub fn parse_tail_window(s: &str) -> Result<TailWindow, String> {
    let s = s.trim();
    let window = if s.contains(['.', 'e', 'E']) {
        TailWindow::Fraction(s.parse().map_err(|_| format!("`{s}` is not a number"))?)
    } else {
        TailWindow::Last(s.parse().map_err(|_| format!("`{s}` is not a count or a fraction"))?)
    };
    window.validate().map_err(|e| e.to_string())?;
    Ok(window)
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegressorSection {
    #[serde(default = "white")]
    pub kind: RegressorKind,
    #[serde(default = "unit")]
    pub sigma_x_sq: f64,
    #[serde(default)]
    pub rho: f64,
}

fn white() -> RegressorKind {
    RegressorKind::White
}

fn unit() -> f64 {
    1.0
}

impl Default for RegressorSection {
    fn default() -> Self {
        Self { kind: RegressorKind::White, sigma_x_sq: 1.0, rho: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseSection {
    #[serde(default = "gaussian")]
    pub kind: NoiseKind,
    #[serde(default = "background")]
    pub sigma_no_sq: f64,
    #[serde(default)]
    pub sigma_ni_sq: f64,
    #[serde(default)]
    pub nu_i: f64,
}

fn gaussian() -> NoiseKind {
    NoiseKind::Gaussian
}

fn background() -> f64 {
    0.01
}

impl Default for NoiseSection {
    fn default() -> Self {
        Self { kind: NoiseKind::Gaussian, sigma_no_sq: 0.01, sigma_ni_sq: 0.0, nu_i: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSection {
    pub kind: String,
    pub mu: f64,
    pub alpha: Option<AlphaSetting>,
    pub huber_gamma: Option<f64>,
    /// Name used in `curves.csv`; defaults to the kind.
    pub label: Option<String>,
}

/// A numeric α or `"opt"`, the impulsive-noise optimum.
#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum AlphaSetting {
    Value(f64),
    Keyword(String),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default)]
    pub mu: Vec<f64>,
    #[serde(default)]
    pub alpha: Vec<AlphaSetting>,
    #[serde(default)]
    pub nu_i: Vec<f64>,
}

/// Command-line settings that take precedence over the file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub iterations: Option<usize>,
    pub tail_window: Option<TailWindow>,
}

/// One `[[algorithm]]` entry resolved against the rest of the file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedExperiment {
    pub label: String,
    pub config: ExperimentConfig,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: cannot read: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<FileConfig, CliError> {
        let file: FileConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string().trim_end().to_string()))?;
        if file.algorithms.is_empty() {
            return Err(CliError::Config("at least one [[algorithm]] entry is required".into()));
        }
        Ok(file)
    }

    pub fn seed(&self, overrides: &Overrides) -> u64 {
        overrides.seed.or(self.experiment.seed).unwrap_or(DEFAULT_SEED)
    }

    pub fn tail_window(&self, overrides: &Overrides) -> Result<TailWindow, CliError> {
        let tail = overrides.tail_window.or(self.experiment.tail_window.map(Into::into)).unwrap_or_default();
        tail.validate().map_err(|e| field_error("experiment", 0, e))?;
        Ok(tail)
    }

    pub fn noise_model(&self) -> NoiseModel {
        let n = &self.noise;
        NoiseModel { kind: n.kind, sigma_no_sq: n.sigma_no_sq, sigma_ni_sq: n.sigma_ni_sq, nu_i: n.nu_i }
    }

    pub fn regressor_model(&self) -> RegressorModel {
        let r = &self.regressor;
        RegressorModel { kind: r.kind, sigma_x_sq: r.sigma_x_sq, rho: r.rho }
    }

    /// Every `[[algorithm]]` entry as a validated experiment.
    pub fn experiments(&self, overrides: &Overrides) -> Result<Vec<ResolvedExperiment>, CliError> {
        let mut out: Vec<ResolvedExperiment> = Vec::with_capacity(self.algorithms.len());
        for idx in 0..self.algorithms.len() {
            let noise = self.noise_model();
            let entry = &self.algorithms[idx];
            let alpha = self.resolve_alpha(idx, entry.alpha.as_ref(), &noise)?;
            let exp = self.build(idx, entry.mu, alpha, noise, overrides)?;
            if out.iter().any(|o| o.label == exp.label) {
                return Err(CliError::Config(format!(
                    "algorithm[{idx}].label: `{}` is used twice; give each entry a distinct label",
                    exp.label
                )));
            }
            out.push(exp);
        }
        Ok(out)
    }

    /// Builds and validates the experiment for entry `idx` with the given
    /// step size, α and noise.
    pub fn build(
        &self,
        idx: usize,
        mu: f64,
        alpha: f64,
        noise: NoiseModel,
        overrides: &Overrides,
    ) -> Result<ResolvedExperiment, CliError> {
        let entry = &self.algorithms[idx];
        let kind: AlgorithmKind = entry
            .kind
            .parse()
            .map_err(|_| CliError::Config(format!("algorithm[{idx}].kind: unknown algorithm `{}`", entry.kind)))?;
        let mut spec = AlgorithmSpec::new(kind).with_alpha(alpha);
        if let Some(g) = entry.huber_gamma {
            spec = spec.with_huber_gamma(g);
        }
        let ex = &self.experiment;
        let mut config = ExperimentConfig::new(spec, mu, ex.filter_order);
        config.true_system = match &ex.true_system {
            Some(w) => TrueSystem::Fixed(w.clone()),
            None => TrueSystem::RandomUnit,
        };
        config.initial_weights = ex.initial_weights.clone();
        config.regressor = self.regressor_model();
        config.noise = noise;
        config.tracking_q_var = ex.tracking_q_var;
        config.n_iterations = overrides.iterations.unwrap_or(ex.iterations);
        config.n_trials = overrides.trials.unwrap_or(ex.trials);
        config.seed = self.seed(overrides);
        config.validate().map_err(|e| field_error("algorithm", idx, e))?;
        let label = entry.label.clone().unwrap_or_else(|| kind.name().to_string());
        Ok(ResolvedExperiment { label, config })
    }

    /// Numeric α for entry `idx`; `"opt"` needs impulsive noise.
    pub fn resolve_alpha(&self, idx: usize, setting: Option<&AlphaSetting>, noise: &NoiseModel) -> Result<f64, CliError> {
        match setting {
            None => Ok(1.0),
            Some(AlphaSetting::Value(a)) => Ok(*a),
            Some(AlphaSetting::Keyword(k)) if k == "opt" => {
                if noise.kind != NoiseKind::Impulsive {
                    return Err(CliError::Config(format!(
                        "algorithm[{idx}].alpha: \"opt\" is only defined for impulsive noise with 0 < nu_i < 1"
                    )));
                }
                theory::alpha_opt(noise.nu_i, noise.sigma_no_sq)
                    .map_err(|e| CliError::Config(format!("algorithm[{idx}].alpha: {e}")))
            }
            Some(AlphaSetting::Keyword(k)) => {
                Err(CliError::Config(format!("algorithm[{idx}].alpha: expected a number or \"opt\", got \"{k}\"")))
            }
        }
    }
}

/// Maps a simulation validation error onto the file's key names.
fn field_error(section: &str, idx: usize, err: SimError) -> CliError {
    match err {
        SimError::InvalidConfig { field, reason } => {
            let path = match field.as_str() {
                "mu" => format!("{section}[{idx}].mu"),
                "n_iterations" => "experiment.iterations".to_string(),
                "n_trials" => "experiment.trials".to_string(),
                "tail_window" => "experiment.tail_window".to_string(),
                "filter_order" | "true_system" | "initial_weights" | "tracking_q_var" => format!("experiment.{field}"),
                other => other.to_string(),
            };
            CliError::Config(format!("{path}: {reason}"))
        }
        SimError::Filter(e) => CliError::Config(format!("{section}[{idx}]: {e}")),
        other => CliError::Other(other.to_string()),
    }
}
