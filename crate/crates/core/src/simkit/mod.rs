//! Monte Carlo system identification.
//!
//! Each trial draws its own true system, regressors and noise from a ChaCha
//! stream selected by `(seed, trial_index)`, so a trial's output does not
//! depend on which thread runs it. Ensembles are reduced in trial order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::filters::{AlgorithmSpec, FilterError, FilterState, Sample};

mod models;

pub use models::{
    draw_noise, draw_noise_sample, draw_regressor, NoiseDraw, NoiseKind, NoiseModel, RegressorKind, RegressorModel, RegressorSource,
};

/// MSD above which a trial is declared divergent.
pub const DIVERGENCE_THRESHOLD: f64 = 1e9;

/// Trials reduced per batch. Fixed so that the summation order, and hence
/// every output bit, is independent of the worker count.
const TRIAL_BATCH: usize = 32;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("invalid `{field}`: {reason}")]
    InvalidConfig { field: String, reason: String },
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

impl SimError {
    pub(crate) fn invalid(field: &str, reason: &str) -> Self {
        SimError::InvalidConfig { field: field.to_string(), reason: reason.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrueSystem {
    /// Drawn uniformly on the unit sphere, independently per trial.
    RandomUnit,
    Fixed(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub algorithm: AlgorithmSpec,
    pub mu: f64,
    pub filter_order: usize,
    pub true_system: TrueSystem,
    /// Starting weights; zeros when absent.
    pub initial_weights: Option<Vec<f64>>,
    pub regressor: RegressorModel,
    pub noise: NoiseModel,
    /// Per-tap variance `q` of the random-walk drift, `Q = q·I`.
    pub tracking_q_var: f64,
    pub n_iterations: usize,
    pub n_trials: usize,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn new(algorithm: AlgorithmSpec, mu: f64, filter_order: usize) -> Self {
        Self {
            algorithm,
            mu,
            filter_order,
            true_system: TrueSystem::RandomUnit,
            initial_weights: None,
            regressor: RegressorModel::white(1.0),
            noise: NoiseModel::gaussian(0.01),
            tracking_q_var: 0.0,
            n_iterations: 1000,
            n_trials: 1,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        self.algorithm.validate()?;
        if !(self.mu > 0.0 && self.mu.is_finite()) {
            return Err(SimError::invalid("mu", "step size must be positive"));
        }
        if self.filter_order == 0 {
            return Err(SimError::invalid("filter_order", "must be at least 1"));
        }
        if let TrueSystem::Fixed(w) = &self.true_system {
            if w.len() != self.filter_order {
                return Err(SimError::invalid("true_system", "length must equal filter_order"));
            }
        }
        if let Some(w) = &self.initial_weights {
            if w.len() != self.filter_order || w.iter().any(|v| !v.is_finite()) {
                return Err(SimError::invalid("initial_weights", "must be finite with length filter_order"));
            }
        }
        self.regressor.validate()?;
        self.noise.validate()?;
        if !(self.tracking_q_var >= 0.0 && self.tracking_q_var.is_finite()) {
            return Err(SimError::invalid("tracking_q_var", "must be finite and >= 0"));
        }
        if self.n_iterations == 0 {
            return Err(SimError::invalid("n_iterations", "must be at least 1"));
        }
        if self.n_trials == 0 {
            return Err(SimError::invalid("n_trials", "must be at least 1"));
        }
        Ok(())
    }
}

/// Portion of a curve averaged into the steady-state summary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailWindow {
    /// Final fraction of the iterations, in `(0, 1]`.
    Fraction(f64),
    /// Final `n` iterations.
    Last(usize),
}

impl Default for TailWindow {
    fn default() -> Self {
        TailWindow::Fraction(0.1)
    }
}

impl TailWindow {
    pub fn validate(&self) -> Result<(), SimError> {
        match *self {
            TailWindow::Fraction(f) if !(f > 0.0 && f <= 1.0) => {
                Err(SimError::invalid("tail_window", "fraction must lie in (0, 1]"))
            }
            TailWindow::Last(0) => Err(SimError::invalid("tail_window", "must cover at least one iteration")),
            _ => Ok(()),
        }
    }

    /// Number of trailing entries of an `n`-long series, at least 1.
    pub fn len(&self, n: usize) -> usize {
        let k = match *self {
            TailWindow::Fraction(f) => (f * n as f64).round() as usize,
            TailWindow::Last(k) => k,
        };
        k.clamp(1, n.max(1))
    }

    fn mean(&self, series: &[f64]) -> f64 {
        let k = self.len(series.len());
        series[series.len() - k..].iter().sum::<f64>() / k as f64
    }
}

/// Linear per-iteration quantities of one trial, recorded before each update.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    /// `‖w_o − w‖²`
    pub msd: Vec<f64>,
    /// `(xᵀ(w_o − w))²`
    pub emse: Vec<f64>,
    /// `e²` with `e = d − wᵀx`
    pub error_sq: Vec<f64>,
    /// Series stop at the iteration where divergence was detected.
    pub diverged: bool,
}

fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

fn random_unit(order: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..order).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Runs trial `trial_index` of `config`. The output depends only on the
/// configuration and the index.
pub fn run_trial(config: &ExperimentConfig, trial_index: u64) -> Result<TrialOutcome, SimError> {
    config.validate()?;
    let mut rng = trial_rng(config.seed, trial_index);
    let p = config.filter_order;
    let mut w_o = match &config.true_system {
        TrueSystem::RandomUnit => random_unit(p, &mut rng),
        TrueSystem::Fixed(w) => w.clone(),
    };
    let initial = config.initial_weights.clone().unwrap_or_else(|| vec![0.0; p]);
    let mut filter = FilterState::with_weights(config.algorithm, config.mu, initial)?;
    let mut source = RegressorSource::new(config.regressor, p, &mut rng);
    let drift = config.tracking_q_var.sqrt();

    let n = config.n_iterations;
    let mut out = TrialOutcome {
        msd: Vec::with_capacity(n),
        emse: Vec::with_capacity(n),
        error_sq: Vec::with_capacity(n),
        diverged: false,
    };
    for _ in 0..n {
        let x = draw_regressor(&mut source, &mut rng);
        let noise = draw_noise(&config.noise, &mut rng);
        let (mut msd, mut e_a, mut d) = (0.0, 0.0, noise);
        for ((wo, w), xi) in w_o.iter().zip(filter.weights()).zip(x) {
            let dev = wo - w;
            msd += dev * dev;
            e_a += dev * xi;
            d += wo * xi;
        }
        if !(msd <= DIVERGENCE_THRESHOLD) {
            out.diverged = true;
            break;
        }
        match filter.step_in_place(&Sample::new(x, d)) {
            Ok(e) => {
                out.msd.push(msd);
                out.emse.push(e_a * e_a);
                out.error_sq.push(e * e);
            }
            Err(FilterError::Diverged) => {
                out.diverged = true;
                break;
            }
            // A zero-energy regressor carries no information; the weights stay put.
            Err(FilterError::DegenerateRegressor { .. }) => {
                out.msd.push(msd);
                out.emse.push(e_a * e_a);
                out.error_sq.push((e_a + noise) * (e_a + noise));
            }
            Err(other) => return Err(other.into()),
        }
        if drift > 0.0 {
            for wo in w_o.iter_mut() {
                *wo += drift * rng.sample::<f64, _>(StandardNormal);
            }
        }
    }
    Ok(out)
}

fn to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Ensemble-averaged learning curves over the non-divergent trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LearningCurves {
    pub msd_db: Vec<f64>,
    pub emse_db: Vec<f64>,
    /// Tail mean of the averaged MSD, in dB; `None` if every trial diverged.
    pub steady_msd_db: Option<f64>,
    pub steady_emse_db: Option<f64>,
    /// Tail mean of the averaged `e²` (linear).
    pub steady_error_sq: Option<f64>,
    /// Tail mean of each trial's own MSD in dB; `None` for divergent trials.
    pub trial_steady_msd_db: Vec<Option<f64>>,
    pub diverged: bool,
    pub diverged_trials: usize,
    pub trials_used: usize,
}

struct Accumulator {
    msd: Vec<f64>,
    emse: Vec<f64>,
    error_sq: Vec<f64>,
    used: usize,
    diverged: usize,
    trial_steady: Vec<Option<f64>>,
}

impl Accumulator {
    fn new(n: usize, trials: usize) -> Self {
        Self {
            msd: vec![0.0; n],
            emse: vec![0.0; n],
            error_sq: vec![0.0; n],
            used: 0,
            diverged: 0,
            trial_steady: Vec::with_capacity(trials),
        }
    }

    fn add(&mut self, outcome: TrialOutcome, tail: &TailWindow) {
        if outcome.diverged {
            self.diverged += 1;
            self.trial_steady.push(None);
            return;
        }
        for (acc, v) in self.msd.iter_mut().zip(&outcome.msd) {
            *acc += v;
        }
        for (acc, v) in self.emse.iter_mut().zip(&outcome.emse) {
            *acc += v;
        }
        for (acc, v) in self.error_sq.iter_mut().zip(&outcome.error_sq) {
            *acc += v;
        }
        self.used += 1;
        self.trial_steady.push(Some(to_db(tail.mean(&outcome.msd))));
    }

    fn finish(self, tail: &TailWindow) -> LearningCurves {
        let n = self.msd.len();
        let (msd_db, emse_db, steady_msd_db, steady_emse_db, steady_error_sq) = if self.used == 0 {
            (vec![f64::NAN; n], vec![f64::NAN; n], None, None, None)
        } else {
            let k = self.used as f64;
            let msd: Vec<f64> = self.msd.iter().map(|v| v / k).collect();
            let emse: Vec<f64> = self.emse.iter().map(|v| v / k).collect();
            let err: Vec<f64> = self.error_sq.iter().map(|v| v / k).collect();
            (
                msd.iter().copied().map(to_db).collect(),
                emse.iter().copied().map(to_db).collect(),
                Some(to_db(tail.mean(&msd))),
                Some(to_db(tail.mean(&emse))),
                Some(tail.mean(&err)),
            )
        };
        LearningCurves {
            msd_db,
            emse_db,
            steady_msd_db,
            steady_emse_db,
            steady_error_sq,
            trial_steady_msd_db: self.trial_steady,
            diverged: self.diverged > 0,
            diverged_trials: self.diverged,
            trials_used: self.used,
        }
    }
}

fn run_batches(config: &ExperimentConfig, tail: &TailWindow) -> Result<LearningCurves, SimError> {
    config.validate()?;
    tail.validate()?;
    let mut acc = Accumulator::new(config.n_iterations, config.n_trials);
    let trials: Vec<u64> = (0..config.n_trials as u64).collect();
    for batch in trials.chunks(TRIAL_BATCH) {
        let outcomes: Vec<TrialOutcome> =
            batch.par_iter().map(|&i| run_trial(config, i)).collect::<Result<_, _>>()?;
        for outcome in outcomes {
            acc.add(outcome, tail);
        }
    }
    Ok(acc.finish(tail))
}

/// Runs every trial on the global thread pool.
pub fn run_ensemble(config: &ExperimentConfig, tail: &TailWindow) -> Result<LearningCurves, SimError> {
    run_batches(config, tail)
}

/// Runs every trial on a dedicated pool of `workers` threads.
pub fn run_ensemble_on(config: &ExperimentConfig, tail: &TailWindow, workers: usize) -> Result<LearningCurves, SimError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| SimError::Pool(e.to_string()))?;
    pool.install(|| run_batches(config, tail))
}
