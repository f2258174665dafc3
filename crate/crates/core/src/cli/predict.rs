//! Theory predictions for a configured experiment.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::filters::AlgorithmKind;
use crate::simkit::{ExperimentConfig, NoiseKind, TrueSystem};
use crate::theory::{self, EnvironmentStats, TheoryCurve, TheoryError, TransientConfig};

/// Kinds with Gaussian moment rows.
pub fn has_moment_rows(kind: AlgorithmKind) -> bool {
    matches!(
        kind,
        AlgorithmKind::Lms | AlgorithmKind::Lmf | AlgorithmKind::Sa | AlgorithmKind::Lmls | AlgorithmKind::Llad
    )
}

/// Regressor statistics with total noise variance and drift `Tr(Q) = p·q`.
pub fn environment(config: &ExperimentConfig) -> Result<EnvironmentStats, TheoryError> {
    let p = config.filter_order;
    let env = config
        .regressor
        .environment(p, config.noise.variance())
        .map_err(|e| TheoryError::InvalidParameter(e.to_string()))?;
    env.with_tracking(p as f64 * config.tracking_q_var)
}

/// `E[(w_o − w_0)(w_o − w_0)ᵀ]` for the configured true system and start.
pub fn initial_covariance(config: &ExperimentConfig) -> DMatrix<f64> {
    let p = config.filter_order;
    let w0 = DVector::from_vec(config.initial_weights.clone().unwrap_or_else(|| vec![0.0; p]));
    match &config.true_system {
        TrueSystem::RandomUnit => DMatrix::identity(p, p) / p as f64 + &w0 * w0.transpose(),
        TrueSystem::Fixed(w) => {
            let d = DVector::from_column_slice(w) - w0;
            &d * d.transpose()
        }
    }
}

/// Predicted learning curve, when the moment rows apply: Gaussian noise
/// and a kind with a Gaussian row.
pub fn transient(config: &ExperimentConfig) -> Result<Option<TheoryCurve>, TheoryError> {
    if config.noise.kind != NoiseKind::Gaussian || !has_moment_rows(config.algorithm.kind) {
        return Ok(None);
    }
    let env = environment(config)?;
    let cfg = TransientConfig::new(config.mu, config.n_iterations);
    theory::transient_statespace(&config.algorithm, &cfg, &env, &initial_covariance(config)).map(Some)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteadyPrediction {
    pub emse: f64,
    pub msd: f64,
    pub method: &'static str,
}

/// Closed-form steady state for the configuration, if one applies.
///
/// LMLS and LLAD use their closed forms (tracking or impulsive variants
/// when configured); LMS, LMF and SA use the moment fixed point.
pub fn steady(config: &ExperimentConfig) -> Result<Option<SteadyPrediction>, TheoryError> {
    let kind = config.algorithm.kind;
    if !has_moment_rows(kind) {
        return Ok(None);
    }
    let env = environment(config)?;
    let (mu, alpha) = (config.mu, config.algorithm.alpha);
    let to_msd = |emse: f64| emse * env.filter_order() as f64 / env.trace_r();
    let tracking = env.tracking_q_trace() > 0.0;
    let noise = &config.noise;

    if noise.kind == NoiseKind::Impulsive {
        if kind != AlgorithmKind::Llad || tracking {
            return Ok(None);
        }
        let emse = theory::impulsive_emse_llad(mu, alpha, &env, noise.nu_i, noise.sigma_no_sq, noise.sigma_ni_sq)?;
        return Ok(Some(SteadyPrediction { emse, msd: to_msd(emse), method: "impulsive_llad" }));
    }
    let prediction = match (kind, tracking) {
        (AlgorithmKind::Lmls | AlgorithmKind::Llad, true) => {
            let emse = theory::tracking_emse(kind, mu, alpha, &env)?;
            SteadyPrediction { emse, msd: to_msd(emse), method: "tracking" }
        }
        (_, true) => return Ok(None),
        (AlgorithmKind::Lmls, false) => {
            let s = theory::steady_state_lmls(mu, alpha, &env)?;
            SteadyPrediction { emse: s.emse, msd: s.msd, method: "closed_form_lmls" }
        }
        (AlgorithmKind::Llad, false) => {
            let s = theory::steady_state_llad(mu, alpha, &env)?;
            SteadyPrediction { emse: s.emse, msd: s.msd, method: "closed_form_llad" }
        }
        _ => {
            let s = theory::steady_state_fixed_point(&config.algorithm, mu, &env)?;
            SteadyPrediction { emse: s.emse, msd: s.msd, method: "fixed_point" }
        }
    };
    Ok(Some(prediction))
}
