//! Steady-state, tracking and impulsive-noise excess error predictions.

use std::f64::consts::PI;

use serde::Serialize;

use super::{h_pair, h_pair_steady_limit, EnvironmentStats, TheoryError};
use crate::filters::{AlgorithmKind, AlgorithmSpec};

const FIXED_POINT_DAMPING: f64 = 0.5;
const FIXED_POINT_TOL: f64 = 1e-12;
const FIXED_POINT_MAX_ITER: usize = 10_000;
const GOLDEN_ITER: usize = 200;

/// Steady-state excess mean-square error and mean-square deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SteadyState {
    pub emse: f64,
    pub msd: f64,
}

impl SteadyState {
    /// `MSD = p·EMSE/Tr(R)`.
    fn from_emse(emse: f64, env: &EnvironmentStats) -> Self {
        Self { emse, msd: env.filter_order() as f64 * emse / env.trace_r() }
    }
}

/// Which moment pair enters the implicit steady-state equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum HModel {
    /// Small-error limits for LMLS and LLAD; exact rows for the rest.
    #[default]
    SteadyLimit,
    /// Exact Gaussian rows throughout.
    Exact,
}

/// Solves `ζ = (μ/2)·Tr(R)·h_U/h_G` at `σ_e² = ζ + σ_n²` using the
/// small-error moment limits.
pub fn steady_state_fixed_point(spec: &AlgorithmSpec, mu: f64, env: &EnvironmentStats) -> Result<SteadyState, TheoryError> {
    steady_state_fixed_point_with(spec, mu, env, HModel::SteadyLimit)
}

/// Damped fixed-point iteration from `ζ = 0`.
pub fn steady_state_fixed_point_with(
    spec: &AlgorithmSpec,
    mu: f64,
    env: &EnvironmentStats,
    model: HModel,
) -> Result<SteadyState, TheoryError> {
    if !(mu > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("step size must be positive, got {mu}")));
    }
    let pair = |s2: f64| match model {
        HModel::SteadyLimit => h_pair_steady_limit(spec.kind, s2, spec.alpha),
        HModel::Exact => h_pair(spec.kind, s2, spec.alpha),
    };
    pair(1.0)?;
    let noise = env.noise_var();
    if noise == 0.0 {
        return Ok(SteadyState { emse: 0.0, msd: 0.0 });
    }
    let half_mu_tr = 0.5 * mu * env.trace_r();
    let mut zeta = 0.0_f64;
    for _ in 0..FIXED_POINT_MAX_ITER {
        let h = pair(zeta + noise)?;
        let target = half_mu_tr * h.h_u / h.h_g;
        let next = (1.0 - FIXED_POINT_DAMPING) * zeta + FIXED_POINT_DAMPING * target;
        if !next.is_finite() {
            break;
        }
        let done = (next - zeta).abs() <= FIXED_POINT_TOL * next.abs().max(f64::MIN_POSITIVE);
        zeta = next;
        if done {
            return Ok(SteadyState::from_emse(zeta, env));
        }
    }
    Err(TheoryError::NoConvergence(FIXED_POINT_MAX_ITER))
}

/// Smaller root of the LMLS steady-state quadratic, written without the
/// subtraction of nearly equal terms: with `q = 5αμTr(R)σ_n²`,
/// `ζ = σ_n²·q/(1 − q + √(1 − 2q))`.
pub fn steady_state_lmls(mu: f64, alpha: f64, env: &EnvironmentStats) -> Result<SteadyState, TheoryError> {
    if !(mu > 0.0) || !(alpha > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("mu and alpha must be positive, got {mu}, {alpha}")));
    }
    let s2 = env.noise_var();
    let q = 5.0 * alpha * mu * env.trace_r() * s2;
    let radicand = 1.0 - 2.0 * q;
    if radicand < 0.0 {
        return Err(TheoryError::OutsideValidity(format!(
            "10·α·μ·Tr(R)·σ_n² = {} exceeds 1",
            2.0 * q
        )));
    }
    Ok(SteadyState::from_emse(s2 * q / (1.0 - q + radicand.sqrt()), env))
}

fn llad_pole(mu: f64, alpha: f64, env: &EnvironmentStats) -> Result<f64, TheoryError> {
    if !(mu > 0.0) || !(alpha > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("mu and alpha must be positive, got {mu}, {alpha}")));
    }
    let denom = 2.0 - mu * alpha * env.trace_r();
    if !(denom > 0.0) {
        return Err(TheoryError::OutsideValidity(format!("μ·α·Tr(R) = {} is not below 2", 2.0 - denom)));
    }
    Ok(denom)
}

/// `ζ = μαTr(R)σ_n²/(2 − μαTr(R))`.
pub fn steady_state_llad(mu: f64, alpha: f64, env: &EnvironmentStats) -> Result<SteadyState, TheoryError> {
    let denom = llad_pole(mu, alpha, env)?;
    Ok(SteadyState::from_emse(mu * alpha * env.trace_r() * env.noise_var() / denom, env))
}

/// Excess error while following a random-walk system with drift `Tr(Q)`.
pub fn tracking_emse(kind: AlgorithmKind, mu: f64, alpha: f64, env: &EnvironmentStats) -> Result<f64, TheoryError> {
    let s2 = env.noise_var();
    if !(s2 > 0.0) {
        return Err(TheoryError::InvalidParameter("tracking analysis needs a positive noise variance".into()));
    }
    let tr = env.trace_r();
    let lag = env.tracking_q_trace() / mu;
    match kind {
        AlgorithmKind::Lmls => {
            if !(mu > 0.0) || !(alpha > 0.0) {
                return Err(TheoryError::InvalidParameter(format!("mu and alpha must be positive, got {mu}, {alpha}")));
            }
            Ok((3.0 * alpha * mu * s2 * s2 * tr + lag) / (6.0 * s2))
        }
        AlgorithmKind::Llad => {
            let denom = llad_pole(mu, alpha, env)?;
            Ok((alpha * mu * s2 * tr + lag) / denom)
        }
        other => Err(TheoryError::UnsupportedKind(other)),
    }
}

/// Golden-section search for the minimum of `f` over `ln x ∈ [ln lo, ln hi]`.
fn minimize_log(lo: f64, hi: f64, f: impl Fn(f64) -> Result<f64, TheoryError>) -> Result<f64, TheoryError> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c.exp())?, f(d.exp())?);
    for _ in 0..GOLDEN_ITER {
        if (b - a).abs() < 1e-12 {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c.exp())?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d.exp())?;
        }
    }
    Ok((0.5 * (a + b)).exp())
}

/// Step size minimizing [`tracking_emse`] over the valid step-size range.
pub fn tracking_optimal_step(kind: AlgorithmKind, alpha: f64, env: &EnvironmentStats) -> Result<f64, TheoryError> {
    if !(env.tracking_q_trace() > 0.0) {
        return Err(TheoryError::InvalidParameter("a tracking optimum needs Tr(Q) > 0".into()));
    }
    if !(alpha > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("alpha must be positive, got {alpha}")));
    }
    let upper = match kind {
        AlgorithmKind::Lmls => 1.0 / (10.0 * alpha * env.trace_r() * env.noise_var()),
        AlgorithmKind::Llad => 2.0 / (alpha * env.trace_r()),
        other => return Err(TheoryError::UnsupportedKind(other)),
    };
    let hi = upper * (1.0 - 1e-9);
    minimize_log(hi * 1e-12, hi, |mu| tracking_emse(kind, mu, alpha, env))
}

/// LLAD excess error under Bernoulli–Gaussian impulsive noise with impulse
/// probability `nu_i`, background variance `sigma_no_sq` and impulse
/// variance `sigma_ni_sq`.
pub fn impulsive_emse_llad(
    mu: f64,
    alpha: f64,
    env: &EnvironmentStats,
    nu_i: f64,
    sigma_no_sq: f64,
    sigma_ni_sq: f64,
) -> Result<f64, TheoryError> {
    if !(0.0..1.0).contains(&nu_i) || !(sigma_no_sq >= 0.0) || !(sigma_ni_sq >= 0.0) {
        return Err(TheoryError::InvalidParameter(format!(
            "need 0 <= nu_i < 1 and nonnegative variances (got {nu_i}, {sigma_no_sq}, {sigma_ni_sq})"
        )));
    }
    let denom_pole = llad_pole(mu, alpha, env)?;
    let tr = env.trace_r();
    let impulse_term = if nu_i > 0.0 {
        let sigma_n = (sigma_no_sq + sigma_ni_sq).sqrt();
        if !(sigma_n > 0.0) {
            return Err(TheoryError::InvalidParameter("impulsive noise needs a positive total variance".into()));
        }
        (8.0 / PI).sqrt() * nu_i / sigma_n
    } else {
        0.0
    };
    let denom = alpha * (1.0 - nu_i) * denom_pole + impulse_term;
    if !(denom > 0.0) {
        return Err(TheoryError::OutsideValidity("nonpositive denominator".into()));
    }
    Ok(mu * tr * (nu_i + alpha * alpha * (1.0 - nu_i) * sigma_no_sq) / denom)
}

/// `α ≈ √(ν_i/(1 − ν_i))/σ_{n_o}`.
pub fn alpha_opt(nu_i: f64, sigma_no_sq: f64) -> Result<f64, TheoryError> {
    if !(nu_i > 0.0 && nu_i < 1.0) || !(sigma_no_sq > 0.0) {
        return Err(TheoryError::InvalidParameter(format!(
            "need 0 < nu_i < 1 and sigma_no_sq > 0 (got {nu_i}, {sigma_no_sq})"
        )));
    }
    Ok((nu_i / (1.0 - nu_i)).sqrt() / sigma_no_sq.sqrt())
}

/// α minimizing [`impulsive_emse_llad`] at fixed step size.
pub fn alpha_opt_numeric(
    mu: f64,
    env: &EnvironmentStats,
    nu_i: f64,
    sigma_no_sq: f64,
    sigma_ni_sq: f64,
) -> Result<f64, TheoryError> {
    alpha_opt(nu_i, sigma_no_sq)?;
    let hi = (2.0 / (mu * env.trace_r()) * (1.0 - 1e-9)).min(1e6);
    minimize_log(hi * 1e-9, hi, |a| impulsive_emse_llad(mu, a, env, nu_i, sigma_no_sq, sigma_ni_sq))
}
