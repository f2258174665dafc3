//! Mean-square learning curves predicted from the second-order recursions.
//!
//! Three evaluations of the same dynamics are provided: a scalar recursion
//! for white input, a `p`-dimensional state of `Tr(R^k·C)` moments closed
//! with the characteristic polynomial of `R`, and the full deviation
//! covariance recursion. Every step recomputes the moment pair at the current
//! error variance `EMSE + σ_n²`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::{h_pair, EnvironmentStats, HPair, TheoryError};
use crate::filters::AlgorithmSpec;

pub const DEFAULT_DIVERGENCE_CEILING: f64 = 1e9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransientConfig {
    pub mu: f64,
    pub n_iter: usize,
    /// MSD above which the prediction is declared divergent.
    pub ceiling: f64,
}

impl TransientConfig {
    pub fn new(mu: f64, n_iter: usize) -> Self {
        Self { mu, n_iter, ceiling: DEFAULT_DIVERGENCE_CEILING }
    }

    fn validate(&self) -> Result<(), TheoryError> {
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(TheoryError::InvalidParameter(format!("step size must be positive, got {}", self.mu)));
        }
        if !(self.ceiling > 0.0) {
            return Err(TheoryError::InvalidParameter("divergence ceiling must be positive".into()));
        }
        Ok(())
    }
}

/// Predicted learning curve. Entry `t` is the value before the `t`-th update.
/// A divergent prediction stops at the first entry above the ceiling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoryCurve {
    pub msd: Vec<f64>,
    pub emse: Vec<f64>,
    pub steady_msd: f64,
    pub steady_emse: f64,
    pub diverged: bool,
}

impl TheoryCurve {
    fn with_capacity(n: usize) -> Self {
        Self {
            msd: Vec::with_capacity(n),
            emse: Vec::with_capacity(n),
            steady_msd: 0.0,
            steady_emse: 0.0,
            diverged: false,
        }
    }

    /// Records one entry; returns `false` once the curve has diverged.
    fn push(&mut self, msd: f64, emse: f64, ceiling: f64) -> bool {
        let ok = msd.is_finite() && emse.is_finite() && msd <= ceiling;
        let (msd, emse) = if ok { (msd, emse) } else { (f64::INFINITY, f64::INFINITY) };
        self.msd.push(msd);
        self.emse.push(emse);
        self.steady_msd = msd;
        self.steady_emse = emse;
        self.diverged = !ok;
        ok
    }
}

/// Moment pair at error variance `σ_e²`; `None` when the error is exactly
/// zero, in which case the state is a fixed point.
fn moments(spec: &AlgorithmSpec, sigma_e_sq: f64) -> Result<Option<HPair>, TheoryError> {
    if sigma_e_sq == 0.0 {
        return Ok(None);
    }
    h_pair(spec.kind, sigma_e_sq, spec.alpha).map(Some)
}

fn check_kind(spec: &AlgorithmSpec) -> Result<(), TheoryError> {
    h_pair(spec.kind, 1.0, spec.alpha).map(|_| ())
}

/// Scalar MSD recursion for `R = σ_x²·I`.
pub fn transient_white(
    spec: &AlgorithmSpec,
    cfg: &TransientConfig,
    sigma_x_sq: f64,
    noise_var: f64,
    order: usize,
    msd0: f64,
) -> Result<TheoryCurve, TheoryError> {
    cfg.validate()?;
    check_kind(spec)?;
    if !(sigma_x_sq > 0.0) || !(noise_var >= 0.0) || !(msd0 >= 0.0) || order == 0 {
        return Err(TheoryError::InvalidParameter(format!(
            "need sigma_x_sq > 0, noise_var >= 0, msd0 >= 0, order >= 1 (got {sigma_x_sq}, {noise_var}, {msd0}, {order})"
        )));
    }
    let mu = cfg.mu;
    let p = order as f64;
    let mut curve = TheoryCurve::with_capacity(cfg.n_iter);
    let mut msd = msd0;
    for _ in 0..cfg.n_iter {
        let emse = sigma_x_sq * msd;
        if !curve.push(msd, emse, cfg.ceiling) {
            break;
        }
        if let Some(h) = moments(spec, emse + noise_var)? {
            msd = (1.0 - 2.0 * mu * sigma_x_sq * h.h_g) * msd + mu * mu * p * sigma_x_sq * h.h_u;
        }
    }
    Ok(curve)
}

/// Coefficients `c_0..c_{p−1}` of the monic characteristic polynomial
/// `z^p + c_{p−1}z^{p−1} + … + c_0` of a symmetric matrix.
fn characteristic_coefficients(r: &DMatrix<f64>) -> Vec<f64> {
    let eig = r.clone().symmetric_eigenvalues();
    let mut poly = vec![1.0];
    for &lambda in eig.iter() {
        let mut next = vec![0.0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= lambda * c;
        }
        poly = next;
    }
    poly.truncate(r.nrows());
    poly
}

fn check_initial(env: &EnvironmentStats, c0: &DMatrix<f64>) -> Result<(), TheoryError> {
    let p = env.filter_order();
    if c0.nrows() != p || c0.ncols() != p {
        return Err(TheoryError::InvalidParameter(format!(
            "initial deviation covariance must be {p}x{p}, got {}x{}",
            c0.nrows(),
            c0.ncols()
        )));
    }
    Ok(())
}

/// Evolves `W_k = Tr(R^k·C)` for `k = 0..p−1`. `W_0` is the MSD and `W_1`
/// the EMSE; `Tr(R^p·C)` is eliminated with the Cayley–Hamilton theorem.
pub fn transient_statespace(
    spec: &AlgorithmSpec,
    cfg: &TransientConfig,
    env: &EnvironmentStats,
    c0: &DMatrix<f64>,
) -> Result<TheoryCurve, TheoryError> {
    cfg.validate()?;
    check_kind(spec)?;
    check_initial(env, c0)?;
    let p = env.filter_order();
    let r = env.r();
    let coeffs = characteristic_coefficients(r);
    let q_per_tap = env.tracking_q_trace() / p as f64;

    let mut power = DMatrix::identity(p, p);
    let mut power_traces = Vec::with_capacity(p + 1);
    let mut w = DVector::zeros(p);
    for k in 0..=p {
        power_traces.push(power.trace());
        if k < p {
            w[k] = (&power * c0).trace();
        }
        power = &power * r;
    }
    let emse_of = |w: &DVector<f64>| if p > 1 { w[1] } else { -coeffs[0] * w[0] };

    let mu = cfg.mu;
    let mut a = DMatrix::identity(p, p);
    let mut y = DVector::zeros(p);
    let mut curve = TheoryCurve::with_capacity(cfg.n_iter);
    for _ in 0..cfg.n_iter {
        let emse = emse_of(&w);
        if !curve.push(w[0], emse, cfg.ceiling) {
            break;
        }
        let Some(h) = moments(spec, emse + env.noise_var())? else {
            if q_per_tap == 0.0 {
                continue;
            }
            w += DVector::from_fn(p, |k, _| q_per_tap * power_traces[k]);
            continue;
        };
        a.fill_with_identity();
        for k in 0..p - 1 {
            a[(k, k + 1)] = -2.0 * mu * h.h_g;
        }
        for (i, &c) in coeffs.iter().enumerate() {
            a[(p - 1, i)] += 2.0 * mu * c * h.h_g;
        }
        for k in 0..p {
            y[k] = mu * mu * h.h_u * power_traces[k + 1] + q_per_tap * power_traces[k];
        }
        w = &a * &w + &y;
    }
    Ok(curve)
}

/// Full recursion `C ← C − μh_G(RC + CR) + μ²h_U·R + Q` with
/// `MSD = Tr(C)` and `EMSE = Tr(RC)`.
pub fn transient_matrix_oracle(
    spec: &AlgorithmSpec,
    cfg: &TransientConfig,
    env: &EnvironmentStats,
    c0: &DMatrix<f64>,
) -> Result<TheoryCurve, TheoryError> {
    cfg.validate()?;
    check_kind(spec)?;
    check_initial(env, c0)?;
    let p = env.filter_order();
    let r = env.r();
    let q = DMatrix::from_diagonal_element(p, p, env.tracking_q_trace() / p as f64);
    let mu = cfg.mu;
    let mut c = c0.clone();
    let mut curve = TheoryCurve::with_capacity(cfg.n_iter);
    for _ in 0..cfg.n_iter {
        let rc = r * &c;
        let emse = rc.trace();
        if !curve.push(c.trace(), emse, cfg.ceiling) {
            break;
        }
        if let Some(h) = moments(spec, emse + env.noise_var())? {
            let cr = &c * r;
            c -= (rc + cr) * (mu * h.h_g);
            c += r * (mu * mu * h.h_u);
        }
        c += &q;
    }
    Ok(curve)
}
