//! Closed-form performance predictions for the log-cost family and its
//! baselines under Gaussian regressors.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::filters::AlgorithmKind;

mod hpair;
mod montecarlo;
mod steady;
mod transient;

pub use hpair::{h_pair, h_pair_steady_limit, HPair, LLAD_SERIES_THRESHOLD, LMLS_SERIES_THRESHOLD};
pub use montecarlo::{h_pair_monte_carlo, price_factorization_check, stability_beta, BetaEstimate, PriceCheck};
pub use steady::{
    alpha_opt, alpha_opt_numeric, impulsive_emse_llad, steady_state_fixed_point, steady_state_fixed_point_with,
    steady_state_llad, steady_state_lmls, tracking_emse, tracking_optimal_step, HModel, SteadyState,
};
pub use transient::{
    transient_matrix_oracle, transient_statespace, transient_white, TheoryCurve, TransientConfig,
    DEFAULT_DIVERGENCE_CEILING,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TheoryError {
    #[error("{0} has no Gaussian closed-form moment row")]
    UnsupportedKind(AlgorithmKind),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("outside the region where the analysis is valid: {0}")]
    OutsideValidity(String),
    #[error("fixed-point iteration did not converge after {0} iterations")]
    NoConvergence(usize),
}

/// Second-order statistics of the identification problem.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvironmentStats {
    r: DMatrix<f64>,
    noise_var: f64,
    tracking_q_trace: f64,
}

impl EnvironmentStats {
    /// Validates that `r` is square, symmetric and positive definite.
    pub fn new(r: DMatrix<f64>, noise_var: f64) -> Result<Self, TheoryError> {
        if r.nrows() == 0 || r.nrows() != r.ncols() {
            return Err(TheoryError::InvalidParameter(format!(
                "autocorrelation must be a non-empty square matrix, got {}x{}",
                r.nrows(),
                r.ncols()
            )));
        }
        let scale = r.amax().max(f64::MIN_POSITIVE);
        if (&r - r.transpose()).amax() > 1e-12 * scale {
            return Err(TheoryError::InvalidParameter("autocorrelation is not symmetric".into()));
        }
        let min_eig = r.clone().symmetric_eigenvalues().min();
        if !(min_eig > 0.0) {
            return Err(TheoryError::InvalidParameter(format!(
                "autocorrelation is not positive definite (smallest eigenvalue {min_eig:e})"
            )));
        }
        if !(noise_var >= 0.0) || !noise_var.is_finite() {
            return Err(TheoryError::InvalidParameter(format!("noise variance must be >= 0, got {noise_var}")));
        }
        Ok(Self { r, noise_var, tracking_q_trace: 0.0 })
    }

    /// `R = σ_x²·I`.
    pub fn white(order: usize, sigma_x_sq: f64, noise_var: f64) -> Result<Self, TheoryError> {
        Self::new(DMatrix::from_diagonal_element(order, order, sigma_x_sq), noise_var)
    }

    /// Toeplitz `R[i][j] = σ_x²·ρ^|i−j|` of a stationary AR(1) process.
    pub fn ar1(order: usize, sigma_x_sq: f64, rho: f64, noise_var: f64) -> Result<Self, TheoryError> {
        if !(rho.abs() < 1.0) {
            return Err(TheoryError::InvalidParameter(format!("AR(1) coefficient must satisfy |rho| < 1, got {rho}")));
        }
        let r = DMatrix::from_fn(order, order, |i, j| sigma_x_sq * rho.powi(i.abs_diff(j) as i32));
        Self::new(r, noise_var)
    }

    /// Adds a random-walk drift of the true system with `Tr(Q) = q_trace`.
    pub fn with_tracking(mut self, q_trace: f64) -> Result<Self, TheoryError> {
        if !(q_trace >= 0.0) || !q_trace.is_finite() {
            return Err(TheoryError::InvalidParameter(format!("Tr(Q) must be >= 0, got {q_trace}")));
        }
        self.tracking_q_trace = q_trace;
        Ok(self)
    }

    pub fn r(&self) -> &DMatrix<f64> {
        &self.r
    }

    pub fn noise_var(&self) -> f64 {
        self.noise_var
    }

    pub fn tracking_q_trace(&self) -> f64 {
        self.tracking_q_trace
    }

    pub fn filter_order(&self) -> usize {
        self.r.nrows()
    }

    pub fn trace_r(&self) -> f64 {
        self.r.trace()
    }
}
