//! Single-step stochastic-gradient update kernels.
//!
//! Every algorithm updates the weight vector as `w ← w + μ·gain(e)·x` (the
//! normalized kinds additionally divide by a power of `‖x‖`). For the
//! logarithmic-cost family the gain is
//!
//! ```text
//! gain(e) = f'(e) · α f(e) / (1 + α f(e))
//! ```
//!
//! with `f(e) = e²` (LMLS) or `f(e) = |e|` (LLAD). The constant factor 2 of
//! `d/de e²` is folded into the step size for every kind, so `f'(e) = e` for
//! the squared costs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default regularizer guarding the normalized kinds against `‖x‖² → 0`.
pub const DEFAULT_REGULARIZER: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FilterError {
    #[error("dimension mismatch: filter order {expected}, regressor length {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("update produced a non-finite weight")]
    Diverged,
    #[error("regressor energy {norm_sq:e} below the regularizer {epsilon:e}")]
    DegenerateRegressor { norm_sq: f64, epsilon: f64 },
    #[error("invalid algorithm parameters: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AlgorithmKind {
    Lms,
    Nlms,
    Lmf,
    Sa,
    Lmls,
    Llad,
    Nlmls,
    Nllad,
    Huber,
    #[serde(rename = "ARCTAN_SQ")]
    ArctanSq,
    #[serde(rename = "ARCTAN_ABS")]
    ArctanAbs,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 11] = [
        AlgorithmKind::Lms,
        AlgorithmKind::Nlms,
        AlgorithmKind::Lmf,
        AlgorithmKind::Sa,
        AlgorithmKind::Lmls,
        AlgorithmKind::Llad,
        AlgorithmKind::Nlmls,
        AlgorithmKind::Nllad,
        AlgorithmKind::Huber,
        AlgorithmKind::ArctanSq,
        AlgorithmKind::ArctanAbs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmKind::Lms => "LMS",
            AlgorithmKind::Nlms => "NLMS",
            AlgorithmKind::Lmf => "LMF",
            AlgorithmKind::Sa => "SA",
            AlgorithmKind::Lmls => "LMLS",
            AlgorithmKind::Llad => "LLAD",
            AlgorithmKind::Nlmls => "NLMLS",
            AlgorithmKind::Nllad => "NLLAD",
            AlgorithmKind::Huber => "HUBER",
            AlgorithmKind::ArctanSq => "ARCTAN_SQ",
            AlgorithmKind::ArctanAbs => "ARCTAN_ABS",
        }
    }

    pub fn is_normalized(self) -> bool {
        matches!(self, AlgorithmKind::Nlms | AlgorithmKind::Nlmls | AlgorithmKind::Nllad)
    }

    /// Kinds whose update depends on the design parameter α.
    pub fn uses_alpha(self) -> bool {
        matches!(
            self,
            AlgorithmKind::Lmls
                | AlgorithmKind::Llad
                | AlgorithmKind::Nlmls
                | AlgorithmKind::Nllad
                | AlgorithmKind::ArctanSq
                | AlgorithmKind::ArctanAbs
        )
    }
}

impl std::fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AlgorithmKind {
    type Err = FilterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        AlgorithmKind::ALL
            .into_iter()
            .find(|k| k.name() == upper)
            .ok_or_else(|| FilterError::InvalidSpec(format!("unknown algorithm kind `{s}`")))
    }
}

/// One update rule plus its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmSpec {
    pub kind: AlgorithmKind,
    /// Design parameter α; ignored (treated as 1) by LMS, NLMS, LMF, SA and HUBER.
    pub alpha: f64,
    /// Cut-off γ; only read by HUBER.
    pub huber_gamma: f64,
}

impl AlgorithmSpec {
    pub fn new(kind: AlgorithmKind) -> Self {
        Self { kind, alpha: 1.0, huber_gamma: 1.0 }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_huber_gamma(mut self, gamma: f64) -> Self {
        self.huber_gamma = gamma;
        self
    }

    pub fn validate(&self) -> Result<(), FilterError> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(FilterError::InvalidSpec(format!("alpha must be positive, got {}", self.alpha)));
        }
        if self.kind == AlgorithmKind::Huber && !(self.huber_gamma > 0.0 && self.huber_gamma.is_finite()) {
            return Err(FilterError::InvalidSpec(format!(
                "huber_gamma must be positive, got {}",
                self.huber_gamma
            )));
        }
        Ok(())
    }

    /// α as seen by the update; 1 for kinds without a design parameter.
    pub fn effective_alpha(&self) -> f64 {
        if self.kind.uses_alpha() {
            self.alpha
        } else {
            1.0
        }
    }
}

/// `sign(e)` with `sign(0) = 0`.
#[inline]
pub fn sign(e: f64) -> f64 {
    if e > 0.0 {
        1.0
    } else if e < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `f'(e)·αf/(1+αf)`, evaluated left to right so that α = 1 reproduces the
/// closed-form LMLS and LLAD updates bit for bit.
#[inline]
fn log_cost_gain(derivative: f64, cost: f64, alpha: f64) -> f64 {
    let scaled = alpha * cost;
    derivative * scaled / (1.0 + scaled)
}

/// `f'(e)·α²f²/(1+α²f²)`, the derivative of `F − (1/α)·arctan(αF)`.
#[inline]
fn arctan_cost_gain(derivative: f64, cost: f64, alpha: f64) -> f64 {
    let scaled_sq = (alpha * cost) * (alpha * cost);
    derivative * scaled_sq / (1.0 + scaled_sq)
}

/// Scalar multiplying `μ·x` in the update for error `e`.
///
/// Normalized kinds return the gain of a unit-energy regressor, which
/// coincides with their non-normalized counterpart.
pub fn update_gain(spec: &AlgorithmSpec, e: f64) -> f64 {
    let alpha = spec.alpha;
    match spec.kind {
        AlgorithmKind::Lms => e,
        AlgorithmKind::Nlms => e / (1.0 + DEFAULT_REGULARIZER),
        AlgorithmKind::Lmf => e * e * e,
        AlgorithmKind::Sa => sign(e),
        AlgorithmKind::Lmls | AlgorithmKind::Nlmls => log_cost_gain(e, e * e, alpha),
        AlgorithmKind::Llad | AlgorithmKind::Nllad => log_cost_gain(sign(e), e.abs(), alpha),
        AlgorithmKind::Huber => {
            if e.abs() <= spec.huber_gamma {
                e
            } else {
                spec.huber_gamma * sign(e)
            }
        }
        AlgorithmKind::ArctanSq => arctan_cost_gain(e, e * e, alpha),
        AlgorithmKind::ArctanAbs => arctan_cost_gain(sign(e), e.abs(), alpha),
    }
}

/// One regressor/desired pair.
#[derive(Debug, Clone, Copy)]
pub struct Sample<'a> {
    pub regressor: &'a [f64],
    pub desired: f64,
}

impl<'a> Sample<'a> {
    pub fn new(regressor: &'a [f64], desired: f64) -> Self {
        Self { regressor, desired }
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weight vector, step size and update rule of one adaptive filter.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterState {
    weights: Vec<f64>,
    step_size: f64,
    spec: AlgorithmSpec,
    regularizer: f64,
}

impl FilterState {
    pub fn new(spec: AlgorithmSpec, step_size: f64, order: usize) -> Result<Self, FilterError> {
        Self::with_weights(spec, step_size, vec![0.0; order])
    }

    pub fn with_weights(spec: AlgorithmSpec, step_size: f64, weights: Vec<f64>) -> Result<Self, FilterError> {
        spec.validate()?;
        if !(step_size > 0.0 && step_size.is_finite()) {
            return Err(FilterError::InvalidSpec(format!("step size must be positive, got {step_size}")));
        }
        if weights.is_empty() {
            return Err(FilterError::InvalidSpec("filter order must be at least 1".into()));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(FilterError::InvalidSpec("initial weights must be finite".into()));
        }
        Ok(Self { weights, step_size, spec, regularizer: DEFAULT_REGULARIZER })
    }

    /// Overrides the regularizer ε used by the normalized kinds.
    pub fn with_regularizer(mut self, epsilon: f64) -> Self {
        self.regularizer = epsilon;
        self
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    pub fn step_size(&self) -> f64 {
        self.step_size
    }

    pub fn spec(&self) -> &AlgorithmSpec {
        &self.spec
    }

    fn check_dims(&self, sample: &Sample<'_>) -> Result<(), FilterError> {
        if sample.regressor.len() != self.weights.len() {
            return Err(FilterError::DimensionMismatch {
                expected: self.weights.len(),
                found: sample.regressor.len(),
            });
        }
        Ok(())
    }

    /// `e = d − wᵀx`.
    pub fn compute_error(&self, sample: &Sample<'_>) -> Result<f64, FilterError> {
        self.check_dims(sample)?;
        Ok(sample.desired - dot(&self.weights, sample.regressor))
    }

    /// Scalar `c` such that the update is `w ← w + μ·c·x` for this sample.
    fn update_coefficient(&self, e: f64, regressor: &[f64]) -> Result<f64, FilterError> {
        let alpha = self.spec.alpha;
        if !self.spec.kind.is_normalized() {
            return Ok(update_gain(&self.spec, e));
        }
        let norm_sq = dot(regressor, regressor);
        if norm_sq < self.regularizer {
            return Err(FilterError::DegenerateRegressor { norm_sq, epsilon: self.regularizer });
        }
        Ok(match self.spec.kind {
            AlgorithmKind::Nlms => e / (norm_sq + self.regularizer),
            // e·αe² / (‖x‖²(‖x‖² + αe²))
            AlgorithmKind::Nlmls => {
                let scaled = alpha * (e * e);
                e * scaled / (norm_sq * (norm_sq + scaled))
            }
            // αe / (‖x‖(‖x‖ + α|e|))
            AlgorithmKind::Nllad => {
                let norm = norm_sq.sqrt();
                alpha * e / (norm * (norm + alpha * e.abs()))
            }
            _ => unreachable!("non-normalized kinds handled above"),
        })
    }

    /// Applies one update in place and returns the a-priori error `e`.
    ///
    /// On [`FilterError::Diverged`] the weights have already been overwritten.
    pub fn step_in_place(&mut self, sample: &Sample<'_>) -> Result<f64, FilterError> {
        let e = self.compute_error(sample)?;
        let c = self.step_size * self.update_coefficient(e, sample.regressor)?;
        let mut finite = true;
        for (w, x) in self.weights.iter_mut().zip(sample.regressor) {
            *w += c * x;
            finite &= w.is_finite();
        }
        if finite {
            Ok(e)
        } else {
            Err(FilterError::Diverged)
        }
    }

    /// Returns the updated state, leaving `self` untouched.
    pub fn step(&self, sample: &Sample<'_>) -> Result<FilterState, FilterError> {
        let mut next = self.clone();
        next.step_in_place(sample)?;
        Ok(next)
    }
}
