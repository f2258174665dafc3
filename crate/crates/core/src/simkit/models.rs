//! Random signal sources for system-identification experiments.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::SimError;
use crate::theory::EnvironmentStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseKind {
    Gaussian,
    Impulsive,
}

/// Additive measurement noise `n = n_o + b·n_i` with `n_o ~ N(0, σ_{n_o}²)`,
/// `b ~ Bernoulli(ν_i)` and `n_i ~ N(0, σ_{n_i}²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub kind: NoiseKind,
    pub sigma_no_sq: f64,
    #[serde(default)]
    pub sigma_ni_sq: f64,
    #[serde(default)]
    pub nu_i: f64,
}

impl NoiseModel {
    pub fn gaussian(variance: f64) -> Self {
        Self { kind: NoiseKind::Gaussian, sigma_no_sq: variance, sigma_ni_sq: 0.0, nu_i: 0.0 }
    }

    pub fn impulsive(sigma_no_sq: f64, sigma_ni_sq: f64, nu_i: f64) -> Self {
        Self { kind: NoiseKind::Impulsive, sigma_no_sq, sigma_ni_sq, nu_i }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if !(self.sigma_no_sq >= 0.0 && self.sigma_no_sq.is_finite()) {
            return Err(SimError::invalid("noise.sigma_no_sq", "must be finite and >= 0"));
        }
        if self.kind == NoiseKind::Impulsive {
            if !(self.sigma_ni_sq > 0.0 && self.sigma_ni_sq.is_finite()) {
                return Err(SimError::invalid("noise.sigma_ni_sq", "impulsive noise needs a positive impulse variance"));
            }
            if !(self.nu_i > 0.0 && self.nu_i < 1.0) {
                return Err(SimError::invalid("noise.nu_i", "impulse probability must lie in (0, 1)"));
            }
        }
        Ok(())
    }

    /// `σ_{n_o}² + σ_{n_i}²`, the scale used by the impulsive-noise analysis.
    pub fn composite_variance(&self) -> f64 {
        match self.kind {
            NoiseKind::Gaussian => self.sigma_no_sq,
            NoiseKind::Impulsive => self.sigma_no_sq + self.sigma_ni_sq,
        }
    }

    /// Actual variance of one draw, `σ_{n_o}² + ν_i·σ_{n_i}²`.
    pub fn variance(&self) -> f64 {
        match self.kind {
            NoiseKind::Gaussian => self.sigma_no_sq,
            NoiseKind::Impulsive => self.sigma_no_sq + self.nu_i * self.sigma_ni_sq,
        }
    }
}

/// One noise value and whether an impulse was added to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseDraw {
    pub value: f64,
    pub impulse: bool,
}

pub fn draw_noise_sample<R: Rng + ?Sized>(model: &NoiseModel, rng: &mut R) -> NoiseDraw {
    let background = model.sigma_no_sq.sqrt() * rng.sample::<f64, _>(StandardNormal);
    if model.kind == NoiseKind::Impulsive && rng.random::<f64>() < model.nu_i {
        let value = background + model.sigma_ni_sq.sqrt() * rng.sample::<f64, _>(StandardNormal);
        return NoiseDraw { value, impulse: true };
    }
    NoiseDraw { value: background, impulse: false }
}

pub fn draw_noise<R: Rng + ?Sized>(model: &NoiseModel, rng: &mut R) -> f64 {
    draw_noise_sample(model, rng).value
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegressorKind {
    White,
    Ar1,
}

/// Zero-mean Gaussian regressor. `White` draws i.i.d. entries each
/// iteration; `Ar1` slides a tapped delay line over a stationary AR(1)
/// sequence with lag-one correlation `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegressorModel {
    pub kind: RegressorKind,
    pub sigma_x_sq: f64,
    #[serde(default)]
    pub rho: f64,
}

impl RegressorModel {
    pub fn white(sigma_x_sq: f64) -> Self {
        Self { kind: RegressorKind::White, sigma_x_sq, rho: 0.0 }
    }

    pub fn ar1(sigma_x_sq: f64, rho: f64) -> Self {
        Self { kind: RegressorKind::Ar1, sigma_x_sq, rho }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if !(self.sigma_x_sq > 0.0 && self.sigma_x_sq.is_finite()) {
            return Err(SimError::invalid("regressor.sigma_x_sq", "must be positive"));
        }
        if self.kind == RegressorKind::Ar1 && !(self.rho.abs() < 1.0) {
            return Err(SimError::invalid("regressor.rho", "must satisfy |rho| < 1"));
        }
        Ok(())
    }

    /// Second-order statistics implied by this model for a length-`order` filter.
    pub fn environment(&self, order: usize, noise_var: f64) -> Result<EnvironmentStats, SimError> {
        let env = match self.kind {
            RegressorKind::White => EnvironmentStats::white(order, self.sigma_x_sq, noise_var),
            RegressorKind::Ar1 => EnvironmentStats::ar1(order, self.sigma_x_sq, self.rho, noise_var),
        };
        env.map_err(|e| SimError::invalid("regressor", &e.to_string()))
    }
}

/// Per-trial regressor generator.
#[derive(Debug, Clone)]
pub struct RegressorSource {
    model: RegressorModel,
    taps: Vec<f64>,
}

impl RegressorSource {
    /// For `Ar1` the delay line is filled from the stationary distribution.
    pub fn new<R: Rng + ?Sized>(model: RegressorModel, order: usize, rng: &mut R) -> Self {
        let mut taps = vec![0.0; order];
        if model.kind == RegressorKind::Ar1 {
            let sigma = model.sigma_x_sq.sqrt();
            let innovation = sigma * (1.0 - model.rho * model.rho).sqrt();
            let mut u = sigma * rng.sample::<f64, _>(StandardNormal);
            taps[order - 1] = u;
            for tap in taps[..order - 1].iter_mut().rev() {
                u = model.rho * u + innovation * rng.sample::<f64, _>(StandardNormal);
                *tap = u;
            }
        }
        Self { model, taps }
    }

    pub fn current(&self) -> &[f64] {
        &self.taps
    }
}

/// Advances `source` by one sample and returns the new regressor.
pub fn draw_regressor<'a, R: Rng + ?Sized>(source: &'a mut RegressorSource, rng: &mut R) -> &'a [f64] {
    let model = source.model;
    let sigma = model.sigma_x_sq.sqrt();
    match model.kind {
        RegressorKind::White => {
            for tap in source.taps.iter_mut() {
                *tap = sigma * rng.sample::<f64, _>(StandardNormal);
            }
        }
        RegressorKind::Ar1 => {
            let innovation = sigma * (1.0 - model.rho * model.rho).sqrt();
            let next = model.rho * source.taps[0] + innovation * rng.sample::<f64, _>(StandardNormal);
            source.taps.rotate_right(1);
            source.taps[0] = next;
        }
    }
    &source.taps
}
