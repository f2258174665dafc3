//! Sampling estimates over zero-mean Gaussian errors.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::TheoryError;
use crate::filters::{update_gain, AlgorithmKind, AlgorithmSpec};

/// Ratio estimate with a delta-method standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaEstimate {
    pub beta: f64,
    pub std_error: f64,
}

/// Both sides of the Gaussian factorization `E[x·g(y)] = (E[xy]/E[y²])·E[y·g(y)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriceCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// Standard error of `lhs − rhs`.
    pub std_error: f64,
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn check_samples(n: usize) -> Result<(), TheoryError> {
    if n < 2 {
        return Err(TheoryError::InvalidParameter(format!("need at least 2 samples, got {n}")));
    }
    Ok(())
}

/// Estimates `E[e·g(e)]/σ_e²` and `E[g(e)²]` for `e ~ N(0, σ_e²)` from the
/// update kernel itself.
pub fn h_pair_monte_carlo<R: Rng + ?Sized>(
    kind: AlgorithmKind,
    sigma_e_sq: f64,
    alpha: f64,
    n_samples: usize,
    rng: &mut R,
) -> Result<(f64, f64), TheoryError> {
    check_samples(n_samples)?;
    if !(sigma_e_sq > 0.0) || !(alpha > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("need sigma_e_sq, alpha > 0 (got {sigma_e_sq}, {alpha})")));
    }
    let spec = AlgorithmSpec { kind, alpha, huber_gamma: 1.0 };
    let sigma = sigma_e_sq.sqrt();
    let (mut sum_eg, mut sum_gg) = (0.0, 0.0);
    for _ in 0..n_samples {
        let e = sigma * normal(rng);
        let g = update_gain(&spec, e);
        sum_eg += e * g;
        sum_gg += g * g;
    }
    let n = n_samples as f64;
    Ok((sum_eg / n / sigma_e_sq, sum_gg / n))
}

/// `β = E[αe⁴/(1+αe²)] / E[α²e⁶/(1+αe²)²]` for `e ~ N(0, σ_e²)`.
pub fn stability_beta<R: Rng + ?Sized>(
    sigma_e_sq: f64,
    alpha: f64,
    n_samples: usize,
    rng: &mut R,
) -> Result<BetaEstimate, TheoryError> {
    check_samples(n_samples)?;
    if !(sigma_e_sq > 0.0) || !(alpha > 0.0) {
        return Err(TheoryError::InvalidParameter(format!("need sigma_e_sq, alpha > 0 (got {sigma_e_sq}, {alpha})")));
    }
    let sigma = sigma_e_sq.sqrt();
    let mut num = Vec::with_capacity(n_samples);
    let mut den = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let e = sigma * normal(rng);
        let e2 = e * e;
        let g = alpha * e * e2 / (1.0 + alpha * e2);
        num.push(e * g);
        den.push(g * g);
    }
    let n = n_samples as f64;
    let mean_num = num.iter().sum::<f64>() / n;
    let mean_den = den.iter().sum::<f64>() / n;
    let beta = mean_num / mean_den;
    let var = num
        .iter()
        .zip(&den)
        .map(|(a, b)| {
            let d = a - beta * b;
            d * d
        })
        .sum::<f64>()
        / (n - 1.0);
    Ok(BetaEstimate { beta, std_error: (var / n).sqrt() / mean_den })
}

/// Draws `y ~ N(0,1)` and `x = ρy + √(1−ρ²)z` and compares both sides of the
/// factorization for the given gain.
pub fn price_factorization_check<R: Rng + ?Sized>(
    spec: &AlgorithmSpec,
    n_samples: usize,
    correlation: f64,
    rng: &mut R,
) -> Result<PriceCheck, TheoryError> {
    check_samples(n_samples)?;
    if !(correlation.abs() <= 1.0) {
        return Err(TheoryError::InvalidParameter(format!("correlation must lie in [-1, 1], got {correlation}")));
    }
    let rest = (1.0 - correlation * correlation).sqrt();
    let mut rows = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let y = normal(rng);
        let x = correlation * y + rest * normal(rng);
        let g = update_gain(spec, y);
        rows.push([x * g, x * y, y * y, y * g]);
    }
    let n = n_samples as f64;
    let mut m = [0.0; 4];
    for row in &rows {
        for (acc, v) in m.iter_mut().zip(row) {
            *acc += v;
        }
    }
    m.iter_mut().for_each(|v| *v /= n);
    let [xg, xy, yy, yg] = m;
    let lhs = xg;
    let rhs = xy / yy * yg;
    // Influence function of lhs − rhs in the four sample means.
    let coef = [1.0, -yg / yy, xy * yg / (yy * yy), -xy / yy];
    let var = rows
        .iter()
        .map(|row| {
            let d: f64 = row.iter().zip(&m).zip(&coef).map(|((v, mean), c)| c * (v - mean)).sum();
            d * d
        })
        .sum::<f64>()
        / (n - 1.0);
    Ok(PriceCheck { lhs, rhs, std_error: (var / n).sqrt() })
}
