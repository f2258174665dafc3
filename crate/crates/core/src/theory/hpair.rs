//! Gaussian moment functions `h_G = E[e·g(e)]/σ_e²` and `h_U = E[g(e)²]`.
//!
//! For LMLS and LLAD the closed forms contain differences of nearly equal
//! terms once `λ = 1/(2ασ_e²)` or `κ = 1/(2α²σ_e²)` grows. Past
//! [`LMLS_SERIES_THRESHOLD`] and [`LLAD_SERIES_THRESHOLD`] the same
//! quantities are summed from their large-argument expansions, in which the
//! cancelling leading terms have been removed analytically.

use std::f64::consts::PI;

use serde::Serialize;

use super::TheoryError;
use crate::filters::AlgorithmKind;
use crate::specfun::{scaled_erfc_combo, scaled_erfi_ei_combo};

/// λ above which the LMLS pair is summed from its expansion in `y = 1/(2λ)`.
pub const LMLS_SERIES_THRESHOLD: f64 = 36.0;
/// κ above which the LLAD pair is summed from its expansion in `1/κ`.
pub const LLAD_SERIES_THRESHOLD: f64 = 40.0;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const MAX_TERMS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HPair {
    pub h_g: f64,
    pub h_u: f64,
    /// `1/(2ασ_e²)`
    pub lambda: f64,
    /// `1/(2α²σ_e²)`
    pub kappa: f64,
}

/// Sums `Σ_{n≥1} tₙ` where `t₁ = first` and `tₙ₊₁ = tₙ·ratio(n)`, truncated at
/// the smallest term. `weight(n)` multiplies each term without affecting the
/// stopping rule.
fn truncated_series(first: f64, ratio: impl Fn(usize) -> f64, weight: impl Fn(usize) -> f64, sign_alternates: bool) -> f64 {
    let mut term = first;
    let mut sum = 0.0;
    for n in 1..MAX_TERMS {
        let signed = if sign_alternates && n % 2 == 0 { -term } else { term };
        sum += weight(n) * signed;
        let next = term * ratio(n);
        if next >= term || next == 0.0 || next * weight(n + 1) <= f64::EPSILON * 1e-3 * sum.abs() {
            break;
        }
        term = next;
    }
    sum
}

/// `(2n−1)!!` ratio helper: `a_{n+1}/a_n = 2n+1`.
fn lmls_pair(sigma_e_sq: f64, alpha: f64) -> (f64, f64) {
    let lambda = 1.0 / (2.0 * alpha * sigma_e_sq);
    if lambda <= LMLS_SERIES_THRESHOLD {
        let s = scaled_erfc_combo(lambda);
        let h_g = 1.0 - 2.0 * lambda * (1.0 - s);
        let h_u = sigma_e_sq * (1.0 - 2.0 * lambda * (lambda + 2.0) + lambda * (2.0 * lambda + 5.0) * s);
        return (h_g, h_u);
    }
    let y = 0.5 / lambda;
    // h_G = Σ_{m≥1} (−1)^{m+1} (2m+1)!! yᵐ, first term 3y.
    let h_g = truncated_series(3.0 * y, |m| (2 * m + 3) as f64 * y, |_| 1.0, true);
    // h_U/σ² = Σ_{k≥2} (−1)^k (k−1)(2k+1)!! y^k; index shifted to m = k−1 ≥ 1, first term 15y².
    let h_u = truncated_series(15.0 * y * y, |m| (2 * m + 5) as f64 * y, |m| m as f64, true);
    (h_g, sigma_e_sq * h_u)
}

fn llad_pair(sigma_e_sq: f64, alpha: f64) -> (f64, f64) {
    let kappa = 1.0 / (2.0 * alpha * alpha * sigma_e_sq);
    let sigma_e = sigma_e_sq.sqrt();
    let prefactor = (2.0 / PI).sqrt() / sigma_e;
    if kappa <= LLAD_SERIES_THRESHOLD {
        let c = scaled_erfi_ei_combo(kappa).expect("kappa is positive");
        let core = 1.0 - (kappa * PI).sqrt() + kappa * c;
        let h_u = 1.0 - 2.0 * kappa + 2.0 * (kappa / PI).sqrt() * (1.0 + (kappa - 1.0) * c);
        return (prefactor * core, h_u);
    }
    let sqrt_kappa = kappa.sqrt();
    // Pₙ = (2n−1)!!/(2κ)ⁿ and Fₙ = n!/κⁿ for n ≥ 1.
    let p_ratio = |n: usize| (2 * n + 1) as f64 / (2.0 * kappa);
    let f_ratio = |n: usize| (n + 1) as f64 / kappa;
    // 1 − √(κπ) + κC = √(πκ) Σ Pₙ − Σ Fₙ
    let core = SQRT_PI * sqrt_kappa * truncated_series(0.5 / kappa, p_ratio, |_| 1.0, false)
        - truncated_series(1.0 / kappa, f_ratio, |_| 1.0, false);
    // h_U = Σ (2n−1) Pₙ − (2/√π) √κ Σ_{n≥2} (n−1)·(n−1)!/κⁿ
    let h_u = truncated_series(0.5 / kappa, p_ratio, |n| (2 * n - 1) as f64, false)
        - 2.0 / SQRT_PI * sqrt_kappa * truncated_series(1.0 / (kappa * kappa), f_ratio, |m| m as f64, false);
    (prefactor * core, h_u)
}

/// The `(h_G, h_U)` row for `kind` at error variance `σ_e²`.
///
/// Only the kinds with Gaussian closed forms are supported: LMS, LMF, SA,
/// LMLS and LLAD. α is ignored by the first three.
pub fn h_pair(kind: AlgorithmKind, sigma_e_sq: f64, alpha: f64) -> Result<HPair, TheoryError> {
    if !(sigma_e_sq > 0.0) || !sigma_e_sq.is_finite() {
        return Err(TheoryError::InvalidParameter(format!("sigma_e_sq must be positive, got {sigma_e_sq}")));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(TheoryError::InvalidParameter(format!("alpha must be positive, got {alpha}")));
    }
    let lambda = 1.0 / (2.0 * alpha * sigma_e_sq);
    let kappa = lambda / alpha;
    let (h_g, h_u) = match kind {
        AlgorithmKind::Lms => (1.0, sigma_e_sq),
        AlgorithmKind::Lmf => (3.0 * sigma_e_sq, 15.0 * sigma_e_sq.powi(3)),
        AlgorithmKind::Sa => ((2.0 / PI).sqrt() / sigma_e_sq.sqrt(), 1.0),
        AlgorithmKind::Lmls => lmls_pair(sigma_e_sq, alpha),
        AlgorithmKind::Llad => llad_pair(sigma_e_sq, alpha),
        other => return Err(TheoryError::UnsupportedKind(other)),
    };
    Ok(HPair { h_g, h_u, lambda, kappa })
}

/// The small-error limits used for steady-state analysis: LMLS behaves like
/// `(3ασ_e², 15α²σ_e⁶)` and LLAD like `(α, α²σ_e²)`. Other kinds are exact.
pub fn h_pair_steady_limit(kind: AlgorithmKind, sigma_e_sq: f64, alpha: f64) -> Result<HPair, TheoryError> {
    let exact = h_pair(kind, sigma_e_sq, alpha)?;
    let (h_g, h_u) = match kind {
        AlgorithmKind::Lmls => (3.0 * alpha * sigma_e_sq, 15.0 * alpha * alpha * sigma_e_sq.powi(3)),
        AlgorithmKind::Llad => (alpha, alpha * alpha * sigma_e_sq),
        _ => (exact.h_g, exact.h_u),
    };
    Ok(HPair { h_g, h_u, ..exact })
}
