//! Real special functions needed by the closed-form performance theory.
//!
//! The theory engine only ever consumes two fused quantities,
//!
//! ```text
//! scaled_erfc_combo(λ)    = √(πλ) · exp(λ) · erfc(√λ)
//! scaled_erfi_ei_combo(κ) = (π · erfi(√κ) − Ei(κ)) / exp(κ)
//! ```
//!
//! both of which stay O(1) while their factors overflow for arguments
//! beyond ~709. They are evaluated through the scaled complementary error
//! function `erfcx`, the Dawson integral and an exponentially scaled `Ei`,
//! so `exp(λ)` or `exp(κ)` is never formed on its own.
//!
//! Branches:
//!
//! | function | small argument            | middle                 | large argument       |
//! |----------|---------------------------|------------------------|----------------------|
//! | `erfcx`  | positive series, x < 2    | continued fraction     | asymptotic, x² > 50  |
//! | `erfi`   | positive Maclaurin series |                        | asymptotic, x² > 40  |
//! | `Ei`     | convergent series, x ≤ 40 |                        | asymptotic, x > 40   |

use std::f64::consts::PI;

use thiserror::Error;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Largest argument accepted by `f64::exp` without overflow.
const LN_MAX: f64 = 709.782_712_893_384;

/// `erfcx` switches from the continued fraction to the asymptotic series above this `x²`.
pub const ERFC_ASYMPTOTIC_THRESHOLD: f64 = 50.0;
/// `erfi`/Dawson switches to the asymptotic series above this `x²`.
pub const ERFI_ASYMPTOTIC_THRESHOLD: f64 = 40.0;
/// `Ei` switches from the convergent series to the asymptotic series above this `x`.
pub const EI_ASYMPTOTIC_THRESHOLD: f64 = 40.0;

const MAX_TERMS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpecialFunctionError {
    #[error("argument {0} outside the domain of the function")]
    Domain(f64),
    #[error("result for argument {0} overflows f64; use the scaled form")]
    Overflow(f64),
}

/// Which evaluation branch produced a [`SpecialValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalStatus {
    Exact,
    AsymptoticRegime,
    UnderflowClamped,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialValue {
    pub value: f64,
    pub status: EvalStatus,
}

impl SpecialValue {
    fn exact(value: f64) -> Self {
        Self { value, status: EvalStatus::Exact }
    }

    fn asymptotic(value: f64) -> Self {
        Self { value, status: EvalStatus::AsymptoticRegime }
    }
}

/// Sums an asymptotic series given by its first term and the ratio between
/// consecutive terms, stopping at the smallest term.
fn asymptotic_sum(first: f64, ratio: impl Fn(usize) -> f64) -> f64 {
    let mut term = first;
    let mut sum = first;
    for n in 1..MAX_TERMS {
        let next = term * ratio(n);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        sum += next;
        term = next;
        if term.abs() <= f64::EPSILON * 1e-3 * sum.abs() {
            break;
        }
    }
    sum
}

/// Scaled complementary error function `exp(x²)·erfc(x)`.
pub fn erfcx(x: f64) -> f64 {
    if x < 0.0 {
        // erfcx(-x) = 2exp(x²) - erfcx(x)
        let x2 = x * x;
        return if x2 > LN_MAX { f64::INFINITY } else { 2.0 * x2.exp() - erfcx(-x) };
    }
    let x2 = x * x;
    if x < 2.0 {
        erfcx_series(x)
    } else if x2 <= ERFC_ASYMPTOTIC_THRESHOLD {
        erfcx_continued_fraction(x)
    } else {
        erfcx_asymptotic(x)
    }
}

fn erfcx_series(x: f64) -> f64 {
    // exp(x²)·erf(x) = (2x/√π) Σ (2x²)ⁿ / (2n+1)!!, all terms positive.
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..MAX_TERMS {
        term *= 2.0 * x2 / (2 * n + 1) as f64;
        sum += term;
        if term < f64::EPSILON * 1e-2 * sum {
            break;
        }
    }
    x2.exp() - FRAC_2_SQRT_PI * x * sum
}

/// (1/(x√π)) Σ (−1)ⁿ (2n−1)!! / (2x²)ⁿ
fn erfcx_asymptotic(x: f64) -> f64 {
    let y = 0.5 / (x * x);
    asymptotic_sum(1.0, |n| -((2 * n - 1) as f64) * y) / (x * SQRT_PI)
}

/// Even continued fraction for erfc, modified Lentz evaluation:
/// `√π·exp(x²)·erfc(x) = 2x / (2x²+1 − 1·2/(2x²+5 − 3·4/(2x²+9 − …)))`.
fn erfcx_continued_fraction(x: f64) -> f64 {
    let tiny = 1e-300;
    let z = 2.0 * x * x;
    let mut f = z + 1.0;
    let mut c = f;
    let mut d = 0.0;
    for n in 1..MAX_TERMS {
        let a = -(((2 * n - 1) * (2 * n)) as f64);
        let b = z + (4 * n + 1) as f64;
        d = b + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    2.0 * x / (f * SQRT_PI)
}

/// Complementary error function with its evaluation branch.
pub fn erfc_value(x: f64) -> SpecialValue {
    if x < 0.0 {
        return SpecialValue::exact(2.0 - erfc(-x));
    }
    if x < 2.0 {
        // 1 − erf(x) loses at most ~2.5 digits on this interval.
        return SpecialValue::exact(1.0 - erf_series(x));
    }
    let value = (-x * x).exp() * erfcx(x);
    if value == 0.0 {
        return SpecialValue { value: 0.0, status: EvalStatus::UnderflowClamped };
    }
    if x * x > ERFC_ASYMPTOTIC_THRESHOLD {
        SpecialValue::asymptotic(value)
    } else {
        SpecialValue::exact(value)
    }
}

/// Complementary error function, total on the finite reals.
pub fn erfc(x: f64) -> f64 {
    erfc_value(x).value
}

fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 1..MAX_TERMS {
        term *= 2.0 * x2 / (2 * n + 1) as f64;
        sum += term;
        if term < f64::EPSILON * 1e-2 * sum {
            break;
        }
    }
    FRAC_2_SQRT_PI * x * (-x2).exp() * sum
}

/// Σ x^(2n+1) / (n!(2n+1)) so that erfi(x) = (2/√π)·series for x ≥ 0.
fn erfi_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut power = x;
    let mut sum = x;
    for n in 1..MAX_TERMS {
        power *= x2 / n as f64;
        let term = power / (2 * n + 1) as f64;
        sum += term;
        if term < f64::EPSILON * 1e-2 * sum {
            break;
        }
    }
    sum
}

/// Σ (2n−1)!!/(2x²)ⁿ, the asymptotic tail shared by erfi and Dawson's integral.
fn dawson_asymptotic_series(x2: f64) -> f64 {
    let y = 0.5 / x2;
    asymptotic_sum(1.0, |n| (2 * n - 1) as f64 * y)
}

/// Dawson's integral `F(x) = exp(−x²)∫₀ˣ exp(t²) dt = (√π/2)·exp(−x²)·erfi(x)`.
pub fn dawson(x: f64) -> f64 {
    if x < 0.0 {
        return -dawson(-x);
    }
    let x2 = x * x;
    if x2 <= ERFI_ASYMPTOTIC_THRESHOLD {
        (-x2).exp() * erfi_series(x)
    } else {
        dawson_asymptotic_series(x2) / (2.0 * x)
    }
}

/// Imaginary error function `erfi(x) = −i·erf(ix)`.
pub fn erfi_value(x: f64) -> Result<SpecialValue, SpecialFunctionError> {
    if x < 0.0 {
        return erfi_value(-x).map(|v| SpecialValue { value: -v.value, ..v });
    }
    let x2 = x * x;
    if x2 <= ERFI_ASYMPTOTIC_THRESHOLD {
        return Ok(SpecialValue::exact(FRAC_2_SQRT_PI * erfi_series(x)));
    }
    let log_value = x2 + (dawson_asymptotic_series(x2) / (x * SQRT_PI)).ln();
    if log_value > LN_MAX {
        return Err(SpecialFunctionError::Overflow(x));
    }
    Ok(SpecialValue::asymptotic(log_value.exp()))
}

pub fn erfi(x: f64) -> Result<f64, SpecialFunctionError> {
    erfi_value(x).map(|v| v.value)
}

/// `exp(−x)·Ei(x)` for `x > 0`, finite everywhere on that domain.
pub fn expint_ei_scaled(x: f64) -> Result<SpecialValue, SpecialFunctionError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialFunctionError::Domain(x));
    }
    if x <= EI_ASYMPTOTIC_THRESHOLD {
        Ok(SpecialValue::exact((-x).exp() * ei_series(x)))
    } else {
        Ok(SpecialValue::asymptotic(ei_asymptotic_series(x) / x))
    }
}

/// γ + ln x + Σ xⁿ/(n·n!)
fn ei_series(x: f64) -> f64 {
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..MAX_TERMS {
        power *= x / n as f64;
        let term = power / n as f64;
        sum += term;
        if term < f64::EPSILON * 1e-2 * sum {
            break;
        }
    }
    // Summed last so that the cancellation near the root at x ≈ 0.3725 stays absolute.
    (EULER_GAMMA + x.ln()) + sum
}

/// Σ n!/xⁿ
fn ei_asymptotic_series(x: f64) -> f64 {
    asymptotic_sum(1.0, |n| n as f64 / x)
}

/// Exponential integral `Ei(x) = −∫_{−x}^{∞} exp(−t)/t dt` for `x > 0`.
///
/// Returns `+∞` once the result exceeds the f64 range (x ≳ 716).
pub fn expint_ei(x: f64) -> Result<f64, SpecialFunctionError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecialFunctionError::Domain(x));
    }
    if x <= EI_ASYMPTOTIC_THRESHOLD {
        return Ok(ei_series(x));
    }
    let log_value = x + (ei_asymptotic_series(x) / x).ln();
    Ok(if log_value > LN_MAX { f64::INFINITY } else { log_value.exp() })
}

/// `√(πλ)·exp(λ)·erfc(√λ)` with its evaluation branch.
///
/// Lies in (0, 1), increases monotonically and tends to 1 like
/// `Σ (−1)ⁿ (2n−1)!!/(2λ)ⁿ`.
pub fn scaled_erfc_combo_value(lambda: f64) -> SpecialValue {
    if !(lambda > 0.0) {
        return SpecialValue::exact(0.0);
    }
    let x = lambda.sqrt();
    let value = SQRT_PI * x * erfcx(x);
    if lambda > ERFC_ASYMPTOTIC_THRESHOLD {
        SpecialValue::asymptotic(value)
    } else {
        SpecialValue::exact(value)
    }
}

pub fn scaled_erfc_combo(lambda: f64) -> f64 {
    scaled_erfc_combo_value(lambda).value
}

/// `(π·erfi(√κ) − Ei(κ))/exp(κ)` for `κ > 0`, with its evaluation branch.
///
/// Equals `2∫₀^∞ exp(−κu²)/(1+u) du`; grows like `−ln κ` as κ → 0 and decays
/// like `√(π/κ)(1 + 1/(2κ) + …) − (1/κ)(1 + 1/κ + …)` for large κ.
pub fn scaled_erfi_ei_combo_value(kappa: f64) -> Result<SpecialValue, SpecialFunctionError> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(SpecialFunctionError::Domain(kappa));
    }
    if kappa <= ERFI_ASYMPTOTIC_THRESHOLD.min(EI_ASYMPTOTIC_THRESHOLD) {
        let x = kappa.sqrt();
        let value = 2.0 * SQRT_PI * dawson(x) - (-kappa).exp() * ei_series(kappa);
        return Ok(SpecialValue::exact(value));
    }
    let dawson_part = (PI / kappa).sqrt() * dawson_asymptotic_series(kappa);
    let ei_part = ei_asymptotic_series(kappa) / kappa;
    Ok(SpecialValue::asymptotic(dawson_part - ei_part))
}

pub fn scaled_erfi_ei_combo(kappa: f64) -> Result<f64, SpecialFunctionError> {
    scaled_erfi_ei_combo_value(kappa).map(|v| v.value)
}
