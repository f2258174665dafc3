//! The `run`, `sweep` and `theory` subcommands.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::{AlphaSetting, FileConfig, Overrides, ResolvedExperiment};
use super::output::{fmt_number, fmt_optional, OutputDir, RunManifest};
use super::predict::{self, SteadyPrediction};
use super::CliError;
use crate::filters::AlgorithmKind;
use crate::simkit::{self, ExperimentConfig, LearningCurves, NoiseKind, NoiseModel, TailWindow};
use crate::theory::{self, HModel, TheoryError};

/// Draws behind the β estimate in `theory.json`.
const BETA_SAMPLES: usize = 1_000_000;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunOptions {
    pub overrides: Overrides,
    /// Dedicated worker count; the global pool when `None`.
    pub workers: Option<usize>,
    pub fail_on_divergence: bool,
}

fn to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

fn simulate(config: &ExperimentConfig, tail: &TailWindow, workers: Option<usize>) -> Result<LearningCurves, CliError> {
    let result = match workers {
        Some(n) => simkit::run_ensemble_on(config, tail, n),
        None => simkit::run_ensemble(config, tail),
    };
    result.map_err(|e| match e {
        simkit::SimError::InvalidConfig { .. } => CliError::Config(e.to_string()),
        other => CliError::Other(other.to_string()),
    })
}

/// Keeps a theory value, or records why it is missing.
fn noted<T>(result: Result<T, TheoryError>, what: &str, notes: &mut Vec<String>) -> Option<T> {
    result.map_err(|e| notes.push(format!("{what}: {e}"))).ok()
}

fn steady_json(p: Option<SteadyPrediction>) -> Value {
    match p {
        Some(p) => json!({
            "method": p.method,
            "emse": p.emse,
            "msd": p.msd,
            "emse_db": to_db(p.emse),
            "msd_db": to_db(p.msd),
        }),
        None => Value::Null,
    }
}

fn divergence_check(options: &RunOptions, counts: &[(String, usize)]) -> Result<(), CliError> {
    let hit: Vec<String> = counts.iter().filter(|(_, n)| *n > 0).map(|(l, n)| format!("{l}: {n} trial(s)")).collect();
    if options.fail_on_divergence && !hit.is_empty() {
        return Err(CliError::Diverged(hit.join(", ")));
    }
    Ok(())
}

fn echo(exps: &[ResolvedExperiment]) -> Value {
    serde_json::to_value(exps).unwrap_or(Value::Null)
}

fn tail_json(tail: &TailWindow) -> Value {
    serde_json::to_value(tail).unwrap_or(Value::Null)
}

/// Simulates every configured algorithm and writes `curves.csv` and
/// `summary.json`.
pub fn cmd_run(config_path: &Path, output_dir: &Path, options: &RunOptions) -> Result<RunManifest, CliError> {
    let file = FileConfig::load(config_path)?;
    let o = &options.overrides;
    let tail = file.tail_window(o)?;
    let exps = file.experiments(o)?;
    let seed = file.seed(o);

    let mut out = OutputDir::create(output_dir)?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut counts = Vec::new();
    for exp in &exps {
        let c = &exp.config;
        let curves = simulate(c, &tail, options.workers)?;
        for (t, (msd, emse)) in curves.msd_db.iter().zip(&curves.emse_db).enumerate() {
            rows.push(vec![t.to_string(), exp.label.clone(), fmt_number(*msd), fmt_number(*emse), "sim".into()]);
        }

        let mut notes = Vec::new();
        let curve = if file.experiment.theory { noted(predict::transient(c), "transient", &mut notes).flatten() } else { None };
        if let Some(curve) = &curve {
            for (t, (msd, emse)) in curve.msd.iter().zip(&curve.emse).enumerate() {
                rows.push(vec![
                    t.to_string(),
                    exp.label.clone(),
                    fmt_number(to_db(*msd)),
                    fmt_number(to_db(*emse)),
                    "theory".into(),
                ]);
            }
        }
        let steady = noted(predict::steady(c), "steady state", &mut notes).flatten();

        counts.push((exp.label.clone(), curves.diverged_trials));
        entries.push(json!({
            "label": exp.label,
            "kind": c.algorithm.kind,
            "mu": c.mu,
            "alpha": c.algorithm.effective_alpha(),
            "trials": c.n_trials,
            "trials_used": curves.trials_used,
            "diverged_trials": curves.diverged_trials,
            "steady_msd_db_sim": curves.steady_msd_db,
            "steady_emse_db_sim": curves.steady_emse_db,
            "steady_error_sq_sim": curves.steady_error_sq,
            "theory": {
                "steady": steady_json(steady),
                "transient_final_msd_db": curve.as_ref().map(|k| to_db(k.steady_msd)),
                "transient_final_emse_db": curve.as_ref().map(|k| to_db(k.steady_emse)),
                "transient_diverged": curve.as_ref().map(|k| k.diverged),
            },
            "notes": notes,
        }));
    }

    out.write_csv("curves.csv", &["iteration", "algorithm", "msd_db", "emse_db", "source"], &rows)?;
    out.write_json(
        "summary.json",
        &json!({
            "name": file.experiment.name,
            "seed": seed,
            "tail_window": tail_json(&tail),
            "algorithms": entries,
            "config": echo(&exps),
        }),
    )?;
    let manifest = out.finish("run", seed, echo(&exps))?;
    divergence_check(options, &counts)?;
    Ok(manifest)
}

/// Noise model for one point of a `nu_i` grid: Gaussian at zero,
/// impulsive otherwise.
fn noise_at(base: &NoiseModel, nu_i: Option<f64>) -> NoiseModel {
    match nu_i {
        None => *base,
        Some(nu) if nu == 0.0 => NoiseModel::gaussian(base.sigma_no_sq),
        Some(nu) => NoiseModel { kind: NoiseKind::Impulsive, nu_i: nu, ..*base },
    }
}

/// Steady-state simulation and theory over the `[sweep]` grid; writes
/// `sweep.csv` and `summary.json`.
pub fn cmd_sweep(config_path: &Path, output_dir: &Path, options: &RunOptions) -> Result<RunManifest, CliError> {
    let file = FileConfig::load(config_path)?;
    let o = &options.overrides;
    let grid = file.sweep.as_ref().ok_or_else(|| CliError::Config("sweep: the file has no [sweep] table".into()))?;
    if file.algorithms.len() != 1 {
        return Err(CliError::Config(format!(
            "sweep: exactly one [[algorithm]] entry is swept, found {}",
            file.algorithms.len()
        )));
    }
    if grid.mu.is_empty() && grid.alpha.is_empty() && grid.nu_i.is_empty() {
        return Err(CliError::Config("sweep: every grid is empty; give at least one of mu, alpha, nu_i".into()));
    }
    let tail = file.tail_window(o)?;
    let seed = file.seed(o);
    let entry = &file.algorithms[0];
    let mus = if grid.mu.is_empty() { vec![entry.mu] } else { grid.mu.clone() };
    let alphas: Vec<Option<AlphaSetting>> =
        if grid.alpha.is_empty() { vec![entry.alpha.clone()] } else { grid.alpha.iter().cloned().map(Some).collect() };
    let nus: Vec<Option<f64>> = if grid.nu_i.is_empty() { vec![None] } else { grid.nu_i.iter().copied().map(Some).collect() };

    let base = file.noise_model();
    let mut points = Vec::new();
    for nu in &nus {
        let noise = noise_at(&base, *nu);
        for a in &alphas {
            let alpha = file.resolve_alpha(0, a.as_ref(), &noise).map_err(|e| match e {
                CliError::Config(m) => CliError::Config(m.replacen("algorithm[0].alpha", "sweep.alpha", 1)),
                other => other,
            })?;
            for &mu in &mus {
                points.push(file.build(0, mu, alpha, noise, o)?);
            }
        }
    }

    let mut out = OutputDir::create(output_dir)?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut counts = Vec::new();
    for p in &points {
        let c = &p.config;
        let curves = simulate(c, &tail, options.workers)?;
        let mut notes = Vec::new();
        let steady = noted(predict::steady(c), "steady state", &mut notes).flatten();
        let theory_db = steady.map(|s| to_db(s.msd));
        let alpha = c.algorithm.effective_alpha();
        rows.push(vec![
            fmt_number(c.mu),
            fmt_number(alpha),
            fmt_number(c.noise.nu_i),
            fmt_optional(curves.steady_msd_db),
            fmt_optional(theory_db),
        ]);
        counts.push((format!("{} mu={} alpha={} nu_i={}", p.label, c.mu, alpha, c.noise.nu_i), curves.diverged_trials));
        entries.push(json!({
            "mu": c.mu,
            "alpha": alpha,
            "nu_i": c.noise.nu_i,
            "trials_used": curves.trials_used,
            "diverged_trials": curves.diverged_trials,
            "steady_msd_db_sim": curves.steady_msd_db,
            "steady_emse_db_sim": curves.steady_emse_db,
            "theory": steady_json(steady),
            "notes": notes,
        }));
    }

    out.write_csv("sweep.csv", &["mu", "alpha", "nu_i", "steady_msd_db_sim", "steady_msd_db_theory"], &rows)?;
    out.write_json(
        "summary.json",
        &json!({
            "name": file.experiment.name,
            "algorithm": points.first().map(|p| p.label.clone()),
            "seed": seed,
            "tail_window": tail_json(&tail),
            "points": entries,
        }),
    )?;
    let manifest = out.finish("sweep", seed, echo(&points))?;
    divergence_check(options, &counts)?;
    Ok(manifest)
}

fn theory_entry(exp: &ResolvedExperiment, seed: u64, index: u64) -> Result<Value, CliError> {
    let c = &exp.config;
    let kind = c.algorithm.kind;
    if !predict::has_moment_rows(kind) {
        return Err(CliError::Config(format!(
            "{}: {kind} has no Gaussian closed-form moment row; theory is available for LMS, LMF, SA, LMLS and LLAD",
            exp.label
        )));
    }
    let env = predict::environment(c).map_err(|e| CliError::Config(format!("{}: {e}", exp.label)))?;
    let alpha = c.algorithm.effective_alpha();
    let mut notes = Vec::new();
    let steady = noted(predict::steady(c), "steady state", &mut notes).flatten();

    let mut entry = json!({
        "label": exp.label,
        "kind": kind,
        "mu": c.mu,
        "alpha": alpha,
        "steady": steady_json(steady),
    });

    if c.noise.kind == NoiseKind::Gaussian {
        let limit = noted(theory::steady_state_fixed_point(&c.algorithm, c.mu, &env), "fixed point", &mut notes);
        let exact = noted(
            theory::steady_state_fixed_point_with(&c.algorithm, c.mu, &env, HModel::Exact),
            "fixed point (exact moments)",
            &mut notes,
        );
        entry["fixed_point"] = json!(limit);
        entry["fixed_point_exact_moments"] = json!(exact);
        if let Some(s) = limit {
            let sigma_e_sq = s.emse + env.noise_var();
            if sigma_e_sq > 0.0 {
                entry["error_variance"] = json!(sigma_e_sq);
                entry["h_pair"] = json!(noted(theory::h_pair(kind, sigma_e_sq, alpha), "h pair", &mut notes));
                entry["h_pair_steady_limit"] =
                    json!(noted(theory::h_pair_steady_limit(kind, sigma_e_sq, alpha), "h pair limit", &mut notes));
                if kind == AlgorithmKind::Lmls {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(index);
                    entry["stability_beta"] =
                        json!(noted(theory::stability_beta(sigma_e_sq, alpha, BETA_SAMPLES, &mut rng), "beta", &mut notes));
                }
            }
        }
        if env.tracking_q_trace() > 0.0 && matches!(kind, AlgorithmKind::Lmls | AlgorithmKind::Llad) {
            entry["tracking"] = json!({
                "emse": noted(theory::tracking_emse(kind, c.mu, alpha, &env), "tracking", &mut notes),
                "optimal_step": noted(theory::tracking_optimal_step(kind, alpha, &env), "tracking optimum", &mut notes),
            });
        }
    } else if kind == AlgorithmKind::Llad {
        let n = &c.noise;
        let opt = noted(theory::alpha_opt(n.nu_i, n.sigma_no_sq), "alpha_opt", &mut notes);
        let numeric = noted(
            theory::alpha_opt_numeric(c.mu, &env, n.nu_i, n.sigma_no_sq, n.sigma_ni_sq),
            "alpha_opt_numeric",
            &mut notes,
        );
        let emse_at_opt = opt.and_then(|a| {
            noted(theory::impulsive_emse_llad(c.mu, a, &env, n.nu_i, n.sigma_no_sq, n.sigma_ni_sq), "emse at alpha_opt", &mut notes)
        });
        entry["alpha_opt"] = json!(opt);
        entry["alpha_opt_numeric"] = json!(numeric);
        entry["impulsive_emse_at_alpha_opt"] = json!(emse_at_opt);
    } else {
        notes.push("impulsive noise: only LLAD has a closed form".into());
    }
    entry["notes"] = json!(notes);
    Ok(entry)
}

/// Closed-form quantities for each configured algorithm; writes
/// `theory.json`.
pub fn cmd_theory(config_path: &Path, output_dir: &Path, options: &RunOptions) -> Result<RunManifest, CliError> {
    let file = FileConfig::load(config_path)?;
    let o = &options.overrides;
    let exps = file.experiments(o)?;
    let seed = file.seed(o);
    let entries =
        exps.iter().enumerate().map(|(i, e)| theory_entry(e, seed, i as u64)).collect::<Result<Vec<_>, _>>()?;
    let first = &exps[0].config;
    let env = predict::environment(first).map_err(|e| CliError::Config(e.to_string()))?;

    let mut out = OutputDir::create(output_dir)?;
    out.write_json(
        "theory.json",
        &json!({
            "name": file.experiment.name,
            "seed": seed,
            "environment": {
                "filter_order": env.filter_order(),
                "trace_r": env.trace_r(),
                "noise_variance": env.noise_var(),
                "tracking_q_trace": env.tracking_q_trace(),
                "regressor": first.regressor,
                "noise": first.noise,
            },
            "algorithms": entries,
        }),
    )?;
    out.finish("theory", seed, echo(&exps))
}
