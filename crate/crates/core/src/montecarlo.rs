//! Monte Carlo sums of independent symmetric copies of a given rearrangement.
//!
//! Trial `i` draws from its own ChaCha8 stream `(seed, i)`, so results do not
//! depend on how trials are scheduled across threads.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::counterexample::disjoint_norm;
use crate::error::{invalid, Result};
use crate::measure::{rearrangement_eval_f64, StepFunction};
use crate::numerics::{log_sum, LogScalar};
use crate::orlicz::{luxemburg_seq, OrliczFunction};

pub const BATCHES: usize = 10;

/// Dynamic range (in log2) above which sums are kept in log form.
const HEAVY_RANGE_LOG2: f64 = 50.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientScheme {
    Flat,
    Unit,
    Geometric(f64),
}

impl CoefficientScheme {
    pub fn coefficients(&self, n: usize) -> Vec<f64> {
        match *self {
            Self::Flat => vec![1.0; n],
            Self::Unit => {
                let mut a = vec![0.0; n];
                if n > 0 {
                    a[0] = 1.0;
                }
                a
            }
            Self::Geometric(r) => (0..n).map(|k| r.powi(k as i32)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimConfig {
    pub rearrangement: StepFunction,
    pub p: f64,
    pub n_list: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub scheme: CoefficientScheme,
    /// When present the reference is the Luxemburg norm of the coefficients.
    pub orlicz: Option<OrliczFunction>,
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1.0..=2.0).contains(&self.p) {
            return Err(invalid(format!("p must lie in [1, 2], got {}", self.p)));
        }
        if self.trials < 100 {
            return Err(invalid(format!("at least 100 trials are required, got {}", self.trials)));
        }
        if self.n_list.is_empty() || self.n_list[0] == 0 || self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("n_list must be non-empty, positive and strictly increasing"));
        }
        if self.rearrangement.is_empty() {
            return Err(invalid("the rearrangement must be non-zero"));
        }
        if let CoefficientScheme::Geometric(r) = self.scheme {
            if !(r > 0.0 && r.is_finite()) {
                return Err(invalid(format!("geometric ratio must be positive, got {r}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimRecord {
    pub n: usize,
    pub empirical: f64,
    pub reference: f64,
    pub ratio: f64,
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimReport {
    pub records: Vec<SimRecord>,
    pub band_min: f64,
    pub band_max: f64,
    pub seed: u64,
    pub trials: usize,
    pub p: f64,
}

impl SimReport {
    pub fn band_ratio(&self) -> f64 {
        self.band_max / self.band_min
    }
}

/// `sigma * f*(u)`.
pub fn sample_value(f: &StepFunction, u: f64, sigma: i8) -> Result<LogScalar> {
    if !(u > 0.0 && u < 1.0) {
        return Err(invalid(format!("u must lie in (0, 1), got {u}")));
    }
    let v = rearrangement_eval_f64(f, u)?;
    Ok(if sigma < 0 { -v } else { v })
}

/// Inverse-transform tables for one rearrangement.
struct Sampler {
    cum: Vec<f64>,
    values: Vec<f64>,
    log_values: Vec<f64>,
    heavy: bool,
}

impl Sampler {
    fn new(f: &StepFunction) -> Self {
        let cum = f.cumulative().iter().map(|c| c.to_f64()).collect();
        let log_values: Vec<f64> = f.atoms().iter().map(|a| a.value.log2_mag()).collect();
        let hi = log_values.first().copied().unwrap_or(0.0);
        let lo = log_values.last().copied().unwrap_or(0.0);
        let heavy = hi - lo > HEAVY_RANGE_LOG2 || hi > 900.0 || lo < -900.0;
        Self {
            cum,
            values: f.atoms().iter().map(|a| a.value.to_f64()).collect(),
            log_values,
            heavy,
        }
    }

    /// One 64-bit draw: the top bit is the sign, the low 53 bits give `u` in `(0, 1)`.
    fn draw(&self, rng: &mut ChaCha8Rng) -> (bool, Option<usize>) {
        let x = rng.next_u64();
        let negative = x >> 63 == 1;
        let u = ((x & ((1u64 << 53) - 1)) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64);
        let i = self.cum.partition_point(|&c| c <= u);
        (negative, (i < self.values.len()).then_some(i))
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Signed partial sums `Σ_{k<=n} a_k f_k` for every `n` in `n_list`, one row per trial.
fn run_trial(s: &Sampler, coeffs: &[f64], log_coeffs: &[f64], n_list: &[usize], seed: u64, trial: usize) -> Vec<LogScalar> {
    let mut rng = trial_rng(seed, trial);
    let mut out = Vec::with_capacity(n_list.len());
    let mut next = 0;
    if s.heavy {
        let mut sum = LogScalar::ZERO;
        for (k, (&a, &la)) in coeffs.iter().zip(log_coeffs).enumerate() {
            let (neg, idx) = s.draw(&mut rng);
            if let (Some(i), true) = (idx, a != 0.0) {
                let term = LogScalar::from_log2(s.log_values[i] + la);
                sum = if (a < 0.0) != neg { sum - term } else { sum + term };
            }
            if k + 1 == n_list[next] {
                out.push(sum);
                next += 1;
            }
        }
    } else {
        // Neumaier compensated summation.
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        for (k, &a) in coeffs.iter().enumerate() {
            let (neg, idx) = s.draw(&mut rng);
            if let Some(i) = idx {
                let x = if neg { -a * s.values[i] } else { a * s.values[i] };
                let t = sum + x;
                comp += if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
                sum = t;
            }
            if k + 1 == n_list[next] {
                out.push(LogScalar::from_f64(sum + comp));
                next += 1;
            }
        }
    }
    out
}

/// Signed sums for every trial (rows) and every `n` (columns).
pub fn simulate_sums(cfg: &SimConfig) -> Result<Vec<Vec<LogScalar>>> {
    cfg.validate()?;
    let sampler = Sampler::new(&cfg.rearrangement);
    let n_max = *cfg.n_list.last().expect("validated");
    let coeffs = cfg.scheme.coefficients(n_max);
    let log_coeffs: Vec<f64> = coeffs.iter().map(|a| a.abs().log2()).collect();
    Ok((0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(&sampler, &coeffs, &log_coeffs, &cfg.n_list, cfg.seed, i))
        .collect())
}

/// Mean of `values` and the batch-means standard error, both as `log2`/relative.
fn mean_and_rel_stderr(values: &[LogScalar]) -> (LogScalar, f64) {
    let n = values.len();
    let mean = log_sum(values).scale_log2(-(n as f64).log2());
    if mean.is_zero() {
        return (mean, 0.0);
    }
    let size = n / BATCHES;
    let batch_means: Vec<f64> = (0..BATCHES)
        .map(|b| {
            let end = if b + 1 == BATCHES { n } else { (b + 1) * size };
            let chunk = &values[b * size..end];
            (log_sum(chunk).scale_log2(-(chunk.len() as f64).log2()) / mean).to_f64()
        })
        .collect();
    let avg = batch_means.iter().sum::<f64>() / BATCHES as f64;
    let var = batch_means.iter().map(|m| (m - avg) * (m - avg)).sum::<f64>() / (BATCHES - 1) as f64;
    (mean, (var / BATCHES as f64).sqrt())
}

/// `(E|S|^p)^(1/p)` estimate and its standard error.
fn lp_estimate(sums: &[LogScalar], p: f64) -> (LogScalar, f64) {
    let powers: Vec<LogScalar> = sums.iter().map(|s| s.abs().powf(p)).collect();
    let (mean, rel) = mean_and_rel_stderr(&powers);
    let norm = mean.powf(1.0 / p);
    (norm, norm.to_f64() * rel / p)
}

fn reference(cfg: &SimConfig, n: usize) -> Result<f64> {
    let a = cfg.scheme.coefficients(n);
    match &cfg.orlicz {
        Some(m) => luxemburg_seq(m, &a, 1e-13),
        None => Ok(disjoint_norm(&cfg.rearrangement, &a, cfg.p)?.to_f64()),
    }
}

/// Empirical `‖Σ_{k<=n} a_k f_k‖_p` against the reference norm for every `n`.
pub fn empirical_lp_norm(cfg: &SimConfig) -> Result<SimReport> {
    let sums = simulate_sums(cfg)?;
    let mut records = Vec::with_capacity(cfg.n_list.len());
    for (j, &n) in cfg.n_list.iter().enumerate() {
        let column: Vec<LogScalar> = sums.iter().map(|row| row[j]).collect();
        let (norm, se) = lp_estimate(&column, cfg.p);
        let r = reference(cfg, n)?;
        let empirical = norm.to_f64();
        records.push(SimRecord {
            n,
            empirical,
            reference: r,
            ratio: empirical / r,
            stderr: se / r,
        });
    }
    let band_min = records.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let band_max = records.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
    Ok(SimReport {
        records,
        band_min,
        band_max,
        seed: cfg.seed,
        trials: cfg.trials,
        p: cfg.p,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RosenthalReport {
    pub empirical: f64,
    pub exact: f64,
    pub ratio: f64,
    pub stderr: f64,
}

/// Empirical `‖Σ a_k f_k‖_p` over the exact `‖Σ a_k f̄_k‖_{L_p + L_2}`.
pub fn rosenthal_ratio(
    f: &StepFunction,
    a: &[f64],
    p: f64,
    trials: usize,
    seed: u64,
) -> Result<RosenthalReport> {
    if a.is_empty() || a.iter().any(|x| !x.is_finite()) {
        return Err(invalid("coefficients must be finite and non-empty"));
    }
    let n = a.len();
    let cfg = SimConfig {
        rearrangement: f.clone(),
        p,
        n_list: vec![n],
        trials,
        seed,
        scheme: CoefficientScheme::Flat,
        orlicz: None,
    };
    cfg.validate()?;
    let sampler = Sampler::new(f);
    let log_coeffs: Vec<f64> = a.iter().map(|x| x.abs().log2()).collect();
    let sums: Vec<LogScalar> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(&sampler, a, &log_coeffs, &[n], seed, i)[0])
        .collect();
    let (norm, se) = lp_estimate(&sums, p);
    let exact = disjoint_norm(f, a, p)?.to_f64();
    let empirical = norm.to_f64();
    Ok(RosenthalReport {
        empirical,
        exact,
        ratio: empirical / exact,
        stderr: se / exact,
    })
}
