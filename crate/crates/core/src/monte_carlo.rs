//! Monte Carlo hitting times for Bessel processes with index `≤ 0`.
//!
//! Euler steps for `dR = dW + (2ν + 1)/(2R) dt` started at `x`. A path
//! that stays above 1 over a step from `a + 1` to `b + 1` still crossed
//! with the Brownian-bridge probability `exp(−2ab/h)`; hits are recorded at
//! the middle of the step in which they happen.
//!
//! ```
//! use besselhit::monte_carlo::{sample_hitting_times, MCConfig};
//! let cfg = MCConfig::new(-0.5, 2.0, 1e-3, 2_000, 7).unwrap().with_t_max(5.0).unwrap();
//! let s = sample_hitting_times(&cfg).unwrap();
//! assert_eq!(s.hitting_times.len() + s.censored_count, 2_000);
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::index::check_start;

/// Simulation parameters. Each path draws from its own stream of a ChaCha8
/// generator seeded with `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MCConfig {
    pub signed_mu: f64,
    pub x: f64,
    /// Time step `h`.
    pub step: f64,
    pub n_paths: usize,
    /// Paths still above 1 at `t_max` are censored.
    pub t_max: f64,
    pub seed: u64,
}

impl MCConfig {
    /// Configuration with the default horizon `10³ x²`.
    pub fn new(signed_mu: f64, x: f64, step: f64, n_paths: usize, seed: u64) -> Result<Self> {
        let cfg = MCConfig {
            signed_mu,
            x,
            step,
            n_paths,
            t_max: 1e3 * x * x,
            seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_t_max(mut self, t_max: f64) -> Result<Self> {
        self.t_max = t_max;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.signed_mu <= 0.0 && self.signed_mu >= -6.0) {
            return Err(domain(format!(
                "simulation needs an index in [−6, 0], got {}",
                self.signed_mu
            )));
        }
        check_start(self.x)?;
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(domain(format!("step must be positive, got {}", self.step)));
        }
        if self.n_paths == 0 {
            return Err(domain("need at least one path"));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(domain(format!("t_max must be positive and finite, got {}", self.t_max)));
        }
        Ok(())
    }

    /// `h ≤ 10⁻² min(1, (x − 1)²)`, below which the discretisation bias is
    /// small next to the start distance.
    pub fn step_is_recommended(&self) -> bool {
        let lambda = self.x - 1.0;
        self.step <= 1e-2 * (lambda * lambda).min(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MCSampleSet {
    /// Uncensored hitting times, sorted.
    pub hitting_times: Vec<f64>,
    pub censored_count: usize,
    pub config: MCConfig,
}

impl MCSampleSet {
    /// Empirical quantile of the uncensored times (lower order statistic).
    pub fn quantile(&self, p: f64) -> Option<f64> {
        let n = self.hitting_times.len();
        if n == 0 || !(0.0..=1.0).contains(&p) {
            return None;
        }
        let i = ((p * n as f64).ceil() as usize).clamp(1, n) - 1;
        Some(self.hitting_times[i])
    }

    pub fn censored_fraction(&self) -> f64 {
        self.censored_count as f64 / self.config.n_paths as f64
    }
}

/// Beyond this value of `2ab/h` the crossing probability is below `e^{−40}`
/// and no uniform is drawn.
const BRIDGE_CUTOFF: f64 = 40.0;

/// Simulates `cfg.n_paths` paths in parallel.
pub fn sample_hitting_times(cfg: &MCConfig) -> Result<MCSampleSet> {
    cfg.validate()?;
    let mut times: Vec<Option<f64>> = (0..cfg.n_paths)
        .into_par_iter()
        .with_min_len(256)
        .map(|i| simulate_path(cfg, i as u64))
        .collect();
    let censored_count = times.iter().filter(|t| t.is_none()).count();
    let mut hitting_times: Vec<f64> = times.drain(..).flatten().collect();
    hitting_times.sort_by(f64::total_cmp);
    Ok(MCSampleSet {
        hitting_times,
        censored_count,
        config: *cfg,
    })
}

fn simulate_path(cfg: &MCConfig, path: u64) -> Option<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(path);
    let h = cfg.step;
    let sqrt_h = h.sqrt();
    let half_drift = (2.0 * cfg.signed_mu + 1.0) / 2.0 * h;
    let inv_h2 = 2.0 / h;
    let steps = (cfg.t_max / h).floor() as u64;
    // Distance to the barrier.
    let mut a = cfg.x - 1.0;
    for k in 0..steps {
        let z: f64 = rng.sample(StandardNormal);
        // Zero drift at index −1/2 keeps the division off the dependency chain.
        let drift = if half_drift == 0.0 { 0.0 } else { half_drift / (a + 1.0) };
        let b = a + drift + sqrt_h * z;
        if b <= 0.0 {
            return Some((k as f64 + 0.5) * h);
        }
        let e = inv_h2 * a * b;
        if e < BRIDGE_CUTOFF && rng.gen::<f64>() < (-e).exp() {
            return Some((k as f64 + 0.5) * h);
        }
        a = b;
    }
    None
}

/// `sup |F_emp − F|` over the sample, comparing laws conditional on
/// `T ≤ t_max`: the empirical side is the uncensored sample, the model side
/// `F(t)/F(t_max)`. Ties are handled with the right-continuous empirical
/// distribution function. Returns 1 when `F(t_max) = 0` or the sample is
/// empty.
///
/// ```
/// use besselhit::monte_carlo::{ks_statistic, MCConfig, MCSampleSet};
/// let config = MCConfig::new(-0.5, 2.0, 1e-3, 4, 0).unwrap().with_t_max(1.0).unwrap();
/// let s = MCSampleSet { hitting_times: vec![0.125, 0.375, 0.625, 0.875], censored_count: 0, config };
/// // Uniform on [0, 1]: the empirical steps are 1/8 off at every sample.
/// assert!((ks_statistic(&s, |t| t) - 0.125).abs() < 1e-15);
/// assert_eq!(ks_statistic(&s, |_| 0.0), 1.0);
/// ```
pub fn ks_statistic(samples: &MCSampleSet, cdf: impl Fn(f64) -> f64) -> f64 {
    let ts = &samples.hitting_times;
    let m = ts.len();
    let total = cdf(samples.config.t_max);
    if m == 0 || !(total > 0.0) {
        return 1.0;
    }
    let n = m as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < m {
        let mut j = i;
        while j + 1 < m && ts[j + 1] == ts[i] {
            j += 1;
        }
        let f = cdf(ts[i]) / total;
        d = d.max((j + 1) as f64 / n - f).max(f - i as f64 / n);
        i = j + 1;
    }
    d
}

/// A distribution function tabulated on a log-spaced grid and interpolated
/// linearly in `log t`; cheap enough for the `2·10⁵` evaluations of a
/// Kolmogorov-Smirnov statistic.
#[derive(Debug, Clone)]
pub struct TabulatedCdf {
    log_t: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedCdf {
    /// Tabulates `f` at `nodes` log-spaced points of `[t_min, t_max]`, in
    /// parallel. Below `t_min` the table returns `f(t_min)·t/t_min`.
    pub fn new<F>(f: F, t_min: f64, t_max: f64, nodes: usize) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64> + Sync,
    {
        if !(t_min > 0.0 && t_max > t_min && nodes >= 2) {
            return Err(domain("need 0 < t_min < t_max and at least two nodes"));
        }
        let (l0, l1) = (t_min.ln(), t_max.ln());
        let log_t: Vec<f64> = (0..nodes)
            .map(|i| l0 + (l1 - l0) * i as f64 / (nodes - 1) as f64)
            .collect();
        let values = log_t.par_iter().map(|&l| f(l.exp())).collect::<Result<Vec<_>>>()?;
        Ok(TabulatedCdf { log_t, values })
    }

    pub fn eval(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        let l = t.ln();
        let n = self.log_t.len();
        if l <= self.log_t[0] {
            return self.values[0] * (t / self.log_t[0].exp());
        }
        if l >= self.log_t[n - 1] {
            return self.values[n - 1];
        }
        let step = self.log_t[1] - self.log_t[0];
        let i = (((l - self.log_t[0]) / step) as usize).min(n - 2);
        let w = (l - self.log_t[i]) / step;
        self.values[i] + w * (self.values[i + 1] - self.values[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_use_right_continuity() {
        let config = MCConfig::new(-0.5, 2.0, 1e-3, 2, 0).unwrap().with_t_max(1.0).unwrap();
        let s = MCSampleSet {
            hitting_times: vec![0.5, 0.5],
            censored_count: 0,
            config,
        };
        // F_emp jumps from 0 to 1 at 0.5.
        assert_eq!(ks_statistic(&s, |t| t), 0.5);
    }

    #[test]
    fn rejects_positive_index() {
        assert!(MCConfig::new(0.5, 2.0, 1e-3, 10, 0).is_err());
        assert!(MCConfig::new(-0.5, 1.0, 1e-3, 10, 0).is_err());
        assert!(MCConfig::new(-0.5, 2.0, 0.0, 10, 0).is_err());
        assert!(MCConfig::new(-0.5, 2.0, 1e-3, 0, 0).is_err());
    }

    #[test]
    fn table_interpolates() {
        let tab = TabulatedCdf::new(|t| Ok(t.ln()), 1.0, 100.0, 11).unwrap();
        assert!((tab.eval(7.0) - 7f64.ln()).abs() < 1e-12);
        assert_eq!(tab.eval(1e3), 100f64.ln());
    }
}
