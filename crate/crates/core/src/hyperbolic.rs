//! Poisson kernel of the half-space `{y_n > 1}` for hyperbolic Brownian
//! motion with drift, in the upper half-space model of `ℍⁿ`.
//!
//! The exit position is a Brownian motion in `ℝ^{n−1}` run for the hitting
//! time of 1 by the vertical coordinate, so
//!
//! ```text
//! P(y, z) = ∫₀^∞ g_t(z̃ − ỹ) q^{(−μ)}_{y_n}(t) dt,   g_t(w) = e^{−|w|²/2t}/(2πt)^{(n−1)/2}.
//! ```
//!
//! The kernel depends on `z̃ − ỹ` only through `r = |z̃ − ỹ|`.

use std::f64::consts::PI;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::density::HittingTime;
use crate::envelopes::scan::{Refinement, ScanPoint, STABILITY_SLACK};
use crate::error::{domain, Result};
use crate::quadrature::{integrate_with_breaks, QuadResult, Tolerance};
use crate::special::gamma;

/// Dimensions supported by the kernel.
pub const DIMENSIONS: std::ops::RangeInclusive<usize> = 2..=5;

/// A point `(ỹ, y_n)` of the upper half-space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperPoint {
    pub y_tilde: Vec<f64>,
    pub y_n: f64,
}

impl HyperPoint {
    pub fn new(y_tilde: Vec<f64>, y_n: f64) -> Result<Self> {
        if !(y_n > 0.0 && y_n.is_finite()) || y_tilde.iter().any(|c| !c.is_finite()) {
            return Err(domain(format!("need finite coordinates with y_n > 0, got y_n = {y_n}")));
        }
        Ok(HyperPoint { y_tilde, y_n })
    }

    /// The boundary point `(z̃, 1)` of the half-space `{y_n > 1}`.
    pub fn on_boundary(z_tilde: Vec<f64>) -> Result<Self> {
        Self::new(z_tilde, 1.0)
    }

    pub fn dim(&self) -> usize {
        self.y_tilde.len() + 1
    }

    fn horizontal_distance(&self, z_tilde: &[f64]) -> Result<f64> {
        if z_tilde.len() != self.y_tilde.len() {
            return Err(domain(format!(
                "dimension mismatch: {} horizontal coordinates against {}",
                z_tilde.len(),
                self.y_tilde.len()
            )));
        }
        Ok(self
            .y_tilde
            .iter()
            .zip(z_tilde)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt())
    }
}

/// Hyperbolic distance, from `cosh d = 1 + |y − z|²/(2 y_n z_n)` in the form
/// `d = 2 asinh(|y − z|/(2√(y_n z_n)))`, accurate for nearby points.
///
/// ```
/// use besselhit::hyperbolic::{hyperbolic_distance, HyperPoint};
/// let a = HyperPoint::new(vec![0.0], 1.0).unwrap();
/// let b = HyperPoint::new(vec![0.0], std::f64::consts::E).unwrap();
/// assert!((hyperbolic_distance(&a, &b).unwrap() - 1.0).abs() < 1e-15);
/// ```
pub fn hyperbolic_distance(y: &HyperPoint, z: &HyperPoint) -> Result<f64> {
    let r = y.horizontal_distance(&z.y_tilde)?;
    let dn = y.y_n - z.y_n;
    let chord = r.hypot(dn);
    Ok(2.0 * (chord / (2.0 * (y.y_n * z.y_n).sqrt())).asinh())
}

/// The kernel for fixed `μ`, `n` and height `y_n`, as a function of the
/// horizontal distance `r`.
#[derive(Debug, Clone)]
pub struct PoissonKernel {
    mu: f64,
    n: usize,
    y_n: f64,
    density: Arc<ReducedDensity>,
}

/// `q^{(−μ)}_{y_n}(t) e^{λ²/2t}`, evaluated directly for half-integer orders
/// (closed forms) and otherwise read from a table built once.
#[derive(Debug)]
enum ReducedDensity {
    Direct(HittingTime),
    Table(LogTable),
}

impl ReducedDensity {
    fn eval(&self, t: f64) -> Result<f64> {
        match self {
            ReducedDensity::Direct(h) => Ok(h.density(t)?.reduced),
            ReducedDensity::Table(tab) => Ok(tab.eval(t)),
        }
    }
}

/// `log q` against `log t` on a uniform grid, with four-point Lagrange
/// interpolation (relative error about 1e−8) and power-law extrapolation:
/// `t^{−3/2}` below the grid, `t^{−μ−1}` above it.
#[derive(Debug)]
struct LogTable {
    log_t0: f64,
    step: f64,
    log_q: Vec<f64>,
    tail_power: f64,
}

/// Table nodes per decade of `t`.
const TABLE_DENSITY: f64 = 48.0;

impl LogTable {
    fn build(h: &HittingTime, mu: f64) -> Result<Self> {
        let lambda = h.x() - 1.0;
        // Below λ²/1500 the factor e^{−ρ²/2t} ≤ e^{−750} removes everything.
        let log_t0 = (lambda * lambda / 1500.0).ln();
        let log_t1 = (1e8 * h.x() * h.x()).ln();
        let step = std::f64::consts::LN_10 / TABLE_DENSITY;
        let nodes = ((log_t1 - log_t0) / step).ceil() as usize + 1;
        let log_q = (0..nodes)
            .into_par_iter()
            .map(|i| Ok(h.density((log_t0 + i as f64 * step).exp())?.reduced.ln()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LogTable {
            log_t0,
            step,
            log_q,
            tail_power: mu + 1.0,
        })
    }

    fn eval(&self, t: f64) -> f64 {
        let n = self.log_q.len();
        let s = (t.ln() - self.log_t0) / self.step;
        if s <= 0.0 {
            return (self.log_q[0] - 1.5 * s * self.step).exp();
        }
        let last = (n - 1) as f64;
        if s >= last {
            return (self.log_q[n - 1] - self.tail_power * (s - last) * self.step).exp();
        }
        // Stencil i−1..=i+2 around the cell [i, i+1], clamped at the ends.
        let i = (s.floor() as usize).clamp(1, n - 3);
        let u = s - i as f64;
        let [a, b, c, d] = [self.log_q[i - 1], self.log_q[i], self.log_q[i + 1], self.log_q[i + 2]];
        let v = -u * (u - 1.0) * (u - 2.0) / 6.0 * a + (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0 * b
            - (u + 1.0) * u * (u - 2.0) / 2.0 * c
            + (u + 1.0) * u * (u - 1.0) / 6.0 * d;
        v.exp()
    }
}

impl PoissonKernel {
    pub fn new(mu: f64, n: usize, y_n: f64) -> Result<Self> {
        if !(mu > 0.0 && mu <= 6.0) {
            return Err(domain(format!("the drift parameter must lie in (0, 6], got {mu}")));
        }
        if !DIMENSIONS.contains(&n) {
            return Err(domain(format!("dimension must lie in {DIMENSIONS:?}, got {n}")));
        }
        if !(y_n > 1.0 && y_n.is_finite()) {
            return Err(domain(format!("the source must lie in y_n > 1, got {y_n}")));
        }
        let h = HittingTime::new(-mu, y_n)?;
        let density = if h.index().half_integer {
            ReducedDensity::Direct(h)
        } else {
            ReducedDensity::Table(LogTable::build(&h, mu)?)
        };
        Ok(PoissonKernel {
            mu,
            n,
            y_n,
            density: Arc::new(density),
        })
    }

    /// The same source and drift in another dimension, sharing the density.
    pub fn with_dimension(&self, n: usize) -> Result<Self> {
        if !DIMENSIONS.contains(&n) {
            return Err(domain(format!("dimension must lie in {DIMENSIONS:?}, got {n}")));
        }
        Ok(PoissonKernel { n, ..self.clone() })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> f64 {
        self.y_n
    }

    /// `P` at horizontal distance `r` by quadrature of the subordination
    /// integral.
    pub fn at_distance(&self, r: f64) -> Result<QuadResult> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(domain(format!("distance must be finite and non-negative, got {r}")));
        }
        let lambda = self.y_n - 1.0;
        let rho2 = r * r + lambda * lambda;
        let half_dim = (self.n as f64 - 1.0) / 2.0;
        let mut failure = None;
        let integrand = |t: f64| {
            if t <= 0.0 {
                return 0.0;
            }
            match self.density.eval(t) {
                // Both Gaussian factors combined: e^{−(r² + λ²)/2t}.
                Ok(q) => (2.0 * PI * t).powf(-half_dim) * (-rho2 / (2.0 * t)).exp() * q,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        };
        // The integrand peaks near ρ²/(n + 2) and changes regime at y_n and ρ².
        let peak = rho2 / (self.n as f64 + 2.0);
        let mut breaks = vec![0.0, 0.1 * peak, peak, 10.0 * peak, self.y_n, rho2];
        breaks.sort_by(f64::total_cmp);
        breaks.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
        breaks.push(f64::INFINITY);
        // The envelope is comparable to P, so the floor is relative in effect.
        let tol = Tolerance::new(1e-10, 1e-13 * self.envelope(r));
        let r = integrate_with_breaks(integrand, &breaks, &tol);
        if let Some(e) = failure {
            return Err(e);
        }
        r
    }

    /// `∫ P dz̃` over `ℝ^{n−1}` as a radial integral. Equals 1: the vertical
    /// coordinate reaches 1 almost surely.
    pub fn mass(&self) -> Result<QuadResult> {
        let sphere = 2.0 * PI.powf((self.n as f64 - 1.0) / 2.0) / gamma((self.n as f64 - 1.0) / 2.0);
        let lambda = self.y_n - 1.0;
        let mut failure = None;
        let dim = self.n as i32;
        let integrand = |r: f64| match self.at_distance(r) {
            Ok(p) => sphere * p.value * r.powi(dim - 2),
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        };
        let scale = lambda.max(self.y_n.sqrt());
        let mut breaks = vec![0.0, 0.1 * lambda, lambda, scale, 10.0 * scale];
        breaks.dedup_by(|a, b| *a <= *b);
        breaks.push(f64::INFINITY);
        let res = integrate_with_breaks(integrand, &breaks, &Tolerance::new(1e-8, 0.0));
        if let Some(e) = failure {
            return Err(e);
        }
        res
    }

    /// `λ/|z − y|ⁿ (y_n/cosh d(y, z))^{μ−1/2}` at horizontal distance `r`.
    pub fn envelope(&self, r: f64) -> f64 {
        let lambda = self.y_n - 1.0;
        let rho2 = r * r + lambda * lambda;
        let cosh_d = 1.0 + rho2 / (2.0 * self.y_n);
        lambda / rho2.powf(self.n as f64 / 2.0) * (self.y_n / cosh_d).powf(self.mu - 0.5)
    }
}

/// `P^{(μ)}(y, (z̃, 1))`.
///
/// ```
/// use besselhit::hyperbolic::{euclidean_poisson_kernel, poisson_kernel, HyperPoint};
/// let y = HyperPoint::new(vec![0.0], 2.0).unwrap();
/// let p = poisson_kernel(0.5, 2, &y, &[0.7]).unwrap();
/// let e = euclidean_poisson_kernel(2, &y, &[0.7]).unwrap();
/// assert!((p / e - 1.0).abs() < 1e-8);
/// ```
pub fn poisson_kernel(mu: f64, n: usize, y: &HyperPoint, z_tilde: &[f64]) -> Result<f64> {
    check_dim(n, y)?;
    let r = y.horizontal_distance(z_tilde)?;
    Ok(PoissonKernel::new(mu, n, y.y_n)?.at_distance(r)?.value)
}

/// The comparison function `(y_n − 1)/|z − y|ⁿ (y_n/cosh d(y, z))^{μ−1/2}`.
pub fn poisson_envelope(mu: f64, n: usize, y: &HyperPoint, z_tilde: &[f64]) -> Result<f64> {
    check_dim(n, y)?;
    let r = y.horizontal_distance(z_tilde)?;
    Ok(PoissonKernel::new(mu, n, y.y_n)?.envelope(r))
}

/// `Γ(n/2)/π^{n/2} · (y_n − 1)/|z − y|ⁿ`, the Poisson kernel of the
/// Euclidean half-space `{y_n > 1}`; the hyperbolic kernel at `μ = 1/2`.
pub fn euclidean_poisson_kernel(n: usize, y: &HyperPoint, z_tilde: &[f64]) -> Result<f64> {
    check_dim(n, y)?;
    if !(y.y_n > 1.0) {
        return Err(domain(format!("the source must lie in y_n > 1, got {}", y.y_n)));
    }
    let r = y.horizontal_distance(z_tilde)?;
    let lambda = y.y_n - 1.0;
    let nf = n as f64;
    Ok(gamma(nf / 2.0) / PI.powf(nf / 2.0) * lambda / (r * r + lambda * lambda).powf(nf / 2.0))
}

fn check_dim(n: usize, y: &HyperPoint) -> Result<()> {
    if y.dim() != n {
        return Err(domain(format!("point has dimension {}, expected {n}", y.dim())));
    }
    Ok(())
}

/// Kernel over envelope on a grid of heights and horizontal distances.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoissonScanReport {
    pub mu: f64,
    pub n: usize,
    /// `(y_n, r)` and the ratio.
    pub points: Vec<ScanPoint>,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub argmin: Vec<f64>,
    pub argmax: Vec<f64>,
    pub refinement: Option<Refinement>,
}

impl PoissonScanReport {
    pub fn is_bounded(&self) -> bool {
        !self.points.is_empty() && self.min_ratio > 0.0 && self.max_ratio.is_finite()
    }

    pub fn passes(&self) -> bool {
        self.is_bounded() && self.refinement.as_ref().map_or(true, |r| r.stable)
    }
}

/// Default heights for the envelope scan.
pub const SCAN_HEIGHTS: [f64; 3] = [1.1, 2.0, 10.0];
/// Default horizontal distances: `10^k`, `k = −2, …, 3`.
pub const SCAN_DISTANCES: [f64; 6] = [1e-2, 1e-1, 1.0, 10.0, 1e2, 1e3];

fn scan_points(kernels: &[PoissonKernel], distances: &[f64]) -> Result<Vec<ScanPoint>> {
    let jobs: Vec<(&PoissonKernel, f64)> = kernels
        .iter()
        .flat_map(|k| distances.iter().map(move |&r| (k, r)))
        .collect();
    jobs.par_iter()
        .map(|&(k, r)| {
            Ok(ScanPoint {
                coords: vec![k.height(), r],
                ratio: k.at_distance(r)?.value / k.envelope(r),
            })
        })
        .collect()
}

fn extrema(points: &[ScanPoint]) -> (f64, f64, Vec<f64>, Vec<f64>) {
    let lo = points.iter().min_by(|a, b| a.ratio.total_cmp(&b.ratio));
    let hi = points.iter().max_by(|a, b| a.ratio.total_cmp(&b.ratio));
    match (lo, hi) {
        (Some(lo), Some(hi)) => (lo.ratio, hi.ratio, lo.coords.clone(), hi.coords.clone()),
        _ => (f64::NAN, f64::NAN, Vec::new(), Vec::new()),
    }
}

fn refine(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.extend(v.windows(2).map(|w| (w[0] * w[1]).sqrt()));
    out.sort_by(f64::total_cmp);
    out
}

/// Ratio scans of kernel over envelope, one report per dimension, each
/// repeated with geometric midpoints inserted on both axes to check the
/// stability of the extrema.
///
/// ```
/// use besselhit::hyperbolic::poisson_envelope_scan;
/// let reports = poisson_envelope_scan(0.5, &[2, 3], &[2.0, 4.0], &[0.1, 1.0, 10.0]).unwrap();
/// // At μ = 1/2 the ratio is the constant Γ(n/2)/π^{n/2}, here 1/π.
/// assert!((reports[0].max_ratio * std::f64::consts::PI - 1.0).abs() < 1e-8);
/// assert!(reports.iter().all(|r| r.passes()));
/// ```
pub fn poisson_envelope_scan(
    mu: f64,
    dims: &[usize],
    heights: &[f64],
    distances: &[f64],
) -> Result<Vec<PoissonScanReport>> {
    let base = |hs: &[f64]| {
        hs.iter()
            .map(|&y| PoissonKernel::new(mu, 2, y))
            .collect::<Result<Vec<_>>>()
    };
    let coarse = base(heights)?;
    let fine = base(&refine(heights))?;
    let fine_distances = refine(distances);
    dims.iter()
        .map(|&n| {
            let at_n = |ks: &[PoissonKernel]| ks.iter().map(|k| k.with_dimension(n)).collect::<Result<Vec<_>>>();
            let points = scan_points(&at_n(&coarse)?, distances)?;
            let (min_ratio, max_ratio, argmin, argmax) = extrema(&points);
            let fine_points = scan_points(&at_n(&fine)?, &fine_distances)?;
            let (fmin, fmax, _, _) = extrema(&fine_points);
            let stable = fmax / max_ratio <= 1.0 + STABILITY_SLACK && min_ratio / fmin <= 1.0 + STABILITY_SLACK;
            Ok(PoissonScanReport {
                mu,
                n,
                points,
                min_ratio,
                max_ratio,
                argmin,
                argmax,
                refinement: Some(Refinement {
                    points: fine_points.len(),
                    min_ratio: fmin,
                    max_ratio: fmax,
                    stable,
                }),
            })
        })
        .collect()
}
