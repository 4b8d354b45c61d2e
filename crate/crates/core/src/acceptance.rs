//! The acceptance suite: twelve end-to-end checks at fixed tolerances, shared
//! by the `acceptance` test target and the command-line `accept` runner.
//!
//! A check that fails for a documented reason is flagged `known_failure`;
//! callers report it but do not treat it as a regression.

use std::f64::consts::PI;
use std::time::Instant;

use libm::{erf, erfc};
use num_complex::Complex64;
use serde::Serialize;

use crate::density::{density_signed, laplace_identity, moment_identity, w_laplace, w_moment};
use crate::envelopes::scan::{
    gamma_integral_scan, largetime_halfint_error, ratio_scan_refined, s_bounds_check, smalltime_bracket_check,
    smalltime_error_slope, Grid,
};
use crate::envelopes::{asymptotic_limit_check, asymptotic_limit_target, FormulaId};
use crate::error::Result;
use crate::hyperbolic::{
    euclidean_poisson_kernel, poisson_envelope_scan, poisson_kernel, HyperPoint, PoissonKernel, SCAN_DISTANCES,
    SCAN_HEIGHTS,
};
use crate::monte_carlo::{ks_statistic, sample_hitting_times, MCConfig, TabulatedCdf};
use crate::quadrature::Tolerance;
use crate::special::gamma;
use crate::zeros::{find_zeros, residual, MAX_ORDER};
use crate::HittingTime;

#[derive(Debug, Clone, Copy, Default)]
pub struct AcceptanceOptions {
    /// Run the Monte Carlo check with a tenth of the paths and the KS
    /// thresholds scaled by √10.
    pub quick: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    /// Failed for a documented reason (see the README).
    pub known_failure: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    /// `PASS`, `FAIL` or `FAIL (known)`.
    pub fn status(&self) -> &'static str {
        match (self.passed, self.known_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        }
    }

    /// Failed and not explained.
    pub fn is_regression(&self) -> bool {
        !self.passed && !self.known_failure
    }
}

pub const TITLES: [&str; 12] = [
    "closed form at index -1/2",
    "kernel moment identities",
    "kernel Laplace transform",
    "zeros of K_mu",
    "main two-sided estimate",
    "small-time expansion",
    "large-time half-integer expansion",
    "limit along rays x = ct",
    "Monte Carlo hitting times",
    "survival probability",
    "hyperbolic Poisson kernel",
    "kernel comparators",
];

/// Runs criterion `id` (1 to 12).
pub fn run_criterion(id: usize, opts: &AcceptanceOptions) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => closed_form(),
        2 => moments(),
        3 => laplace(),
        4 => zeros(),
        5 => main_estimate(),
        6 => smalltime(),
        7 => largetime(),
        8 => rays(),
        9 => monte_carlo(opts),
        10 => survival(),
        11 => poisson(),
        12 => comparators(),
        _ => Err(crate::error::domain(format!("no criterion {id}"))),
    };
    let (passed, known_failure, detail) = match outcome {
        Ok(c) => (c.passed, !c.passed && c.known_failure, c.detail),
        Err(e) => (false, false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        known_failure,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_all(opts: &AcceptanceOptions) -> Vec<CriterionResult> {
    (1..=TITLES.len()).map(|id| run_criterion(id, opts)).collect()
}

struct Check {
    passed: bool,
    known_failure: bool,
    detail: String,
}

impl Check {
    fn new(passed: bool, detail: String) -> Self {
        Check {
            passed,
            known_failure: false,
            detail,
        }
    }
}

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn closed_form() -> Result<Check> {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for x in [1.1, 2.0, 5.0, 10.0] {
        for t in [0.1, 1.0, 10.0, 100.0] {
            let lambda: f64 = x - 1.0;
            let want = lambda * (-lambda * lambda / (2.0 * t)).exp() / (2.0 * PI * t * t * t).sqrt();
            worst = worst.max(rel(density_signed(-0.5, x, t)?.value, want));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(Check::new(
        worst < 1e-8 && secs < 5.0,
        format!("max rel err {worst:.2e} (< 1e-8), {secs:.2}s (< 5s)"),
    ))
}

const KERNEL_ORDERS: [f64; 5] = [0.0, 0.75, 1.0, 1.5, 2.5];
const KERNEL_STARTS: [f64; 3] = [1.2, 2.0, 10.0];

fn moments() -> Result<Check> {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for mu in KERNEL_ORDERS {
        for x in KERNEL_STARTS {
            // The first moment is finite only for μ > 1/2.
            let ps: &[u32] = if mu > 0.5 { &[0, 1] } else { &[0] };
            for &p in ps {
                worst = worst.max(rel(w_moment(mu, x, p)?.value, moment_identity(mu, x, p)?));
                count += 1;
            }
        }
    }
    Ok(Check::new(
        worst < 1e-6,
        format!("{count} cases, max rel err {worst:.2e} (< 1e-6)"),
    ))
}

fn laplace() -> Result<Check> {
    let mut worst: f64 = 0.0;
    for mu in KERNEL_ORDERS {
        for x in KERNEL_STARTS {
            for r in [0.5, 1.0, 2.0] {
                worst = worst.max(rel(w_laplace(mu, x, r)?.value, laplace_identity(mu, x, r)?));
            }
        }
    }
    Ok(Check::new(worst < 1e-6, format!("max rel err {worst:.2e} (< 1e-6)")))
}

fn zeros() -> Result<Check> {
    let one = find_zeros(1.5, 1e-12)?;
    let mut err = match one.zeros.as_slice() {
        [z] => (z - Complex64::new(-1.0, 0.0)).norm(),
        _ => f64::INFINITY,
    };
    let two = find_zeros(2.5, 1e-12)?;
    let h = 3f64.sqrt() / 2.0;
    for want in [Complex64::new(-1.5, h), Complex64::new(-1.5, -h)] {
        let d = two
            .zeros
            .iter()
            .map(|z| (z - want).norm())
            .fold(f64::INFINITY, f64::min);
        err = err.max(d);
    }
    if two.zeros.len() != 2 {
        err = f64::INFINITY;
    }
    let mut worst_residual: f64 = 0.0;
    let mut total = 0;
    let mut mu = 0.0;
    while mu <= MAX_ORDER + 1e-9 {
        for z in find_zeros(mu, 1e-10)?.zeros {
            worst_residual = worst_residual.max(residual(mu, z)?);
            total += 1;
        }
        mu += 0.125;
    }
    Ok(Check::new(
        err < 1e-10 && worst_residual < 1e-10,
        format!(
            "closed-form zeros within {err:.1e}; {total} zeros for mu <= 6, max |K| {worst_residual:.1e} (< 1e-10)"
        ),
    ))
}

fn main_estimate() -> Result<Check> {
    let mut passed = true;
    let mut bands = Vec::new();
    for mu in [-1.5, -1.0, -0.5, -0.3, 0.3, 0.5, 1.0, 1.5, 2.5] {
        let r = ratio_scan_refined(FormulaId::MainMu, mu, &Grid::default_for(FormulaId::MainMu))?;
        passed &= r.passes();
        bands.push(format!("{mu}:{:.2}", r.constant()));
    }
    let r = ratio_scan_refined(FormulaId::MainMu0, 0.0, &Grid::default_for(FormulaId::MainMu0))?;
    passed &= r.passes();
    bands.push(format!("0:{:.2}", r.constant()));
    Ok(Check::new(
        passed,
        format!(
            "band constants C_mu {}; all stable under refinement: {passed}",
            bands.join(" ")
        ),
    ))
}

fn smalltime() -> Result<Check> {
    let mut passed = true;
    let mut parts = Vec::new();
    for mu in [0.0, 0.3] {
        let s = smalltime_bracket_check(mu, &Grid::default_for(FormulaId::Smalltime))?;
        // (t/x)(√t ∧ t/λ) = t²/(xλ) for t ≤ 1 at x = 100.
        let slope = smalltime_error_slope(mu, 100.0, &[1e-2, 0.03, 0.1, 0.3, 1.0])?;
        let ok = s.holds() && (slope - 2.0).abs() <= 0.15;
        passed &= ok;
        parts.push(format!(
            "mu={mu}: bracket {} on {} points, slope {slope:.3} (2 +- 0.15)",
            if s.holds() { "holds" } else { "violated" },
            s.points
        ));
    }
    Ok(Check::new(passed, parts.join("; ")))
}

fn largetime() -> Result<Check> {
    let mu = 1.5;
    let mut passed = true;
    let mut parts = Vec::new();
    for x in [2.0, 10.0] {
        let t = 1e4 * x;
        let scaled = HittingTime::new(-mu, x)?.density(t)?.reduced * t.powf(mu + 1.0);
        let want = (x.powf(2.0 * mu) - 1.0) / (gamma(mu) * 2f64.powf(mu));
        let limit_err = rel(scaled, want);
        let mut decay: Vec<f64> = Vec::new();
        for t in [100.0 * x, 1e3 * x] {
            decay.push(largetime_halfint_error(mu, x, t)? / largetime_halfint_error(mu, x, 2.0 * t)?);
        }
        let ok = limit_err < 0.02 && decay.iter().all(|&d| d > 2.0 / 1.5 && d < 2.0 * 1.5);
        passed &= ok;
        parts.push(format!(
            "x={x}: limit rel err {limit_err:.1e} (< 2%), |E| halving ratios {decay:.3?}"
        ));
    }
    Ok(Check::new(passed, parts.join("; ")))
}

fn rays() -> Result<Check> {
    let mut passed = asymptotic_limit_target(0.5, 2.0)? == 2.0;
    let mut parts = Vec::new();
    for (mu, c) in [(0.5, 2.0), (1.0, 1.0), (1.5, 0.5)] {
        let ratio = asymptotic_limit_check(mu, c)?.final_ratio();
        passed &= (0.99..=1.01).contains(&ratio);
        parts.push(format!("({mu}, {c}): {ratio:.5}"));
    }
    Ok(Check::new(
        passed,
        format!("measured/target at x = 1e3 {}", parts.join(" ")),
    ))
}

fn monte_carlo(opts: &AcceptanceOptions) -> Result<Check> {
    let (n_paths, scale) = if opts.quick {
        (20_000, 10f64.sqrt())
    } else {
        (200_000, 1.0)
    };
    let (x, step, t_max, seed) = (2.0, 1e-4, 2.0, 20_240_601);
    let start = Instant::now();
    let mut passed = true;
    let mut parts = Vec::new();
    for (mu, threshold) in [(-0.5, 0.01), (0.0, 0.015), (-1.0, 0.015)] {
        let cfg = MCConfig::new(mu, x, step, n_paths, seed)?.with_t_max(t_max)?;
        let sample = sample_hitting_times(&cfg)?;
        let d = if mu == -0.5 {
            ks_statistic(&sample, |t| erfc((x - 1.0) / (2.0 * t).sqrt()))
        } else {
            let law = HittingTime::new(mu, x)?;
            let table = TabulatedCdf::new(|t| Ok(law.cdf(t)?.value), 1e-3, t_max, 600)?;
            ks_statistic(&sample, |t| table.eval(t))
        };
        passed &= d < threshold * scale;
        parts.push(format!("mu={mu}: KS {d:.5} (< {:.4})", threshold * scale));
    }
    let small = MCConfig::new(-1.0, x, 1e-3, 2_000, seed)?.with_t_max(t_max)?;
    let deterministic = sample_hitting_times(&small)? == sample_hitting_times(&small)?;
    passed &= deterministic;
    let secs = start.elapsed().as_secs_f64();
    passed &= secs < 120.0;
    Ok(Check::new(
        passed,
        format!(
            "{n_paths} paths each: {}; deterministic: {deterministic}; {secs:.0}s (< 120s) on {} threads",
            parts.join(", "),
            rayon::current_num_threads()
        ),
    ))
}

fn survival() -> Result<Check> {
    let grid = Grid::default_for(FormulaId::SurvivalMu);
    let tol = Tolerance::new(1e-10, 0.0);
    let mut worst: f64 = 0.0;
    for &x in &grid.xs {
        let h = HittingTime::new(0.5, x)?;
        for &t in &grid.ys {
            let want = erf((x - 1.0) / (2.0 * t).sqrt()) / x;
            let by_time = h.kernel().tail_by_time_quadrature(t, &tol)?.value * h.flip_factor();
            worst = worst.max(rel(by_time, want)).max(rel(h.survival(t)?.value, want));
        }
    }
    let mut passed = worst < 1e-6;
    let mut bands = Vec::new();
    for mu in [0.5, 1.0, 1.5] {
        let r = ratio_scan_refined(FormulaId::SurvivalMu, mu, &Grid::default_for(FormulaId::SurvivalMu))?;
        passed &= r.is_bounded();
        bands.push(format!("{mu}:{:.2}", r.constant()));
    }
    let r = ratio_scan_refined(FormulaId::SurvivalMu0, 0.0, &Grid::default_for(FormulaId::SurvivalMu0))?;
    passed &= r.is_bounded();
    bands.push(format!("0:{:.2}", r.constant()));
    Ok(Check::new(
        passed,
        format!(
            "index 1/2 time quadrature rel err {worst:.1e} (< 1e-6); band constants {}",
            bands.join(" ")
        ),
    ))
}

fn poisson() -> Result<Check> {
    let mut exact_err: f64 = 0.0;
    for n in 2..=4usize {
        for &y_n in &SCAN_HEIGHTS {
            let y = HyperPoint::new(vec![0.0; n - 1], y_n)?;
            for &r in &SCAN_DISTANCES {
                let mut z = vec![0.0; n - 1];
                z[0] = r;
                exact_err = exact_err.max(rel(
                    poisson_kernel(0.5, n, &y, &z)?,
                    euclidean_poisson_kernel(n, &y, &z)?,
                ));
            }
        }
    }
    let exact_ok = exact_err < 1e-6;

    // Stated target y_n^{−2μ}; the unit mass is reported alongside.
    let y_n: f64 = 2.0;
    let (mut mass_err, mut unit_err): (f64, f64) = (0.0, 0.0);
    for mu in [0.5, 1.0, 1.5] {
        let k = PoissonKernel::new(mu, 2, y_n)?;
        for n in [2, 3] {
            let m = k.with_dimension(n)?.mass()?.value;
            mass_err = mass_err.max((m - y_n.powf(-2.0 * mu)).abs());
            unit_err = unit_err.max((m - 1.0).abs());
        }
    }
    let mass_ok = mass_err < 1e-4;

    let mut scan_ok = true;
    let mut bands = Vec::new();
    for mu in [0.5, 1.0, 1.5] {
        for r in poisson_envelope_scan(mu, &[2, 3, 4], &SCAN_HEIGHTS, &SCAN_DISTANCES)? {
            scan_ok &= r.passes();
            bands.push(format!("{:.2}", r.max_ratio / r.min_ratio));
        }
    }
    Ok(Check {
        passed: exact_ok && mass_ok && scan_ok,
        // The vertical coordinate hits 1 almost surely, so the mass is 1.
        known_failure: exact_ok && scan_ok && !mass_ok && unit_err < 1e-4,
        detail: format!(
            "index 1/2 vs Euclidean rel err {exact_err:.1e} (< 1e-6); mass - y_n^(-2mu) up to {mass_err:.3} \
             (< 1e-4), mass - 1 up to {unit_err:.1e}; envelope max/min ratios {}",
            bands.join(" ")
        ),
    })
}

fn comparators() -> Result<Check> {
    let gamma_scan = gamma_integral_scan(2024, 200)?;
    let buckets: Vec<String> = gamma_scan
        .buckets
        .iter()
        .map(|b| format!("{:.2}", b.constant()))
        .collect();
    let mut passed = gamma_scan.passes();
    let mut parts = vec![format!("gamma integral per-bucket constants {}", buckets.join(" "))];
    for (formula, mu) in [
        (FormulaId::W1Bound, 1.5),
        (FormulaId::W2Comp, 1.0),
        (FormulaId::W0Comp, 0.0),
    ] {
        let r = ratio_scan_refined(formula, mu, &Grid::default_for(formula))?;
        passed &= r.passes();
        parts.push(format!("{formula}({mu}) {:.2}", r.constant()));
    }
    let mut margin = f64::INFINITY;
    for mu in [0.0, 0.3, 1.0, 2.5] {
        let s = s_bounds_check(mu, &Grid::default_for(FormulaId::SBounds))?;
        passed &= s.holds() && s.lower_margin > 0.0 && s.upper_margin > 0.0;
        margin = margin.min(s.lower_margin).min(s.upper_margin);
    }
    parts.push(format!("S sandwich strict, least log margin {margin:.1e}"));
    Ok(Check::new(passed, parts.join("; ")))
}
