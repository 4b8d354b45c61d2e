//! Ratio scans: numeric value over comparison function on a grid, with the
//! extrema, their location and whether they survive a finer grid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::density::Kernel;
use crate::index::BesselIndex;

/// Relative change of an extremum under refinement still counted as stable.
pub const STABILITY_SLACK: f64 = 0.2;

/// A tensor grid of start points and a second variable (`t`, `v` or `u`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub axes: [&'static str; 2],
}

const DEFAULT_XS: [f64; 8] = [1.01, 1.1, 1.5, 2.0, 5.0, 10.0, 1e2, 1e3];

impl Grid {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>, axes: [&'static str; 2]) -> Result<Grid> {
        if xs.is_empty() || ys.is_empty() {
            return Err(domain("grid axes must be non-empty"));
        }
        if xs.iter().chain(&ys).any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(domain("grid values must be finite and non-negative"));
        }
        let mut g = Grid { xs, ys, axes };
        g.xs.sort_by(f64::total_cmp);
        g.xs.dedup();
        g.ys.sort_by(f64::total_cmp);
        g.ys.dedup();
        Ok(g)
    }

    /// The default grid for `formula`.
    pub fn default_for(formula: FormulaId) -> Grid {
        let (ys, second): (&[f64], _) = match formula {
            FormulaId::W1Bound | FormulaId::W2Comp | FormulaId::W0Comp => (&[1e-2, 1e-1, 1.0, 10.0, 1e2, 1e3], "v"),
            FormulaId::SBounds => (&[1e-3, 1e-2, 1e-1, 1.0, 10.0, 1e2], "u"),
            _ => (&[1e-2, 1e-1, 1.0, 10.0, 1e2, 1e4], "t"),
        };
        let first = if formula == FormulaId::BallN { "r" } else { "x" };
        Grid {
            xs: DEFAULT_XS.to_vec(),
            ys: ys.to_vec(),
            axes: [first, second],
        }
    }

    /// Inserts the geometric midpoint between neighbours on both axes. A
    /// zero endpoint gets the arithmetic midpoint instead.
    pub fn refined(&self) -> Grid {
        fn refine(v: &[f64]) -> Vec<f64> {
            let mut out = Vec::with_capacity(2 * v.len());
            for w in v.windows(2) {
                out.push(w[0]);
                out.push(if w[0] > 0.0 { (w[0] * w[1]).sqrt() } else { 0.5 * w[1] });
            }
            out.extend(v.last());
            out
        }
        Grid {
            xs: refine(&self.xs),
            ys: refine(&self.ys),
            axes: self.axes,
        }
    }

    pub fn len(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One evaluated point: its coordinates along the report's axes and the ratio.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanPoint {
    pub coords: Vec<f64>,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanFailure {
    pub coords: Vec<f64>,
    pub message: String,
}

/// Extrema after refining the grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Refinement {
    pub points: usize,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioScanReport {
    pub formula_id: FormulaId,
    /// The index, dimension or exponent the scan was run for.
    pub param: f64,
    pub axes: Vec<&'static str>,
    pub points: Vec<ScanPoint>,
    pub failures: Vec<ScanFailure>,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub argmin: Vec<f64>,
    pub argmax: Vec<f64>,
    /// Only an upper bound is claimed; the ratio is `|error|/shape`.
    pub one_sided: bool,
    pub refinement: Option<Refinement>,
}

impl RatioScanReport {
    fn from_points(
        formula_id: FormulaId,
        param: f64,
        axes: Vec<&'static str>,
        points: Vec<ScanPoint>,
        failures: Vec<ScanFailure>,
        one_sided: bool,
    ) -> Self {
        let mut lo = (f64::INFINITY, Vec::new());
        let mut hi = (f64::NEG_INFINITY, Vec::new());
        for p in &points {
            if p.ratio < lo.0 || p.ratio.is_nan() {
                lo = (p.ratio, p.coords.clone());
            }
            if p.ratio > hi.0 || p.ratio.is_nan() {
                hi = (p.ratio, p.coords.clone());
            }
        }
        RatioScanReport {
            formula_id,
            param,
            axes,
            points,
            failures,
            min_ratio: lo.0,
            max_ratio: hi.0,
            argmin: lo.1,
            argmax: hi.1,
            one_sided,
            refinement: None,
        }
    }

    /// Every point evaluated to a finite ratio, positive unless one-sided.
    pub fn is_bounded(&self) -> bool {
        !self.points.is_empty()
            && self.failures.is_empty()
            && self.max_ratio.is_finite()
            && if self.one_sided {
                self.min_ratio >= 0.0
            } else {
                self.min_ratio > 0.0
            }
    }

    /// The smallest `c` with `1/c ≤ ratio ≤ c` (or `ratio ≤ c` if one-sided).
    pub fn constant(&self) -> f64 {
        if self.one_sided {
            self.max_ratio
        } else {
            self.max_ratio.max(1.0 / self.min_ratio)
        }
    }

    /// `[min, max]` of the ratio.
    pub fn band(&self) -> EnvelopeBand {
        EnvelopeBand {
            lower: self.min_ratio,
            upper: self.max_ratio,
            formula_id: self.formula_id,
        }
    }

    /// Bounded, and if refined, stable.
    pub fn passes(&self) -> bool {
        self.is_bounded() && self.refinement.as_ref().map_or(true, |r| r.stable)
    }

    fn attach_refinement(&mut self, fine: &RatioScanReport) {
        let grew = |a: f64, b: f64| {
            if a == 0.0 {
                b == 0.0
            } else {
                b / a <= 1.0 + STABILITY_SLACK
            }
        };
        let max_ok = grew(self.max_ratio, fine.max_ratio);
        let min_ok = self.one_sided || grew(1.0 / self.min_ratio, 1.0 / fine.min_ratio);
        self.refinement = Some(Refinement {
            points: fine.points.len(),
            min_ratio: fine.min_ratio,
            max_ratio: fine.max_ratio,
            stable: max_ok && min_ok && fine.failures.is_empty(),
        });
    }
}

/// Per-start-point state shared by all second-axis values.
enum Context {
    Hitting(HittingTime),
    Kernel(Kernel, Option<f64>),
    None,
}

fn check_param(formula: FormulaId, param: f64) -> Result<()> {
    let ok = match formula {
        FormulaId::MainMu => param != 0.0 && param.abs() <= 6.0,
        FormulaId::MainMu0 | FormulaId::Mu0Largetime | FormulaId::SurvivalMu0 | FormulaId::W0Comp => param == 0.0,
        FormulaId::Smalltime | FormulaId::SBounds => (0.0..=6.0).contains(&param),
        FormulaId::LargetimeHalfint => half_integer_degree(param).is_some() && param <= 6.0,
        FormulaId::LargetimeGen => param > 0.0 && param <= 6.0 && half_integer_degree(param).is_none(),
        FormulaId::SurvivalMu => param > 0.0 && param <= 6.0,
        FormulaId::BallN => (2.0..=14.0).contains(&param) && param.fract() == 0.0,
        FormulaId::W1Bound => (0.0..=6.0).contains(&param) && BesselIndex::from_order(param)?.k_mu > 0,
        FormulaId::W2Comp => param > 0.0 && param <= 6.0 && half_integer_degree(param).is_none(),
        FormulaId::GammaInt => return Err(domain("GAMMA_INT is scanned at random points; use gamma_integral_scan")),
    };
    if !ok {
        return Err(domain(format!("parameter {param} is outside the domain of {formula}")));
    }
    Ok(())
}

fn in_domain(formula: FormulaId, x: f64, y: f64) -> bool {
    if x <= 1.0 {
        return false;
    }
    match formula {
        FormulaId::LargetimeHalfint => y > x,
        // The lower correction degenerates as t ↓ x; the band is asserted from 10x.
        FormulaId::LargetimeGen => y >= 10.0 * x,
        FormulaId::Mu0Largetime => y > 2.0 * x,
        FormulaId::W1Bound | FormulaId::W2Comp | FormulaId::W0Comp => y >= 0.0,
        _ => y > 0.0,
    }
}

fn context(formula: FormulaId, param: f64, x: f64) -> Result<Context> {
    Ok(match formula {
        FormulaId::MainMu | FormulaId::SurvivalMu => Context::Hitting(HittingTime::new(param, x)?),
        FormulaId::MainMu0 | FormulaId::Mu0Largetime | FormulaId::SurvivalMu0 => {
            Context::Hitting(HittingTime::new(0.0, x)?)
        }
        FormulaId::Smalltime | FormulaId::LargetimeHalfint | FormulaId::LargetimeGen => {
            Context::Hitting(HittingTime::new(-param, x)?)
        }
        FormulaId::BallN => Context::Hitting(HittingTime::new((param - 2.0) / 2.0, x)?),
        FormulaId::W1Bound | FormulaId::W2Comp | FormulaId::W0Comp => {
            let k = Kernel::new(&BesselIndex::from_order(param)?, x)?;
            let theta = k.decay_rate();
            Context::Kernel(k, theta)
        }
        FormulaId::SBounds | FormulaId::GammaInt => Context::None,
    })
}

fn ratio_at(formula: FormulaId, param: f64, ctx: &Context, x: f64, y: f64) -> Result<f64> {
    let hitting = || match ctx {
        Context::Hitting(h) => Ok(h),
        _ => Err(domain("internal: missing hitting-time context")),
    };
    let kernel = || match ctx {
        Context::Kernel(k, theta) => Ok((k, *theta)),
        _ => Err(domain("internal: missing kernel context")),
    };
    let t = y;
    Ok(match formula {
        FormulaId::MainMu => hitting()?.density(t)?.reduced / main_envelope_reduced(param, x, t)?,
        FormulaId::MainMu0 => hitting()?.density(t)?.reduced / mu0_envelope_reduced(x, t)?,
        FormulaId::Mu0Largetime => hitting()?.density(t)?.reduced / mu0_largetime_reduced(x, t)?,
        FormulaId::LargetimeGen => hitting()?.density(t)?.reduced / largetime_general_shape_reduced(param, x, t)?,
        FormulaId::BallN => hitting()?.density(t)?.reduced / ball_envelope_reduced(param as u32, x, t)?,
        FormulaId::Smalltime => hitting()?.kernel().smalltime_remainder(t)?.abs() / smalltime_error_shape(x, t),
        FormulaId::LargetimeHalfint => {
            let q = hitting()?.density(t)?.reduced;
            (q / largetime_halfint_reduced(param, x, t)? - 1.0).abs() / (x / t)
        }
        FormulaId::SurvivalMu | FormulaId::SurvivalMu0 => {
            hitting()?.survival(t)?.value / survival_envelope(param, x, t)?
        }
        FormulaId::W1Bound => {
            let (k, theta) = kernel()?;
            let theta = theta.ok_or_else(|| domain("no zeros"))?;
            k.w1_scaled(y, theta).abs() / x.powf(param - 1.5)
        }
        FormulaId::W2Comp => kernel()?.0.w2(y) / w2_comparator(param, x, y),
        FormulaId::W0Comp => -kernel()?.0.w(y) / w0_comparator(x, y),
        FormulaId::SBounds => {
            let ie_xu = bessel_ik_scaled(param, x * y)?.0;
            let ke_u = bessel_k_scaled(param, y)?;
            s_mu_scaled(param, x, y)? / (ie_xu * ke_u)
        }
        FormulaId::GammaInt => return Err(domain("use gamma_integral_scan")),
    })
}

fn is_one_sided(formula: FormulaId) -> bool {
    matches!(
        formula,
        FormulaId::Smalltime | FormulaId::LargetimeHalfint | FormulaId::W1Bound
    )
}

/// Evaluates `ratio(x, y)` in parallel over the in-domain grid points.
fn evaluate<F>(grid: &Grid, keep: impl Fn(f64, f64) -> bool + Sync, f: F) -> (Vec<ScanPoint>, Vec<ScanFailure>)
where
    F: Fn(f64, &[f64]) -> Vec<(f64, Result<f64>)> + Sync,
{
    let rows: Vec<Vec<(Vec<f64>, Result<f64>)>> = grid
        .xs
        .par_iter()
        .map(|&x| {
            let ys: Vec<f64> = grid.ys.iter().copied().filter(|&y| keep(x, y)).collect();
            if ys.is_empty() {
                return Vec::new();
            }
            f(x, &ys).into_iter().map(|(y, r)| (vec![x, y], r)).collect()
        })
        .collect();
    let mut points = Vec::new();
    let mut failures = Vec::new();
    for (coords, r) in rows.into_iter().flatten() {
        match r {
            Ok(ratio) if ratio.is_finite() => points.push(ScanPoint { coords, ratio }),
            Ok(ratio) => failures.push(ScanFailure {
                coords,
                message: format!("ratio is {ratio}"),
            }),
            Err(e) => failures.push(ScanFailure {
                coords,
                message: e.to_string(),
            }),
        }
    }
    (points, failures)
}

/// Ratio of numeric value to the comparison function of `formula` over
/// `grid`, restricted to the formula's domain.
///
/// `param` is the signed index for `MAIN_MU` and `SURVIVAL_MU`, the order
/// `μ ≥ 0` of the kernel or of the index `−μ` for the time expansions and
/// kernel comparators, the dimension for `BALL_N`, and 0 for the index-0
/// formulas.
///
/// ```
/// use besselhit::envelopes::{scan::{ratio_scan, Grid}, FormulaId};
/// let grid = Grid::new(vec![1.5, 4.0], vec![0.1, 1.0, 10.0], ["x", "t"]).unwrap();
/// let r = ratio_scan(FormulaId::MainMu, -0.5, &grid).unwrap();
/// assert!(r.is_bounded() && r.max_ratio / r.min_ratio < 10.0);
/// ```
pub fn ratio_scan(formula: FormulaId, param: f64, grid: &Grid) -> Result<RatioScanReport> {
    check_param(formula, param)?;
    let (points, failures) = evaluate(
        grid,
        |x, y| in_domain(formula, x, y),
        |x, ys| match context(formula, param, x) {
            Ok(ctx) => ys.iter().map(|&y| (y, ratio_at(formula, param, &ctx, x, y))).collect(),
            Err(e) => ys.iter().map(|&y| (y, Err(e.clone()))).collect(),
        },
    );
    Ok(RatioScanReport::from_points(
        formula,
        param,
        grid.axes.to_vec(),
        points,
        failures,
        is_one_sided(formula),
    ))
}

/// [`ratio_scan`] on `grid` and on `grid.refined()`, with the stability of
/// the extrema recorded in `refinement`.
pub fn ratio_scan_refined(formula: FormulaId, param: f64, grid: &Grid) -> Result<RatioScanReport> {
    let mut base = ratio_scan(formula, param, grid)?;
    let fine = ratio_scan(formula, param, &grid.refined())?;
    base.attach_refinement(&fine);
    Ok(base)
}

/// Ratio of the single-formula index-0 estimate to the piecewise one; the
/// two describe the same function up to constants.
pub fn mu0_forms_comparison(grid: &Grid) -> RatioScanReport {
    let (points, failures) = evaluate(
        grid,
        |x, t| x > 1.0 && t > 0.0,
        |x, ts| {
            ts.iter()
                .map(|&t| {
                    let r = mu0_envelope_reduced(x, t).and_then(|a| Ok(a / mu0_envelope_piecewise_reduced(x, t)?));
                    (t, r)
                })
                .collect()
        },
    );
    RatioScanReport::from_points(FormulaId::MainMu0, 0.0, grid.axes.to_vec(), points, failures, false)
}

/// The `ν` ranges reported separately by [`gamma_integral_scan`].
pub const GAMMA_BUCKETS: [(f64, f64); 3] = [(0.0, 1.0), (1.0, 2.0), (2.0, 3.0)];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaScanReport {
    pub seed: u64,
    pub overall: RatioScanReport,
    /// One report per entry of [`GAMMA_BUCKETS`].
    pub buckets: Vec<RatioScanReport>,
}

impl GammaScanReport {
    /// Bounded overall and in every bucket. The refinement is reported but
    /// not required: extrema of a random scan keep creeping outwards.
    pub fn passes(&self) -> bool {
        self.overall.is_bounded() && self.buckets.iter().all(RatioScanReport::is_bounded)
    }
}

/// Exact over estimated `∫_a^b u^ν e^{−du} du` at `n` random points with
/// `ν ∈ [0, 3]`, `a ∈ [0, 5]`, `b ∈ (a, a + 10]`, `d ∈ [0.1, 10]`.
///
/// Point `i` draws from its own stream of a ChaCha8 generator seeded with
/// `seed`, so the first `n` points of a `2n`-point scan repeat the `n`-point
/// scan; the refinement doubles `n`.
pub fn gamma_integral_scan(seed: u64, n: usize) -> Result<GammaScanReport> {
    if n == 0 {
        return Err(domain("need at least one sample"));
    }
    let base = gamma_points(seed, n);
    let fine = gamma_points(seed, 2 * n);
    let axes = vec!["nu", "a", "b", "d"];
    let report = |pts: &[(ScanPoint, Option<ScanFailure>)], keep: &dyn Fn(f64) -> bool| {
        let points = pts
            .iter()
            .filter(|(p, f)| f.is_none() && keep(p.coords[0]))
            .map(|(p, _)| p.clone())
            .collect();
        let failures = pts
            .iter()
            .filter_map(|(_, f)| f.clone())
            .filter(|f| keep(f.coords[0]))
            .collect();
        RatioScanReport::from_points(FormulaId::GammaInt, f64::NAN, axes.clone(), points, failures, false)
    };
    let mut overall = report(&base, &|_| true);
    overall.attach_refinement(&report(&fine, &|_| true));
    let buckets = GAMMA_BUCKETS
        .iter()
        .map(|&(lo, hi)| {
            let keep = move |nu: f64| nu >= lo && (nu < hi || (hi == 3.0 && nu <= hi));
            let mut r = report(&base, &keep);
            r.param = lo;
            r.attach_refinement(&report(&fine, &keep));
            r
        })
        .collect();
    Ok(GammaScanReport { seed, overall, buckets })
}

fn gamma_points(seed: u64, n: usize) -> Vec<(ScanPoint, Option<ScanFailure>)> {
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let nu = rng.gen_range(0.0..=3.0);
            let a = rng.gen_range(0.0..=5.0);
            // (a, a + 10]: reflect the half-open draw.
            let b = a + 10.0 - rng.gen_range(0.0..10.0);
            let d = rng.gen_range(0.1..=10.0);
            let coords = vec![nu, a, b, d];
            let r = gamma_integral(nu, a, b, d).and_then(|exact| Ok(exact / gamma_integral_envelope(nu, a, b, d)?));
            match r {
                Ok(ratio) => (ScanPoint { coords, ratio }, None),
                Err(e) => (
                    ScanPoint {
                        coords: coords.clone(),
                        ratio: f64::NAN,
                    },
                    Some(ScanFailure {
                        coords,
                        message: e.to_string(),
                    }),
                ),
            }
        })
        .collect()
}

/// Result of checking `lower ≤ value ≤ upper` pointwise, in logarithms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub formula_id: FormulaId,
    pub param: f64,
    pub points: usize,
    /// `min log(value/lower)`.
    pub lower_margin: f64,
    /// `min log(upper/value)`.
    pub upper_margin: f64,
    pub worst: Vec<f64>,
    pub failures: Vec<ScanFailure>,
}

/// Relative slack allowed for rounding in the sandwich checks.
pub const SANDWICH_SLACK: f64 = 1e-10;

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.points > 0
            && self.failures.is_empty()
            && self.lower_margin >= -SANDWICH_SLACK
            && self.upper_margin >= -SANDWICH_SLACK
    }

    fn collect(
        formula_id: FormulaId,
        param: f64,
        grid: &Grid,
        f: impl Fn(f64, f64) -> Result<[f64; 3]> + Sync,
    ) -> Self {
        let (points, failures) = evaluate(
            grid,
            |x, y| x > 1.0 && y > 0.0,
            |x, ys| {
                ys.iter()
                    .map(|&y| {
                        // Encode the two margins in one ratio slot: keep the worse.
                        let r = f(x, y).map(|[lo, v, hi]| (v - lo).min(hi - v));
                        (y, r)
                    })
                    .collect()
            },
        );
        // Recompute both margins at the points, serially: cheap next to `f`.
        let mut lower_margin = f64::INFINITY;
        let mut upper_margin = f64::INFINITY;
        let mut worst = Vec::new();
        let mut worst_margin = f64::INFINITY;
        for p in &points {
            if let Ok([lo, v, hi]) = f(p.coords[0], p.coords[1]) {
                lower_margin = lower_margin.min(v - lo);
                upper_margin = upper_margin.min(hi - v);
            }
            if p.ratio < worst_margin {
                worst_margin = p.ratio;
                worst = p.coords.clone();
            }
        }
        SandwichReport {
            formula_id,
            param,
            points: points.len(),
            lower_margin,
            upper_margin,
            worst,
            failures,
        }
    }
}

/// `x^{μ−1/2} q_Lévy ≤ q^{(−μ)} ≤ x^{μ−1/2} q_Lévy(1 + (1 − 4μ²)t/(8x))` for
/// `0 ≤ μ < 1/2` on a `(x, t)` grid.
pub fn smalltime_bracket_check(mu: f64, grid: &Grid) -> Result<SandwichReport> {
    if !(0.0..0.5).contains(&mu) {
        return Err(domain(format!("the small-time bracket needs 0 ≤ μ < 1/2, got {mu}")));
    }
    let kernels: Vec<(f64, HittingTime)> = grid
        .xs
        .par_iter()
        .filter(|&&x| x > 1.0)
        .map(|&x| Ok((x, HittingTime::new(-mu, x)?)))
        .collect::<Result<_>>()?;
    let find = |x: f64| kernels.iter().find(|(k, _)| *k == x).map(|(_, h)| h);
    Ok(SandwichReport::collect(FormulaId::Smalltime, mu, grid, |x, t| {
        let h = find(x).ok_or_else(|| domain("internal: missing start point"))?;
        let q = h.density(t)?.reduced;
        let (lo, hi) = smalltime_bracket_reduced(mu, x, t)?;
        Ok([lo.ln(), q.ln(), hi.ln()])
    }))
}

/// `(λ/x)K_μ(xu)/K_μ(u) ≤ S_μ(x, u) ≤ λK_μ(u)/K_μ(xu)` on an `(x, u)` grid.
pub fn s_bounds_check(mu: f64, grid: &Grid) -> Result<SandwichReport> {
    check_order(mu)?;
    Ok(SandwichReport::collect(FormulaId::SBounds, mu, grid, |x, u| {
        s_bounds_log(mu, x, u)
    }))
}

/// Constants of the large-time band fitted on a grid:
/// `c2(1 − c3(x/t)^a) ≤ q/shape ≤ c1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LargeTimeFit {
    pub mu: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub exponent: f64,
}

/// Fits the band constants on the points of `grid` with `t > x`: `c1` is the
/// largest ratio, `c2` the smallest ratio with `t ≥ 10x`, and `c3` the least
/// value making the lower bound hold at every point.
pub fn fit_largetime_general(mu: f64, grid: &Grid) -> Result<LargeTimeFit> {
    check_param(FormulaId::LargetimeGen, mu)?;
    let (points, failures) = evaluate(
        grid,
        |x, t| x > 1.0 && t > x,
        |x, ts| match context(FormulaId::LargetimeGen, mu, x) {
            Ok(ctx) => ts
                .iter()
                .map(|&t| (t, ratio_at(FormulaId::LargetimeGen, mu, &ctx, x, t)))
                .collect(),
            Err(e) => ts.iter().map(|&t| (t, Err(e.clone()))).collect(),
        },
    );
    let r = RatioScanReport::from_points(FormulaId::LargetimeGen, mu, grid.axes.to_vec(), points, failures, false);
    if !r.is_bounded() {
        return Err(domain(format!("large-time ratios are not finite for μ = {mu}")));
    }
    let exponent = largetime_general_exponent(mu);
    let c1 = r.max_ratio;
    let c2 = r
        .points
        .iter()
        .filter(|p| p.coords[1] >= 10.0 * p.coords[0])
        .map(|p| p.ratio)
        .fold(f64::INFINITY, f64::min);
    if !c2.is_finite() {
        return Err(domain("the grid has no points with t ≥ 10x"));
    }
    let c3 = r
        .points
        .iter()
        .map(|p| (1.0 - p.ratio / c2).max(0.0) / (p.coords[0] / p.coords[1]).powf(exponent))
        .fold(0.0, f64::max);
    Ok(LargeTimeFit {
        mu,
        c1,
        c2,
        c3,
        exponent,
    })
}

/// Least-squares slope of `log |E(t)|` against `log t` for the small-time
/// remainder at a fixed start point.
pub fn smalltime_error_slope(mu: f64, x: f64, ts: &[f64]) -> Result<f64> {
    if ts.len() < 2 {
        return Err(domain("need at least two times"));
    }
    let h = HittingTime::new(-mu, x)?;
    let pts = ts
        .iter()
        .map(|&t| Ok((t.ln(), h.kernel().smalltime_remainder(t)?.abs().ln())))
        .collect::<Result<Vec<_>>>()?;
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    Ok(num / den)
}

/// `q^{(−μ)}/main − 1` for the half-integer large-time expansion.
pub fn largetime_halfint_error(mu: f64, x: f64, t: f64) -> Result<f64> {
    let q = HittingTime::new(-mu, x)?.density(t)?.reduced;
    Ok(q / largetime_halfint_reduced(mu, x, t)? - 1.0)
}
