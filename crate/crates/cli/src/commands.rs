use std::path::PathBuf;

use besselhit::acceptance::{run_criterion, AcceptanceOptions, TITLES};
use besselhit::density::{reduce_scaling, DensityOptions, HittingTime};
use besselhit::envelopes::scan::{ratio_scan, ratio_scan_refined, Grid};
use besselhit::envelopes::{self, FormulaId};
use besselhit::hyperbolic::PoissonKernel;
use besselhit::monte_carlo::{ks_statistic, sample_hitting_times, MCConfig, TabulatedCdf};
use besselhit::zeros::{find_zeros, residual};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::output::{Cell, Format, Table};
use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "besselhit", version, about = "Hitting times of Bessel processes")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "BESSELHIT_THREADS")]
    pub parallelism: Option<usize>,
    /// `key = value` file of flags; flags on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hitting density of 1 on a grid of start points and times.
    Density(DensityArgs),
    /// Survival probability P(t < T < inf) and its two-sided estimate.
    Survival(PointArgs),
    /// A comparison function and its ratio to the quantity it estimates.
    Envelope(EnvelopeArgs),
    /// Ratio scan of an estimate over a grid.
    Scan(ScanArgs),
    /// Zeros of K_mu in the left half-plane.
    Zeros(ZerosArgs),
    /// Monte Carlo hitting times.
    Mc(McArgs),
    /// Poisson kernel of a horizontal half-space in hyperbolic space.
    Poisson(PoissonArgs),
    /// Runs the acceptance suite.
    Accept(AcceptArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Signed index of the process.
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    /// Start points, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub x: Vec<f64>,
    /// Times, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Level to hit, below every start point.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Relative tolerance of the kernel integral.
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Absolute tolerance of the kernel integral.
    #[arg(long)]
    pub abs_tol: Option<f64>,
    /// Bisection budget of the kernel integral.
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnvelopeArgs {
    /// Formula identifier, e.g. MAIN_MU.
    #[arg(long)]
    pub formula: FormulaId,
    /// Index, order or dimension, depending on the formula.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub param: f64,
    /// First coordinates (start point x or radius r), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub x: Vec<f64>,
    /// Second coordinates (t, v or u), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub y: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub formula: FormulaId,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub param: f64,
    /// First axis; the formula's default grid if omitted.
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<f64>,
    /// Second axis; the formula's default grid if omitted.
    #[arg(long, value_delimiter = ',')]
    pub y: Vec<f64>,
    /// Skip the refined second pass.
    #[arg(long)]
    pub no_refine: bool,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long)]
    pub mu: f64,
    /// Bound on |K_mu| at each returned zero.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Signed index, at most 0.
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long)]
    pub x: f64,
    /// Time step.
    #[arg(long, default_value_t = 1e-4)]
    pub step: f64,
    #[arg(long, default_value_t = 10_000)]
    pub paths: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Censoring horizon; 1000 x^2 if omitted.
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Also compute the Kolmogorov-Smirnov distance to the numeric law.
    #[arg(long)]
    pub ks: bool,
}

#[derive(Debug, Args)]
pub struct PoissonArgs {
    /// Drift parameter, positive.
    #[arg(long)]
    pub mu: f64,
    /// Dimension of the hyperbolic space.
    #[arg(long)]
    pub n: usize,
    /// Height of the source point, above 1.
    #[arg(long)]
    pub yn: f64,
    /// Horizontal distances to the boundary point, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub r: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct AcceptArgs {
    /// Fewer Monte Carlo paths, with thresholds scaled to match.
    #[arg(long)]
    pub quick: bool,
    /// Run only these criteria (1 to 12), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<usize>,
}

/// Outcome of a subcommand: the table, and whether it reports a failure.
pub struct Run {
    pub table: Table,
    pub failed: bool,
}

impl From<Table> for Run {
    fn from(table: Table) -> Self {
        Run { table, failed: false }
    }
}

pub fn execute(cmd: &Command) -> Result<Run, Failure> {
    match cmd {
        Command::Density(a) => density(a).map(Run::from),
        Command::Survival(a) => survival(a).map(Run::from),
        Command::Envelope(a) => envelope(a).map(Run::from),
        Command::Scan(a) => scan(a).map(Run::from),
        Command::Zeros(a) => zeros(a).map(Run::from),
        Command::Mc(a) => mc(a).map(Run::from),
        Command::Poisson(a) => poisson(a).map(Run::from),
        Command::Accept(a) => accept(a),
    }
}

fn grid_points(xs: &[f64], ts: &[f64]) -> Vec<(f64, f64)> {
    xs.iter().flat_map(|&x| ts.iter().map(move |&t| (x, t))).collect()
}

fn density(a: &DensityArgs) -> Result<Table, Failure> {
    let mut opts = DensityOptions::default();
    if let Some(rel) = a.rel_tol {
        opts.tolerance.rel = rel;
    }
    if let Some(abs) = a.abs_tol {
        opts.tolerance.abs = abs;
    }
    if let Some(n) = a.max_subdivisions {
        opts.tolerance.max_subdivisions = n;
    }
    let p = &a.point;
    let rows = grid_points(&p.x, &p.t)
        .par_iter()
        .map(|&(x, t)| {
            // Level a from x is level 1 from x/a in time t/a².
            let (xs, ts) = reduce_scaling(x, a.a, t)?;
            let h = HittingTime::new(p.mu, xs)?;
            let branch = h.kernel().default_branch(ts);
            let q = h.density_with(ts, branch, &opts)?;
            let jac = 1.0 / (a.a * a.a);
            Ok(vec![
                p.mu.into(),
                x.into(),
                t.into(),
                (jac * q.value).into(),
                (jac * q.reduced).into(),
                q.rel_error().into(),
                branch.as_str().into(),
            ])
        })
        .collect::<besselhit::Result<Vec<_>>>()?;
    let mut table = Table::new(
        "density",
        &["mu", "x", "t", "density", "reduced", "rel_error", "branch"],
    )
    .meta("level", a.a);
    table.rows = rows;
    Ok(table)
}

fn survival(a: &PointArgs) -> Result<Table, Failure> {
    let rows = grid_points(&a.x, &a.t)
        .par_iter()
        .map(|&(x, t)| {
            let s = HittingTime::new(a.mu, x)?.survival(t)?.value;
            let e = envelopes::survival_envelope(a.mu, x, t)?;
            Ok(vec![
                a.mu.into(),
                x.into(),
                t.into(),
                s.into(),
                e.into(),
                (s / e).into(),
            ])
        })
        .collect::<besselhit::Result<Vec<_>>>()?;
    let mut table = Table::new("survival", &["mu", "x", "t", "survival", "envelope", "ratio"]);
    table.rows = rows;
    Ok(table)
}

/// The comparison function of `formula` without constants.
fn envelope_value(formula: FormulaId, param: f64, x: f64, y: f64) -> besselhit::Result<f64> {
    use envelopes::*;
    match formula {
        FormulaId::MainMu => main_envelope(param, x, y),
        FormulaId::MainMu0 => mu0_envelope(x, y),
        FormulaId::Smalltime => Ok(smalltime_expansion(param, x, y)?.main),
        FormulaId::LargetimeHalfint => Ok(largetime_halfint(param, x, y)?.main),
        FormulaId::LargetimeGen => Ok(largetime_general(param, x, y)?.upper),
        FormulaId::Mu0Largetime => mu0_largetime(x, y),
        FormulaId::SurvivalMu => survival_envelope(param, x, y),
        FormulaId::SurvivalMu0 => survival_envelope(0.0, x, y),
        FormulaId::BallN if param.fract() == 0.0 && param >= 0.0 => ball_envelope(param as u32, x, y),
        FormulaId::W1Bound | FormulaId::W2Comp | FormulaId::W0Comp => w_bound_comparator(formula, param, x, y),
        FormulaId::SBounds => Ok(s_bounds(param, x, y)?.upper),
        _ => Err(besselhit::Error::Domain(format!(
            "{formula} has no pointwise comparison function for parameter {param}"
        ))),
    }
}

fn envelope(a: &EnvelopeArgs) -> Result<Table, Failure> {
    let points = grid_points(&a.x, &a.y);
    let values = points
        .iter()
        .map(|&(x, y)| envelope_value(a.formula, a.param, x, y))
        .collect::<besselhit::Result<Vec<_>>>()?;
    let report = ratio_scan(a.formula, a.param, &Grid::new(a.x.clone(), a.y.clone(), ["x", "y"])?)?;
    let mut table = Table::new("envelope", &["formula", "param", "x", "y", "envelope", "ratio"]).meta(
        "ratio",
        "numeric value over comparison function; nan outside the scan domain",
    );
    for (&(x, y), e) in points.iter().zip(values) {
        let ratio = report
            .points
            .iter()
            .find(|p| p.coords == [x, y])
            .map_or(f64::NAN, |p| p.ratio);
        table.push(vec![
            a.formula.as_str().into(),
            a.param.into(),
            x.into(),
            y.into(),
            e.into(),
            ratio.into(),
        ]);
    }
    Ok(table)
}

fn scan(a: &ScanArgs) -> Result<Table, Failure> {
    let default = Grid::default_for(a.formula);
    let grid = Grid::new(
        if a.x.is_empty() {
            default.xs.clone()
        } else {
            a.x.clone()
        },
        if a.y.is_empty() {
            default.ys.clone()
        } else {
            a.y.clone()
        },
        default.axes,
    )?;
    let r = if a.no_refine {
        ratio_scan(a.formula, a.param, &grid)?
    } else {
        ratio_scan_refined(a.formula, a.param, &grid)?
    };
    let [ax, ay] = grid.axes;
    let mut table = Table::new("scan", &["x", "y", "ratio"])
        .meta("formula", a.formula.as_str())
        .meta("param", a.param)
        .meta("axes", format!("{ax},{ay}"))
        .meta("min_ratio", r.min_ratio)
        .meta("max_ratio", r.max_ratio)
        .meta("constant", r.constant())
        .meta("bounded", r.is_bounded())
        .meta("failures", r.failures.len());
    if let Some(f) = &r.refinement {
        table = table
            .meta("refined_min_ratio", f.min_ratio)
            .meta("refined_max_ratio", f.max_ratio)
            .meta("stable", f.stable);
    }
    table = table.meta("passes", r.passes());
    for p in &r.points {
        table.push(vec![p.coords[0].into(), p.coords[1].into(), p.ratio.into()]);
    }
    Ok(table)
}

fn zeros(a: &ZerosArgs) -> Result<Table, Failure> {
    let set = find_zeros(a.mu, a.tol)?;
    let mut table = Table::new("zeros", &["re", "im", "residual"])
        .meta("mu", a.mu)
        .meta("count", set.count())
        .meta("decay_rate", set.decay_rate().unwrap_or(f64::NAN));
    for z in &set.zeros {
        table.push(vec![z.re.into(), z.im.into(), residual(a.mu, *z)?.into()]);
    }
    Ok(table)
}

fn mc(a: &McArgs) -> Result<Table, Failure> {
    let mut cfg = MCConfig::new(a.mu, a.x, a.step, a.paths, a.seed)?;
    if let Some(t_max) = a.t_max {
        cfg = cfg.with_t_max(t_max)?;
    }
    let s = sample_hitting_times(&cfg)?;
    let mut table = Table::new("mc", &["time"])
        .meta("mu", a.mu)
        .meta("x", a.x)
        .meta("step", a.step)
        .meta("paths", a.paths)
        .meta("seed", a.seed)
        .meta("t_max", cfg.t_max)
        .meta("step_is_recommended", cfg.step_is_recommended())
        .meta("censored", s.censored_count);
    // Quantiles of the uncensored times; NaN when every path is censored.
    for (key, p) in [("q10", 0.1), ("q50", 0.5), ("q90", 0.9)] {
        table = table.meta(key, s.quantile(p).unwrap_or(f64::NAN));
    }
    if a.ks {
        let law = HittingTime::new(a.mu, a.x)?;
        let lambda = a.x - 1.0;
        let t_min = (lambda * lambda / 100.0).min(cfg.t_max / 2.0);
        let cdf = TabulatedCdf::new(|t| Ok(law.cdf(t)?.value), t_min, cfg.t_max, 600)?;
        table = table.meta("ks", ks_statistic(&s, |t| cdf.eval(t)));
    }
    for &t in &s.hitting_times {
        table.push(vec![t.into()]);
    }
    Ok(table)
}

fn poisson(a: &PoissonArgs) -> Result<Table, Failure> {
    let k = PoissonKernel::new(a.mu, a.n, a.yn)?;
    let rows =
        a.r.par_iter()
            .map(|&r| {
                let p = k.at_distance(r)?.value;
                let e = k.envelope(r);
                Ok(vec![r.into(), p.into(), e.into(), (p / e).into()])
            })
            .collect::<besselhit::Result<Vec<_>>>()?;
    let mut table = Table::new("poisson", &["r", "kernel", "envelope", "ratio"])
        .meta("mu", a.mu)
        .meta("n", a.n)
        .meta("yn", a.yn);
    table.rows = rows;
    Ok(table)
}

fn accept(a: &AcceptArgs) -> Result<Run, Failure> {
    if let Some(bad) = a.only.iter().find(|&&id| id == 0 || id > TITLES.len()) {
        return Err(Failure::Usage(format!(
            "no criterion {bad}; criteria are 1 to {}",
            TITLES.len()
        )));
    }
    let opts = AcceptanceOptions { quick: a.quick };
    let mut table = Table::new("accept", &["id", "status", "title", "seconds", "detail"]).meta("quick", a.quick);
    let mut failed = false;
    for id in 1..=TITLES.len() {
        if !a.only.is_empty() && !a.only.contains(&id) {
            continue;
        }
        let r = run_criterion(id, &opts);
        eprintln!("[{:>2}] {:<12} {}", r.id, r.status(), r.title);
        failed |= r.is_regression();
        table.push(vec![
            r.id.into(),
            r.status().into(),
            r.title.into(),
            Cell::Num(r.seconds),
            r.detail.into(),
        ]);
    }
    Ok(Run { table, failed })
}
