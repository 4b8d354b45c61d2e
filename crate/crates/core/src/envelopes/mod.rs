//! Two-sided estimates of the hitting density and of the quantities in its
//! representation, as evaluable comparison functions.
//!
//! Every comparison `f ≈ g` holds up to constants depending only on the
//! index. The functions here return `g` without constants; the scans in
//! [`scan`] fit and report the constants against the numeric values.
//!
//! Density comparisons all carry the factor `e^{−λ²/2t}`, which underflows
//! long before the rest does. The `*_reduced` variants omit it and are what
//! the scans compare with [`DensityValue::reduced`](crate::DensityValue).

pub mod scan;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::density::HittingTime;
use crate::error::{domain, Error, Result};
use crate::index::check_start;
use crate::quadrature::{integrate, integrate_with_breaks, Tolerance};
use crate::special::{bessel_ik_scaled, bessel_k_scaled, gamma, half_integer_degree};
use crate::zeros::find_zeros;

/// Which estimate a band or a scan refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// Main density estimate, index `≠ 0`.
    MainMu,
    /// Main density estimate at index 0.
    MainMu0,
    /// Small-time expansion with its error term.
    Smalltime,
    /// Large-time expansion for half-integer orders.
    LargetimeHalfint,
    /// Large-time band for the other orders.
    LargetimeGen,
    /// Large-time estimate at index 0.
    Mu0Largetime,
    /// Survival probability, positive index.
    SurvivalMu,
    /// Survival probability, index 0.
    SurvivalMu0,
    /// Hitting density of the unit ball by `n`-dimensional Brownian motion.
    BallN,
    /// Two-sided estimate of `∫_a^b u^ν e^{−du} du`.
    GammaInt,
    /// Exponential bound on the zero-sum part of the kernel.
    W1Bound,
    /// Estimate of the continuous part of the kernel.
    W2Comp,
    /// Estimate of the kernel at index 0.
    W0Comp,
    /// Bounds on `I_μ(xu)K_μ(u) − I_μ(u)K_μ(xu)`.
    SBounds,
}

impl FormulaId {
    pub const ALL: [FormulaId; 14] = [
        FormulaId::MainMu,
        FormulaId::MainMu0,
        FormulaId::Smalltime,
        FormulaId::LargetimeHalfint,
        FormulaId::LargetimeGen,
        FormulaId::Mu0Largetime,
        FormulaId::SurvivalMu,
        FormulaId::SurvivalMu0,
        FormulaId::BallN,
        FormulaId::GammaInt,
        FormulaId::W1Bound,
        FormulaId::W2Comp,
        FormulaId::W0Comp,
        FormulaId::SBounds,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaId::MainMu => "MAIN_MU",
            FormulaId::MainMu0 => "MAIN_MU0",
            FormulaId::Smalltime => "SMALLTIME",
            FormulaId::LargetimeHalfint => "LARGETIME_HALFINT",
            FormulaId::LargetimeGen => "LARGETIME_GEN",
            FormulaId::Mu0Largetime => "MU0_LARGETIME",
            FormulaId::SurvivalMu => "SURVIVAL_MU",
            FormulaId::SurvivalMu0 => "SURVIVAL_MU0",
            FormulaId::BallN => "BALL_N",
            FormulaId::GammaInt => "GAMMA_INT",
            FormulaId::W1Bound => "W1_BOUND",
            FormulaId::W2Comp => "W2_COMP",
            FormulaId::W0Comp => "W0_COMP",
            FormulaId::SBounds => "S_BOUNDS",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| domain(format!("unknown formula id {s:?}")))
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Lower and upper comparison values at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvelopeBand {
    pub lower: f64,
    pub upper: f64,
    pub formula_id: FormulaId,
}

impl EnvelopeBand {
    pub fn new(lower: f64, upper: f64, formula_id: FormulaId) -> Result<Self> {
        if !(lower >= 0.0 && lower <= upper && upper.is_finite()) {
            return Err(domain(format!("{formula_id}: invalid band [{lower}, {upper}]")));
        }
        Ok(EnvelopeBand {
            lower,
            upper,
            formula_id,
        })
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be positive and finite, got {t}")));
    }
    Ok(())
}

fn check_point(x: f64, t: f64) -> Result<()> {
    check_start(x)?;
    check_time(t)
}

/// `e^{−λ²/2t}`.
fn gauss(x: f64, t: f64) -> f64 {
    let lambda = x - 1.0;
    (-lambda * lambda / (2.0 * t)).exp()
}

/// Main estimate for a signed index `≠ 0`:
/// `λ/(1 + x^{2μ}) · e^{−λ²/2t}/t^{3/2} · x^{2|μ|−1}/(t^{|μ|−1/2} + x^{|μ|−1/2})`.
///
/// ```
/// use besselhit::envelopes::main_envelope;
/// // For index −1/2 this is λ x/(2(1 + x)) e^{−λ²/2t}/t^{3/2}.
/// let g = main_envelope(-0.5, 2.0, 1.0).unwrap();
/// assert!((g - (-0.5f64).exp() / 3.0).abs() < 1e-15);
/// ```
pub fn main_envelope(signed_mu: f64, x: f64, t: f64) -> Result<f64> {
    Ok(main_envelope_reduced(signed_mu, x, t)? * gauss(x, t))
}

pub fn main_envelope_reduced(signed_mu: f64, x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    if signed_mu == 0.0 {
        return Err(domain("the main estimate needs a non-zero index; use mu0_envelope"));
    }
    let m = signed_mu.abs();
    let lambda = x - 1.0;
    Ok(
        lambda / (1.0 + x.powf(2.0 * signed_mu)) * t.powf(-1.5) * x.powf(2.0 * m - 1.0)
            / (t.powf(m - 0.5) + x.powf(m - 0.5)),
    )
}

/// Index-0 estimate in its single-formula form:
/// `λ e^{−λ²/2t} (x + t)^{1/2}/(x t^{3/2}) · (1 + log x)/((1 + log(1 + t/x))(1 + log(t + x)))`.
pub fn mu0_envelope(x: f64, t: f64) -> Result<f64> {
    Ok(mu0_envelope_reduced(x, t)? * gauss(x, t))
}

pub fn mu0_envelope_reduced(x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    let lambda = x - 1.0;
    Ok(lambda * (x + t).sqrt() / (x * t.powf(1.5)) * (1.0 + x.ln())
        / ((1.0 + (1.0 + t / x).ln()) * (1.0 + (t + x).ln())))
}

/// Index-0 estimate in its piecewise form, split at `t = 2x`.
pub fn mu0_envelope_piecewise(x: f64, t: f64) -> Result<f64> {
    Ok(mu0_envelope_piecewise_reduced(x, t)? * gauss(x, t))
}

pub fn mu0_envelope_piecewise_reduced(x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    let lambda = x - 1.0;
    if t > 2.0 * x {
        Ok(lambda / (x * t) * (1.0 + x.ln()) / ((1.0 + (t / x).ln()) * (1.0 + t.ln())))
    } else {
        Ok(lambda / (x.sqrt() * t.powf(1.5)))
    }
}

/// Which Gaussian factor multiplies the small-time expansion. The expansion
/// is displayed with `e^{−λ²/4t}` and its bracket with `e^{−λ²/2t}`; only the
/// latter makes the error term small (see the tests).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GaussExponent {
    /// `e^{−λ²/2t}`.
    #[default]
    Half,
    /// `e^{−λ²/4t}`.
    Quarter,
}

/// Small-time expansion `λ e^{−λ²/2t}/(√(2π) t^{3/2}) x^{μ−1/2}(1 + (1 − 4μ²)t/(8x))`
/// and the shape `(t/x)(√t ∧ t/λ)` of its relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallTimeExpansion {
    pub main: f64,
    pub error_bound: f64,
}

pub fn smalltime_expansion(mu: f64, x: f64, t: f64) -> Result<SmallTimeExpansion> {
    smalltime_expansion_with(mu, x, t, GaussExponent::Half)
}

pub fn smalltime_expansion_with(mu: f64, x: f64, t: f64, exponent: GaussExponent) -> Result<SmallTimeExpansion> {
    check_order(mu)?;
    check_point(x, t)?;
    let lambda = x - 1.0;
    let g = match exponent {
        GaussExponent::Half => gauss(x, t),
        GaussExponent::Quarter => (-lambda * lambda / (4.0 * t)).exp(),
    };
    let main = g * levy_reduced(x, t) * x.powf(mu - 0.5) * (1.0 + smalltime_correction(mu, x, t));
    Ok(SmallTimeExpansion {
        main,
        error_bound: smalltime_error_shape(x, t),
    })
}

/// `(1 − 4μ²)t/(8x)`.
pub(crate) fn smalltime_correction(mu: f64, x: f64, t: f64) -> f64 {
    (1.0 - 4.0 * mu * mu) / 8.0 * t / x
}

/// `(t/x)(√t ∧ t/λ)`.
pub fn smalltime_error_shape(x: f64, t: f64) -> f64 {
    t / x * t.sqrt().min(t / (x - 1.0))
}

/// The strict bracket for `0 ≤ μ < 1/2`:
/// `x^{μ−1/2} q_Lévy ≤ q̂ ≤ x^{μ−1/2} q_Lévy (1 + (1 − 4μ²)t/(8x))`.
pub fn smalltime_bracket(mu: f64, x: f64, t: f64) -> Result<EnvelopeBand> {
    let (lower, upper) = smalltime_bracket_reduced(mu, x, t)?;
    let g = gauss(x, t);
    EnvelopeBand::new(lower * g, upper * g, FormulaId::Smalltime)
}

pub fn smalltime_bracket_reduced(mu: f64, x: f64, t: f64) -> Result<(f64, f64)> {
    check_order(mu)?;
    check_point(x, t)?;
    if mu >= 0.5 {
        return Err(domain(format!("the small-time bracket needs μ < 1/2, got {mu}")));
    }
    let lower = levy_reduced(x, t) * x.powf(mu - 0.5);
    Ok((lower, lower * (1.0 + smalltime_correction(mu, x, t))))
}

/// `λ/√(2πt³)`, the Lévy density without its Gaussian factor.
fn levy_reduced(x: f64, t: f64) -> f64 {
    (x - 1.0) / (2.0 * PI * t * t * t).sqrt()
}

fn check_order(mu: f64) -> Result<()> {
    if !(0.0..=6.0).contains(&mu) {
        return Err(domain(format!("order must lie in [0, 6], got {mu}")));
    }
    Ok(())
}

/// Large-time expansion for `μ − 1/2 ∈ ℕ`:
/// `(x^{2μ} − 1)/(Γ(μ)2^μ) · e^{−λ²/2t}/t^{μ+1}`, with relative error of
/// order `x/t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeTimeExpansion {
    pub main: f64,
    pub rel_error_bound: f64,
}

pub fn largetime_halfint(mu: f64, x: f64, t: f64) -> Result<LargeTimeExpansion> {
    Ok(LargeTimeExpansion {
        main: largetime_halfint_reduced(mu, x, t)? * gauss(x, t),
        rel_error_bound: x / t,
    })
}

pub fn largetime_halfint_reduced(mu: f64, x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    if half_integer_degree(mu).is_none() || mu > 6.0 {
        return Err(domain(format!("the large-time expansion needs μ − 1/2 ∈ ℕ, got {mu}")));
    }
    Ok((x.powf(2.0 * mu) - 1.0) / (gamma(mu) * 2f64.powf(mu)) * t.powf(-mu - 1.0))
}

/// `λ x^{2μ−1} t^{−μ−1}`: the large-time shape for `μ − 1/2 ∉ ℕ`, without the
/// Gaussian factor.
pub fn largetime_general_shape_reduced(mu: f64, x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    if !(mu > 0.0) || mu > 6.0 || half_integer_degree(mu).is_some() {
        return Err(domain(format!(
            "the large-time band needs μ > 0 with μ − 1/2 ∉ ℕ, got {mu}"
        )));
    }
    if t <= x {
        return Err(domain(format!("the large-time band needs t > x, got t = {t}, x = {x}")));
    }
    Ok((x - 1.0) * x.powf(2.0 * mu - 1.0) * t.powf(-mu - 1.0))
}

/// Exponent `l − μ + 1/2` of the lower correction in the large-time band.
pub fn largetime_general_exponent(mu: f64) -> f64 {
    (mu + 0.5).floor() - mu + 0.5
}

/// Large-time band for `μ − 1/2 ∉ ℕ` and `t > x`, with unit constants:
/// `shape · (1 − (x/t)^{l−μ+1/2})⁺ ≤ · ≤ shape`.
pub fn largetime_general(mu: f64, x: f64, t: f64) -> Result<EnvelopeBand> {
    let shape = largetime_general_shape_reduced(mu, x, t)? * gauss(x, t);
    let lower = shape * (1.0 - (x / t).powf(largetime_general_exponent(mu))).max(0.0);
    EnvelopeBand::new(lower, shape, FormulaId::LargetimeGen)
}

/// Index-0 large-time estimate for `t > 2x`:
/// `(λ/x) e^{−λ²/2t}/t · (1 + log x)/((1 + log(t/x))(1 + log t))`.
pub fn mu0_largetime(x: f64, t: f64) -> Result<f64> {
    Ok(mu0_largetime_reduced(x, t)? * gauss(x, t))
}

pub fn mu0_largetime_reduced(x: f64, t: f64) -> Result<f64> {
    check_point(x, t)?;
    if t <= 2.0 * x {
        return Err(domain(format!(
            "the index-0 large-time estimate needs t > 2x, got t = {t}, x = {x}"
        )));
    }
    mu0_envelope_piecewise_reduced(x, t)
}

/// Estimate of `P(t < T_1 < ∞)`.
///
/// For a positive index `(x − 1)/(√(x ∧ t) + x − 1) · 1/(t^μ + x^{2μ})`; at
/// index 0 `1 ∧ log x / log(1 + √t)`. Negative indices have no displayed
/// estimate and are rejected.
///
/// ```
/// use besselhit::envelopes::survival_envelope;
/// assert!((survival_envelope(0.5, 2.0, 1.0).unwrap() - 1.0 / 6.0).abs() < 1e-15);
/// assert_eq!(survival_envelope(0.0, 3.0, 0.5).unwrap(), 1.0);
/// ```
pub fn survival_envelope(signed_mu: f64, x: f64, t: f64) -> Result<f64> {
    check_start(x)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be non-negative and finite, got {t}")));
    }
    if signed_mu > 0.0 {
        let lambda = x - 1.0;
        Ok(lambda / (x.min(t).sqrt() + lambda) / (t.powf(signed_mu) + x.powf(2.0 * signed_mu)))
    } else if signed_mu == 0.0 {
        Ok((x.ln() / (1.0 + t.sqrt()).ln()).min(1.0))
    } else {
        Err(domain(format!(
            "no survival estimate is displayed for negative indices (got {signed_mu}); use cdf_tail"
        )))
    }
}

/// Estimate of the density of the hitting time of the unit ball by
/// `n`-dimensional Brownian motion started at distance `r > 1`.
///
/// ```
/// use besselhit::envelopes::ball_envelope;
/// // n = 3: (1/2) e^{−1/2}/2 at r = 2, t = 1.
/// assert!((ball_envelope(3, 2.0, 1.0).unwrap() - 0.25 * (-0.5f64).exp()).abs() < 1e-15);
/// ```
pub fn ball_envelope(n: u32, r: f64, t: f64) -> Result<f64> {
    Ok(ball_envelope_reduced(n, r, t)? * gauss(r, t))
}

pub fn ball_envelope_reduced(n: u32, r: f64, t: f64) -> Result<f64> {
    check_point(r, t)?;
    match n {
        0 | 1 => Err(domain(format!("dimension must be at least 2, got {n}"))),
        2 => Ok((r - 1.0) / r * (r + t).sqrt() / t.powf(1.5) * (1.0 + r.ln())
            / ((1.0 + (1.0 + t / r).ln()) * (1.0 + (t + r).ln()))),
        _ => {
            let e = (n as f64 - 3.0) / 2.0;
            Ok((r - 1.0) / r / t.powf(1.5) / (t.powf(e) + r.powf(e)))
        }
    }
}

/// `b^ν ((a + 1/d)/(b + 1/d))^ν e^{−ad} (b − a)/(d(b − a) + 1)`, the estimate
/// of `∫_a^b u^ν e^{−du} du`.
///
/// ```
/// use besselhit::envelopes::gamma_integral_envelope;
/// assert_eq!(gamma_integral_envelope(1.0, 0.0, 1.0, 1.0).unwrap(), 0.25);
/// ```
pub fn gamma_integral_envelope(nu: f64, a: f64, b: f64, d: f64) -> Result<f64> {
    check_gamma_args(nu, a, b, d)?;
    let s = 1.0 / d;
    Ok(b.powf(nu) * ((a + s) / (b + s)).powf(nu) * (-a * d).exp() * (b - a) / (d * (b - a) + 1.0))
}

/// `∫_a^b u^ν e^{−du} du` by quadrature.
pub fn gamma_integral(nu: f64, a: f64, b: f64, d: f64) -> Result<f64> {
    check_gamma_args(nu, a, b, d)?;
    // The integrand peaks at ν/d; split there so the panels see it.
    let peak = nu / d;
    let mut breaks = vec![a];
    if peak > a && peak < b {
        breaks.push(peak);
    }
    breaks.push(b);
    let r = integrate_with_breaks(
        |u| {
            if u <= 0.0 {
                0.0f64.powf(nu)
            } else {
                (nu * u.ln() - d * u).exp()
            }
        },
        &breaks,
        &Tolerance::new(1e-12, 0.0),
    )?;
    Ok(r.value)
}

fn check_gamma_args(nu: f64, a: f64, b: f64, d: f64) -> Result<()> {
    if !(nu >= 0.0 && a >= 0.0 && b > a && d > 0.0 && b.is_finite() && d.is_finite()) {
        return Err(domain(format!(
            "need ν ≥ 0, 0 ≤ a < b < ∞, d > 0; got ν = {nu}, a = {a}, b = {b}, d = {d}"
        )));
    }
    Ok(())
}

/// `e^{−λu} S_μ(x, u)` with `S_μ(x, u) = I_μ(xu)K_μ(u) − I_μ(u)K_μ(xu)`,
/// finite for all `u`.
pub fn s_mu_scaled(mu: f64, x: f64, u: f64) -> Result<f64> {
    check_order(mu)?;
    check_start(x)?;
    if !(u > 0.0 && u.is_finite()) {
        return Err(domain(format!("u must be positive and finite, got {u}")));
    }
    let lambda = x - 1.0;
    let (ie_xu, ke_xu) = bessel_ik_scaled(mu, x * u)?;
    let (ie_u, ke_u) = bessel_ik_scaled(mu, u)?;
    Ok(ie_xu * ke_u - ie_u * ke_xu * (-2.0 * lambda * u).exp())
}

/// `S_μ(x, u)`; an error where it overflows.
pub fn s_mu(mu: f64, x: f64, u: f64) -> Result<f64> {
    let s = s_mu_scaled(mu, x, u)? * ((x - 1.0) * u).exp();
    if !s.is_finite() {
        return Err(Error::Range(format!(
            "S_μ(x, u) overflows at x = {x}, u = {u}; use s_mu_scaled"
        )));
    }
    Ok(s)
}

/// Logarithms of `(λ/x)K_μ(xu)/K_μ(u)`, `S_μ(x, u)` and `λK_μ(u)/K_μ(xu)`,
/// which bracket each other in that order.
pub fn s_bounds_log(mu: f64, x: f64, u: f64) -> Result<[f64; 3]> {
    let lambda = x - 1.0;
    let s = s_mu_scaled(mu, x, u)?.ln() + lambda * u;
    let ratio = bessel_k_scaled(mu, x * u)?.ln() - bessel_k_scaled(mu, u)?.ln();
    // K_μ(xu)/K_μ(u) = e^{−λu} Kₑ(xu)/Kₑ(u).
    let lower = (lambda / x).ln() + ratio - lambda * u;
    let upper = lambda.ln() - ratio + lambda * u;
    Ok([lower, s, upper])
}

/// The bracket `(λ/x)K_μ(xu)/K_μ(u) ≤ S_μ(x, u) ≤ λK_μ(u)/K_μ(xu)`.
pub fn s_bounds(mu: f64, x: f64, u: f64) -> Result<EnvelopeBand> {
    let [lower, _, upper] = s_bounds_log(mu, x, u)?;
    EnvelopeBand::new(lower.exp(), upper.exp(), FormulaId::SBounds)
}

/// Comparison function for the representation kernel selected by
/// `formula`:
///
/// - `W1_BOUND`: `x^{μ−3/2} e^{−θ_μ v}` with `θ_μ = −max Re z_i`;
/// - `W2_COMP`: `(−cos πμ) x^{2μ−1}/((v + 1)^{μ+3/2}(v + x)^{μ+1/2})`;
/// - `W0_COMP`: `log(x + 1)/(x (v + 1)^{3/2}(v + x)^{1/2} log(v + 2)(log(x + 1) + log(v + 2)))`,
///   the estimate of `−w` at `μ = 0`.
pub fn w_bound_comparator(formula: FormulaId, mu: f64, x: f64, v: f64) -> Result<f64> {
    check_order(mu)?;
    check_start(x)?;
    if !(v >= 0.0 && v.is_finite()) {
        return Err(domain(format!("v must be non-negative and finite, got {v}")));
    }
    match formula {
        FormulaId::W1Bound => {
            let theta = find_zeros(mu, 1e-12)?
                .decay_rate()
                .ok_or_else(|| domain(format!("K_μ has no zeros for μ = {mu}")))?;
            Ok(x.powf(mu - 1.5) * (-theta * v).exp())
        }
        FormulaId::W2Comp => Ok(w2_comparator(mu, x, v)),
        FormulaId::W0Comp => Ok(w0_comparator(x, v)),
        other => Err(domain(format!("{other} is not a kernel comparator"))),
    }
}

pub(crate) fn w2_comparator(mu: f64, x: f64, v: f64) -> f64 {
    -(PI * mu).cos() * x.powf(2.0 * mu - 1.0) / ((v + 1.0).powf(mu + 1.5) * (v + x).powf(mu + 0.5))
}

pub(crate) fn w0_comparator(x: f64, v: f64) -> f64 {
    let lx = (x + 1.0).ln();
    let lv = (v + 2.0).ln();
    lx / (x * (v + 1.0).powf(1.5) * (v + x).sqrt() * lv * (lx + lv))
}

/// The limit along `x = ct`, `x → ∞`, of
/// `(1 + x^{2μ})/x^{|μ|−1/2} · q(t)√(2πt)/e^{−λ²/2t}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticLimit {
    pub signed_mu: f64,
    pub c: f64,
    /// `√(πc/2) e^{−c}/K_{|μ|}(c)`.
    pub target: f64,
    /// `(x, measured)` along `t = x/c`.
    pub measured: Vec<(f64, f64)>,
}

impl AsymptoticLimit {
    /// `measured/target` at the largest `x`.
    pub fn final_ratio(&self) -> f64 {
        self.measured.last().map_or(f64::NAN, |&(_, m)| m / self.target)
    }
}

pub fn asymptotic_limit_target(signed_mu: f64, c: f64) -> Result<f64> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(domain(format!("c must be positive, got {c}")));
    }
    // e^{−c}/K(c) = 1/Kₑ(c).
    Ok((PI * c / 2.0).sqrt() / bessel_k_scaled(signed_mu.abs(), c)?)
}

/// The limit quantity at one start point `x` with `t = x/c`.
pub fn asymptotic_limit_at(signed_mu: f64, c: f64, x: f64) -> Result<f64> {
    if signed_mu == 0.0 {
        return Err(domain("the limit is stated for a non-zero index"));
    }
    let t = x / c;
    let q = HittingTime::new(signed_mu, x)?.density(t)?;
    Ok((1.0 + x.powf(2.0 * signed_mu)) / x.powf(signed_mu.abs() - 0.5) * q.reduced * (2.0 * PI * t).sqrt())
}

/// Target and measured values at `x ∈ {10², 10³}`.
///
/// ```
/// use besselhit::envelopes::asymptotic_limit_check;
/// let r = asymptotic_limit_check(0.5, 2.0).unwrap();
/// assert!((r.target - 2.0).abs() < 1e-14);
/// assert!((r.final_ratio() - 1.0).abs() < 1e-3);
/// ```
pub fn asymptotic_limit_check(signed_mu: f64, c: f64) -> Result<AsymptoticLimit> {
    let target = asymptotic_limit_target(signed_mu, c)?;
    let measured = [1e2, 1e3]
        .into_iter()
        .map(|x| Ok((x, asymptotic_limit_at(signed_mu, c, x)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AsymptoticLimit {
        signed_mu,
        c,
        target,
        measured,
    })
}

/// The two logarithmic integrals of the index-0 kernel estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogIntegral {
    /// `∫₀^a e^{−vu} u/(log²u + 1) du`.
    I,
    /// `∫_a^1 e^{−vu} u^{1/2}/(1 − log u) du`, for `av ≤ 1`.
    J,
}

/// Comparison value: `1/((v + 1/a)²(log²(v + 1/a) + 1))` for `I` and
/// `(1 − a)/((v + 1)^{3/2}(1 + log(v + 1)))` for `J`.
pub fn log_integral_comparator(which: LogIntegral, a: f64, v: f64) -> Result<f64> {
    check_log_args(which, a, v)?;
    match which {
        LogIntegral::I => {
            let s = v + 1.0 / a;
            Ok(1.0 / (s * s * (s.ln().powi(2) + 1.0)))
        }
        LogIntegral::J => Ok((1.0 - a) / ((v + 1.0).powf(1.5) * (1.0 + (v + 1.0).ln()))),
    }
}

/// The left-hand side by quadrature.
pub fn log_integral(which: LogIntegral, a: f64, v: f64) -> Result<f64> {
    check_log_args(which, a, v)?;
    let tol = Tolerance::new(1e-11, 0.0);
    let r = match which {
        LogIntegral::I => {
            let f = |u: f64| {
                if u <= 0.0 {
                    0.0
                } else {
                    (-v * u).exp() * u / (u.ln().powi(2) + 1.0)
                }
            };
            // e^{−vu} decays on the scale 1/v.
            let knee = (1.0 / v).min(a);
            if knee < a {
                integrate_with_breaks(f, &[0.0, knee, a], &tol)?
            } else {
                integrate(f, 0.0, a, &tol)?
            }
        }
        LogIntegral::J => {
            if a == 1.0 {
                return Ok(0.0);
            }
            integrate(|u: f64| (-v * u).exp() * u.sqrt() / (1.0 - u.ln()), a, 1.0, &tol)?
        }
    };
    Ok(r.value)
}

fn check_log_args(which: LogIntegral, a: f64, v: f64) -> Result<()> {
    if !(v >= 0.0 && v.is_finite()) {
        return Err(domain(format!("v must be non-negative and finite, got {v}")));
    }
    match which {
        LogIntegral::I if !(a > 0.0 && a <= 1.0) => Err(domain(format!("need 0 < a ≤ 1, got {a}"))),
        LogIntegral::J if !(0.0..=1.0).contains(&a) => Err(domain(format!("need 0 ≤ a ≤ 1, got {a}"))),
        LogIntegral::J if a * v > 1.0 => Err(domain(format!("the J estimate needs av ≤ 1, got a = {a}, v = {v}"))),
        _ => Ok(()),
    }
}
