//! Hitting-time density of level 1 for a Bessel process started at `x > 1`.
//!
//! For the index `−μ` (`μ ≥ 0`) the density `q̂` is evaluated from
//!
//! ```text
//! q̂(t) = λ e^{−λ²/2t} / √(2πt) · ( x^{μ−1/2}/t + ∫₀^∞ (e^{−κ/2t} − 1) w(v) dv )
//! ```
//!
//! with `λ = x − 1` and `κ = v(2λ + v)`, or, for `μ ≥ 1/2`, from the form
//! where the first `l + 1` Taylor terms of `e^{−κ/2t}` are removed instead.
//! The index `+μ` follows from `q^{(+μ)} = x^{−2μ} q̂`.

mod kernel;
mod time;

pub use kernel::Kernel;

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::index::{check_start, kappa, BesselIndex, EvalPoint};
use crate::quadrature::{integrate_with_breaks, QuadResult, Tolerance};
use crate::special::bessel_k_scaled;
use kernel::EXP_UNDERFLOW;

/// Which formula produced a density value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The plain representation.
    Rep1,
    /// The representation with the Taylor head of `e^{−κ/2t}` removed.
    Rep3,
    /// `μ = 1/2`: the Lévy density `λ e^{−λ²/2t}/√(2πt³)`.
    ClosedFormHalf,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Rep1 => "REP1",
            Branch::Rep3 => "REP3",
            Branch::ClosedFormHalf => "CLOSED_FORM_HALF",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A density value with its error estimate.
///
/// `reduced` is `value · e^{λ²/2t}`: the Gaussian factor underflows long
/// before the rest of the density does (`x = 10³, t = 10⁻²`), so ratio
/// computations should use it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityValue {
    pub value: f64,
    pub reduced: f64,
    pub quad_error: f64,
    pub branch: Branch,
}

impl DensityValue {
    fn from_reduced(reduced: f64, rel_error: f64, pt: &EvalPoint, branch: Branch) -> Self {
        let g = (-pt.lambda * pt.lambda / (2.0 * pt.t)).exp();
        DensityValue {
            value: reduced * g,
            reduced,
            quad_error: rel_error.abs() * (reduced * g).abs(),
            branch,
        }
    }

    /// `quad_error / |value|`, computed on the reduced scale.
    pub fn rel_error(&self) -> f64 {
        if self.value == 0.0 {
            return if self.reduced == 0.0 { 0.0 } else { f64::INFINITY };
        }
        self.quad_error / self.value.abs()
    }

    fn scaled(self, factor: f64) -> Self {
        DensityValue {
            value: self.value * factor,
            reduced: self.reduced * factor,
            quad_error: self.quad_error * factor,
            branch: self.branch,
        }
    }
}

/// Numerical settings for density evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOptions {
    /// Tolerance of the outer `v`-integral.
    pub tolerance: Tolerance,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions {
            tolerance: Tolerance {
                rel: 1e-11,
                abs: 0.0,
                max_subdivisions: 2000,
            },
        }
    }
}

impl Kernel {
    /// `q̂(t)` with the default branch choice: the closed form at `μ = 1/2`,
    /// the plain representation for `μ < 1/2` or `t ≤ x`, the Taylor-reduced
    /// one otherwise.
    pub fn density(&self, t: f64) -> Result<DensityValue> {
        self.density_with(t, self.default_branch(t), &DensityOptions::default())
    }

    pub fn default_branch(&self, t: f64) -> Branch {
        let mu = self.mu();
        if mu == 0.5 {
            Branch::ClosedFormHalf
        } else if mu < 0.5 || t <= self.x() {
            Branch::Rep1
        } else {
            Branch::Rep3
        }
    }

    /// `q̂(t)` through a chosen branch. `Rep3` requires `μ ≥ 1/2` and
    /// `ClosedFormHalf` requires `μ = 1/2`.
    pub fn density_with(&self, t: f64, branch: Branch, opts: &DensityOptions) -> Result<DensityValue> {
        let pt = EvalPoint::new(self.x(), t)?;
        let mu = self.mu();
        let front = pt.lambda / (2.0 * PI * t).sqrt();
        match branch {
            Branch::ClosedFormHalf => {
                if mu != 0.5 {
                    return Err(domain(format!("the closed form needs μ = 1/2, got {mu}")));
                }
                Ok(DensityValue::from_reduced(front / t, 0.0, &pt, branch))
            }
            Branch::Rep1 => {
                let lead = self.x().powf(mu - 0.5) / t;
                let r = self.rep1_integral(t, &opts.tolerance)?;
                let bracket = lead + r.value;
                let err = r.abs_error_estimate + self.table_error() * r.value.abs();
                Ok(DensityValue::from_reduced(front * bracket, err / bracket, &pt, branch))
            }
            Branch::Rep3 => {
                if mu < 0.5 {
                    return Err(domain(format!("the Taylor-reduced form needs μ ≥ 1/2, got {mu}")));
                }
                let r = self.rep3_integral(t, &opts.tolerance)?;
                let err = r.abs_error_estimate + self.table_error() * r.value.abs();
                Ok(DensityValue::from_reduced(front * r.value, err / r.value, &pt, branch))
            }
        }
    }

    /// Where `e^{−κ/2t}` underflows: beyond this point every integrand is a
    /// polynomial in `v` times `w`.
    pub(crate) fn gaussian_cutoff(&self, t: f64) -> f64 {
        let l = self.lambda();
        let k = 2.0 * EXP_UNDERFLOW * t;
        k / ((l * l + k).sqrt() + l)
    }

    /// `v` with `κ(v) = 2t`.
    pub(crate) fn unit_kappa(&self, t: f64) -> f64 {
        let l = self.lambda();
        2.0 * t / ((l * l + 2.0 * t).sqrt() + l)
    }

    fn time_breaks(&self, t: f64, end: f64) -> Vec<f64> {
        let s = self.unit_kappa(t);
        let mut extra = vec![0.125 * s, s, 8.0 * s, 64.0 * s];
        // At large t the first time scale is far beyond where w decays; a
        // single panel out to it puts every node in the underflowed region.
        let mut b = 8.0 * self.x();
        while b < 0.125 * s {
            extra.push(b);
            b *= 8.0;
        }
        self.breakpoints(end, &extra)
    }

    /// `∫₀^∞ (e^{−κ/2t} − 1) w dv`.
    fn rep1_integral(&self, t: f64, tol: &Tolerance) -> Result<QuadResult> {
        let lambda = self.lambda();
        let end = self.gaussian_cutoff(t);
        let body = integrate_with_breaks(
            |v| {
                let z = kappa(lambda, v) / (2.0 * t);
                (-z).exp_m1() * self.w(v)
            },
            &self.time_breaks(t, end),
            tol,
        )?;
        let tail = -self.tail_moment(0, end)?;
        Ok(QuadResult {
            value: body.value + tail,
            ..body
        })
    }

    /// `∫₀^∞ R_l(κ/2t) w dv` with `R_l` the Taylor remainder of `e^{−z}`.
    fn rep3_integral(&self, t: f64, tol: &Tolerance) -> Result<QuadResult> {
        let lambda = self.lambda();
        let l = self.index().l;
        let end = self.gaussian_cutoff(t);
        let body = integrate_with_breaks(
            |v| taylor_remainder_exp(kappa(lambda, v) / (2.0 * t), l) * self.w(v),
            &self.time_breaks(t, end),
            tol,
        )?;
        // Beyond the cutoff R_l(z) = −Σ_{j≤l} (−z)^j/j!; expand in powers of v.
        let poly = taylor_head_in_v(lambda, t, l);
        let tail = -self.tail_polynomial(&poly, end)?;
        Ok(QuadResult {
            value: body.value + tail,
            ..body
        })
    }

    /// `∫₀^∞ κ^p w(v) dv` for `p ∈ {0, 1}`: quadrature up to `10³x` and the
    /// closed-form tail beyond.
    pub fn moment(&self, p: u32) -> Result<QuadResult> {
        if p > 1 {
            return Err(domain(format!("only the moments p = 0, 1 are defined, got {p}")));
        }
        if p == 1 && self.mu() <= 0.5 {
            return Err(domain("the first κ-moment of w needs μ > 1/2"));
        }
        let lambda = self.lambda();
        let end = 1e3 * self.x();
        let body = integrate_with_breaks(
            |v| kappa(lambda, v).powi(p as i32) * self.w(v),
            &self.breakpoints(end, &[10.0, 100.0]),
            &Tolerance::new(1e-11, 1e-300),
        )?;
        let tail = if p == 0 {
            self.tail_moment(0, end)?
        } else {
            self.tail_polynomial(&[0.0, 2.0 * lambda, 1.0], end)?
        };
        Ok(QuadResult {
            value: body.value + tail,
            ..body
        })
    }

    /// `∫₀^∞ e^{−rv} w(v) dv` by quadrature.
    pub fn laplace(&self, r: f64) -> Result<QuadResult> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(domain(format!("Laplace variable must be positive, got {r}")));
        }
        let mut breaks = self.breakpoints(50.0 / r, &[1.0 / r]);
        breaks.push(f64::INFINITY);
        integrate_with_breaks(|v| (-r * v).exp() * self.w(v), &breaks, &Tolerance::new(1e-11, 1e-300))
    }

    /// `E(t) = t x^{1/2−μ} ∫₀^∞ e^{−κ/2t} w dv`, the remainder in
    /// `q̂ = λ e^{−λ²/2t}/(√(2π) t^{3/2}) x^{μ−1/2} (1 + (1−4μ²)/8 · t/x + E)`.
    pub fn smalltime_remainder(&self, t: f64) -> Result<f64> {
        EvalPoint::new(self.x(), t)?;
        let lambda = self.lambda();
        let end = self.gaussian_cutoff(t);
        let r = integrate_with_breaks(
            |v| (-kappa(lambda, v) / (2.0 * t)).exp() * self.w(v),
            &self.time_breaks(t, end),
            &Tolerance::new(1e-11, 1e-300),
        )?;
        Ok(t * self.x().powf(0.5 - self.mu()) * r.value)
    }
}

/// Coefficients in `v` of `Σ_{j≤l} (−κ/2t)^j / j!`, `κ = 2λv + v²`.
fn taylor_head_in_v(lambda: f64, t: f64, l: usize) -> Vec<f64> {
    let mut poly = vec![0.0; 2 * l + 1];
    let mut jfact = 1.0;
    for j in 0..=l {
        if j > 0 {
            jfact *= j as f64;
        }
        let c = (-1.0 / (2.0 * t)).powi(j as i32) / jfact;
        // κ^j = Σ_k C(j,k) (2λ)^{j−k} v^{j+k}
        let mut binom = 1.0;
        for k in 0..=j {
            if k > 0 {
                binom *= (j - k + 1) as f64 / k as f64;
            }
            poly[j + k] += c * binom * (2.0 * lambda).powi((j - k) as i32);
        }
    }
    poly
}

/// `e^{−z} − Σ_{j=0}^{l} (−z)^j/j!` without cancellation: the alternating
/// tail series for `z < l + 1`, direct subtraction otherwise. The result has
/// the sign of `(−1)^{l+1}`.
///
/// ```
/// use besselhit::density::taylor_remainder_exp;
/// assert_eq!(taylor_remainder_exp(0.0, 2), 0.0);
/// let r = taylor_remainder_exp(1e-8, 1);
/// assert!((r - 5e-17).abs() < 1e-24);
/// ```
pub fn taylor_remainder_exp(z: f64, l: usize) -> f64 {
    if z < l as f64 + 1.0 {
        // Σ_{j>l} (−z)^j / j!, stopping once terms no longer change the sum.
        let mut term = 1.0;
        for j in 1..=l + 1 {
            term *= -z / j as f64;
        }
        let mut sum = term;
        let mut j = l + 1;
        loop {
            j += 1;
            term *= -z / j as f64;
            let next = sum + term;
            if next == sum {
                return sum;
            }
            sum = next;
        }
    }
    let mut head = 0.0;
    let mut term = 1.0;
    for j in 0..=l {
        if j > 0 {
            term *= -z / j as f64;
        }
        head += term;
    }
    (-z).exp() - head
}

/// `(x/a, t/a²)`: the hitting time of `a` from `x` has density
/// `a^{−2} q̂_{x/a}(t/a²)`.
///
/// ```
/// use besselhit::density::reduce_scaling;
/// assert_eq!(reduce_scaling(4.0, 2.0, 8.0).unwrap(), (2.0, 2.0));
/// assert_eq!(reduce_scaling(1.5, 0.5, 1.0).unwrap(), (3.0, 4.0));
/// ```
pub fn reduce_scaling(x: f64, a: f64, t: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && x > a && x.is_finite()) {
        return Err(domain(format!("scaling needs x > a > 0, got x = {x}, a = {a}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be non-negative, got {t}")));
    }
    Ok((x / a, t / (a * a)))
}

/// The hitting time `T_1` of a Bessel process with a signed index, started
/// at `x > 1`.
#[derive(Debug, Clone)]
pub struct HittingTime {
    index: BesselIndex,
    kernel: Kernel,
}

impl HittingTime {
    /// ```
    /// use besselhit::HittingTime;
    /// let h = HittingTime::new(-0.5, 2.0).unwrap();
    /// let q = h.density(1.0).unwrap().value;
    /// assert!((q - (-0.5f64).exp() / (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-15);
    /// ```
    pub fn new(signed_index: f64, x: f64) -> Result<Self> {
        let index = BesselIndex::new(signed_index)?;
        let kernel = Kernel::new(&index, x)?;
        Ok(HittingTime { index, kernel })
    }

    pub fn index(&self) -> &BesselIndex {
        &self.index
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn x(&self) -> f64 {
        self.kernel.x()
    }

    /// `x^{−2μ}` for a positive index, 1 otherwise.
    pub fn flip_factor(&self) -> f64 {
        if self.index.signed_index > 0.0 {
            self.x().powf(-2.0 * self.index.mu)
        } else {
            1.0
        }
    }

    /// `P(T_1 < ∞)`.
    pub fn hit_probability(&self) -> f64 {
        self.flip_factor()
    }

    /// Density of `T_1` at `t`.
    pub fn density(&self, t: f64) -> Result<DensityValue> {
        Ok(self.kernel.density(t)?.scaled(self.flip_factor()))
    }

    pub fn density_with(&self, t: f64, branch: Branch, opts: &DensityOptions) -> Result<DensityValue> {
        Ok(self.kernel.density_with(t, branch, opts)?.scaled(self.flip_factor()))
    }
}

/// Density of `T_1` for the process with the given signed index.
///
/// ```
/// use besselhit::density::density_signed;
/// let q = density_signed(0.5, 2.0, 1.0).unwrap();
/// assert!((q.value - 0.5 * 0.24197072451914337).abs() < 1e-15);
/// ```
pub fn density_signed(signed_index: f64, x: f64, t: f64) -> Result<DensityValue> {
    HittingTime::new(signed_index, x)?.density(t)
}

/// `q̂`: density of `T_1` for the index `−idx.mu`.
pub fn density(idx: &BesselIndex, pt: &EvalPoint) -> Result<DensityValue> {
    Kernel::new(idx, pt.x)?.density(pt.t)
}

/// `P(t < T_1 < ∞)` for the signed index; at `t = 0` the total hitting
/// probability.
pub fn cdf_tail(signed_index: f64, x: f64, t: f64) -> Result<f64> {
    Ok(HittingTime::new(signed_index, x)?.survival(t)?.value)
}

/// `x^{μ−1/2}(μ² − 1/4)/(2x)` for `p = 0` and `2x^{μ−1/2}` for `p = 1`:
/// the closed forms of `∫ κ^p w dv`.
pub fn moment_identity(mu: f64, x: f64, p: u32) -> Result<f64> {
    check_start(x)?;
    let base = x.powf(mu - 0.5);
    match p {
        0 => Ok(base * (mu * mu - 0.25) / (2.0 * x)),
        1 if mu > 0.5 => Ok(2.0 * base),
        1 => Err(domain("the first κ-moment of w needs μ > 1/2")),
        _ => Err(domain(format!("only the moments p = 0, 1 are defined, got {p}"))),
    }
}

/// Closed form of `∫₀^∞ e^{−rv} w(v) dv`:
/// `(x^{μ−1/2}/λ)[r e^{λr} √x K_μ(xr)/K_μ(r) − r + (μ² − 1/4)λ/(2x)]`.
pub fn laplace_identity(mu: f64, x: f64, r: f64) -> Result<f64> {
    check_start(x)?;
    if !(r > 0.0) {
        return Err(domain(format!("Laplace variable must be positive, got {r}")));
    }
    let lambda = x - 1.0;
    // e^{λr} K_μ(xr)/K_μ(r) is the ratio of the scaled functions.
    let ratio = bessel_k_scaled(mu, x * r)? / bessel_k_scaled(mu, r)?;
    let bracket = r * x.sqrt() * ratio - r + (mu * mu - 0.25) * lambda / (2.0 * x);
    Ok(x.powf(mu - 0.5) / lambda * bracket)
}

/// Numeric `∫ κ^p w dv` for the order `mu`.
pub fn w_moment(mu: f64, x: f64, p: u32) -> Result<QuadResult> {
    Kernel::new(&BesselIndex::from_order(mu)?, x)?.moment(p)
}

/// Numeric `∫ e^{−rv} w dv` for the order `mu`.
pub fn w_laplace(mu: f64, x: f64, r: f64) -> Result<QuadResult> {
    Kernel::new(&BesselIndex::from_order(mu)?, x)?.laplace(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_sign_and_accuracy() {
        for l in 0..7 {
            for j in 0..200 {
                let z = 10f64.powf(-10.0 + 13.0 * j as f64 / 199.0);
                let r = taylor_remainder_exp(z, l);
                let sign = if l % 2 == 0 { -1.0 } else { 1.0 };
                assert!(sign * r >= 0.0, "l={l} z={z} r={r}");
            }
        }
        // z = 2, l = 1: e^{−2} − 1 + 2
        assert!((taylor_remainder_exp(2.0, 1) - ((-2f64).exp() + 1.0)).abs() < 1e-15);
        // Series branch against direct subtraction where both are safe.
        let direct = (-0.9f64).exp() - 1.0 + 0.9;
        assert!((taylor_remainder_exp(0.9, 1) - direct).abs() < 1e-15);
    }

    #[test]
    fn taylor_head_expansion() {
        let (lambda, t, l) = (1.5, 3.0, 3);
        let poly = taylor_head_in_v(lambda, t, l);
        for v in [0.1, 1.0, 4.0] {
            let z = kappa(lambda, v) / (2.0 * t);
            let direct: f64 = (0..=l)
                .map(|j| (-z).powi(j as i32) / (1..=j).map(|k| k as f64).product::<f64>())
                .sum();
            let via: f64 = poly.iter().enumerate().map(|(m, a)| a * v.powi(m as i32)).sum();
            assert!((direct - via).abs() < 1e-13 * direct.abs().max(1.0));
        }
    }
}
