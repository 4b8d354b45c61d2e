//! Distribution function and survival probability of the hitting time.
//!
//! Integrating the representation over time under the `v`-integral gives
//! closed forms in `c = √(2t)`, `y₁ = λ/c`, `y₂ = (λ + v)/c`:
//!
//! ```text
//! ∫₀^t q̂ = x^{μ−1/2} erfc(y₁) − λc ∫ w(v) [G(y₁) − G(y₂)] dv
//! ∫_t^∞ q̂ = x^{μ−1/2} erf(y₁) − λc ∫ w(v) [v/c + G(y₂) − G(y₁)] dv
//! G(y) = e^{−y²}/√π − y erfc(y)
//! ```
//!
//! The second form needs `∫ v w` to converge, i.e. `μ > 1/2`; for `μ < 1/2`
//! the survival probability is `1 − ∫₀^t q̂`.

use std::f64::consts::PI;

use libm::{erf, erfc};

use super::kernel::Kernel;
use super::HittingTime;
use crate::error::{domain, Result};
use crate::quadrature::{integrate_with_breaks, QuadResult, Tolerance};

/// `G(y) = e^{−y²}/√π − y erfc(y)` for `y ≥ 0`, accurate also where the two
/// terms nearly cancel.
pub(crate) fn gauss_tail_gap(y: f64) -> f64 {
    let inv_sqrt_pi = 1.0 / PI.sqrt();
    if y < 2.0 {
        return (-y * y).exp() * inv_sqrt_pi - y * erfc(y);
    }
    let e = (-y * y).exp();
    if e == 0.0 {
        return 0.0;
    }
    // √π e^{y²} erfc(y) = 1/(y + r), so G(y) = e^{−y²}/√π · r/(y + r).
    let r = erfc_fraction_remainder(y);
    e * inv_sqrt_pi * r / (y + r)
}

/// `r` in `√π e^{y²} erfc(y) = 1/(y + r)`, by backward evaluation of
/// `r = (1/2)/(y + 1/(y + (3/2)/(y + 2/(y + …))))`.
fn erfc_fraction_remainder(y: f64) -> f64 {
    let depth = (400.0 / (y * y)).ceil() as usize + 12;
    let mut tail = 0.0;
    for n in (1..=depth).rev() {
        tail = (n as f64 * 0.5) / (y + tail);
    }
    tail
}

/// `y` beyond which `G(y)` and `erfc(y)` are zero in `f64`.
const Y_UNDERFLOW: f64 = 27.3;

fn time_tolerance() -> Tolerance {
    Tolerance::new(1e-11, 1e-300)
}

impl Kernel {
    /// `∫₀^t q̂(s) ds`.
    pub fn cdf_hat(&self, t: f64) -> Result<QuadResult> {
        check_time(t)?;
        let (x, lambda, mu) = (self.x(), self.lambda(), self.mu());
        if t == 0.0 {
            return Ok(exact(0.0));
        }
        let c = (2.0 * t).sqrt();
        let y1 = lambda / c;
        let lead = x.powf(mu - 0.5) * erfc(y1);
        if mu == 0.5 {
            return Ok(exact(lead));
        }
        let g1 = gauss_tail_gap(y1);
        let end = Y_UNDERFLOW * c - lambda;
        let body = self.time_body(end, c, |v| self.w(v) * (g1 - gauss_tail_gap((lambda + v) / c)))?;
        let tail = g1 * self.tail_moment(0, end.max(0.0))?;
        Ok(QuadResult {
            value: lead - lambda * c * (body.value + tail),
            abs_error_estimate: lambda * c * body.abs_error_estimate + self.table_error() * lead.abs(),
            subdivisions: body.subdivisions,
        })
    }

    /// `∫_t^∞ q̂(s) ds`. Uses the direct closed form for `μ > 1/2`,
    /// `1 − ∫₀^t q̂` for `μ < 1/2`, and `erf(y₁)` at `μ = 1/2`.
    pub fn tail_hat(&self, t: f64) -> Result<QuadResult> {
        check_time(t)?;
        let (x, lambda, mu) = (self.x(), self.lambda(), self.mu());
        if t == 0.0 {
            return Ok(exact(1.0));
        }
        if mu == 0.5 {
            return Ok(exact(erf(lambda / (2.0 * t).sqrt())));
        }
        if mu < 0.5 {
            let cdf = self.cdf_hat(t)?;
            return Ok(QuadResult {
                value: 1.0 - cdf.value,
                ..cdf
            });
        }
        let c = (2.0 * t).sqrt();
        let y1 = lambda / c;
        let lead = x.powf(mu - 0.5) * erf(y1);
        let g1 = gauss_tail_gap(y1);
        let end = Y_UNDERFLOW * c - lambda;
        let body = self.time_body(end, c, |v| self.w(v) * (v / c + gauss_tail_gap((lambda + v) / c) - g1))?;
        let from = end.max(0.0);
        let tail = self.tail_moment(1, from)? / c - g1 * self.tail_moment(0, from)?;
        Ok(QuadResult {
            value: lead - lambda * c * (body.value + tail),
            abs_error_estimate: lambda * c * body.abs_error_estimate + self.table_error() * lead.abs(),
            subdivisions: body.subdivisions,
        })
    }

    /// `∫_t^∞ q̂(s) ds` by quadrature in `y = log(s/t)`, where the power-law
    /// tail of `q̂` decays exponentially. Slow; an independent check of
    /// [`Kernel::tail_hat`].
    pub fn tail_by_time_quadrature(&self, t: f64, tol: &Tolerance) -> Result<QuadResult> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(domain(format!("time quadrature needs t > 0, got {t}")));
        }
        let mut failure = None;
        // The density peaks near s = λ²/3.
        let peak = (self.lambda() * self.lambda() / (3.0 * t)).ln();
        let mut breaks = vec![0.0];
        breaks.extend([peak - 3.0, peak, peak + 3.0].into_iter().filter(|&y| y > 0.0));
        breaks.push(f64::INFINITY);
        let r = integrate_with_breaks(
            |y| {
                let s = t * y.exp();
                if !s.is_finite() {
                    return 0.0;
                }
                match self.density(s) {
                    Ok(q) => q.value * s,
                    Err(e) => {
                        failure.get_or_insert(e);
                        f64::NAN
                    }
                }
            },
            &breaks,
            tol,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        r
    }

    /// `∫₀^{end} f` with breakpoints at the time scale `c`; empty when the
    /// closed-form tail covers everything.
    fn time_body<F: Fn(f64) -> f64>(&self, end: f64, c: f64, f: F) -> Result<QuadResult> {
        if end <= 0.0 {
            return Ok(exact(0.0));
        }
        let s = self.unit_kappa(0.5 * c * c);
        integrate_with_breaks(f, &self.breakpoints(end, &[c, s, 8.0 * s]), &time_tolerance())
    }
}

impl HittingTime {
    /// `P(T_1 ≤ t)`.
    pub fn cdf(&self, t: f64) -> Result<QuadResult> {
        let r = self.kernel().cdf_hat(t)?;
        Ok(scale(r, self.flip_factor()))
    }

    /// `P(t < T_1 < ∞)`; at `t = 0` the hitting probability.
    ///
    /// ```
    /// use besselhit::HittingTime;
    /// let h = HittingTime::new(0.5, 2.0).unwrap();
    /// assert_eq!(h.survival(0.0).unwrap().value, 0.5);
    /// let want = libm::erf(0.5f64.sqrt()) / 2.0;
    /// assert!((h.survival(1.0).unwrap().value - want).abs() < 1e-9);
    /// ```
    pub fn survival(&self, t: f64) -> Result<QuadResult> {
        let r = self.kernel().tail_hat(t)?;
        Ok(scale(r, self.flip_factor()))
    }
}

fn scale(r: QuadResult, f: f64) -> QuadResult {
    QuadResult {
        value: r.value * f,
        abs_error_estimate: r.abs_error_estimate * f,
        subdivisions: r.subdivisions,
    }
}

fn exact(value: f64) -> QuadResult {
    QuadResult {
        value,
        abs_error_estimate: 0.0,
        subdivisions: 0,
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain(format!("time must be non-negative and finite, got {t}")));
    }
    Ok(())
}
