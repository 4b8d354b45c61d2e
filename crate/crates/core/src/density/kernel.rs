//! The kernel `w = w₁ + w₂` of the integral representation of the
//! hitting-time density.
//!
//! `w₁` is a finite sum over the zeros `z_i` of `K_μ`,
//!
//! ```text
//! w₁(v) = −(x^μ/λ) Σ z_i e^{λ z_i} K_μ(x z_i) / K_{μ−1}(z_i) · e^{z_i v},
//! ```
//!
//! and `w₂` is a Laplace transform in `u` of a ratio of Bessel functions,
//!
//! ```text
//! w₂(v) = −cos(πμ)(x^μ/λ) ∫₀^∞ S(u) e^{−λu} u e^{−vu} / D(u) du,
//! S(u) = I_μ(xu)K_μ(u) − I_μ(u)K_μ(xu),
//! D(u) = cos²(πμ)K_μ(u)² + (πI_μ(u) + sin(πμ)K_μ(u))².
//! ```
//!
//! The `u`-integrand does not depend on `v` apart from `e^{−vu}`, so it is
//! tabulated once per `(μ, x)` on a Gauss–Kronrod product rule and `w₂(v)`
//! becomes a sum of exponentials. The same table gives `∫_V^∞ v^m w(v) dv`
//! in closed form, which is how every `v`-integral in this crate handles its
//! tail.

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::index::{check_start, BesselIndex};
use crate::quadrature::{gk21_tabulated, integrate_with_breaks, QuadResult, Tolerance};
use crate::special::{bessel_ik_scaled, bessel_k_complex_scaled_any};
use crate::zeros::find_zeros;

/// Lower end of the tabulated `u` range. Below it the integrand is replaced
/// by its leading power `u^{1+2μ}`.
const U_MIN: f64 = 1.0 / (1u64 << 54) as f64;
/// Upper end of the tabulated `u` range; the integrand carries `e^{−2u}`.
const U_MAX: f64 = 25.0;
/// Per-panel relative accuracy of the table.
const TABLE_REL_TOL: f64 = 1e-13;
const MAX_TABLE_PANELS: usize = 4000;
/// `e^{−z}` is exactly zero in `f64` beyond this.
pub(crate) const EXP_UNDERFLOW: f64 = 746.0;

/// `weight · Re(coef · e^{zero·v})`; conjugate pairs are folded into one term.
#[derive(Debug, Clone, Copy, PartialEq)]
struct ZeroTerm {
    zero: Complex64,
    coef: Complex64,
    weight: f64,
}

/// The representation kernel for one order `μ ≥ 0` and start point `x > 1`.
#[derive(Debug, Clone)]
pub struct Kernel {
    index: BesselIndex,
    x: f64,
    lambda: f64,
    zero_terms: Vec<ZeroTerm>,
    /// `(u, c)` with `w₂(v) ≈ Σ c e^{−vu}`, sorted by `u`.
    nodes: Vec<(f64, f64)>,
    /// `a` such that the `w₂` integrand is `a u^{1+2μ} e^{−vu}` for `u < U_MIN`.
    below_table: f64,
    table_error: f64,
}

impl Kernel {
    /// Builds the kernel for the order `index.mu` (the sign of the index is
    /// ignored).
    ///
    /// ```
    /// use besselhit::{BesselIndex, Kernel};
    /// let k = Kernel::new(&BesselIndex::from_order(1.5).unwrap(), 2.0).unwrap();
    /// // ∫ w = x^{μ−1/2}(μ² − 1/4)/(2x) = 1 for μ = 3/2, x = 2.
    /// assert!((k.tail_moment(0, 0.0).unwrap() - 1.0).abs() < 1e-12);
    /// ```
    pub fn new(index: &BesselIndex, x: f64) -> Result<Self> {
        check_start(x)?;
        let mu = index.mu;
        let lambda = x - 1.0;
        let zero_terms = zero_terms(mu, x, lambda)?;
        let (nodes, below_table, table_error) = if index.half_integer {
            (Vec::new(), 0.0, 0.0)
        } else {
            build_table(mu, x, lambda)?
        };
        Ok(Kernel {
            index: *index,
            x,
            lambda,
            zero_terms,
            nodes,
            below_table,
            table_error,
        })
    }

    pub fn index(&self) -> &BesselIndex {
        &self.index
    }

    pub fn mu(&self) -> f64 {
        self.index.mu
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The zeros of `K_μ` with non-negative imaginary part.
    pub fn zeros(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.zero_terms.iter().map(|t| t.zero)
    }

    /// Estimated relative error of the `w₂` table.
    pub fn table_error(&self) -> f64 {
        self.table_error
    }

    /// `w₁(v)`, the zero-sum part; 0 when `K_μ` has no zeros.
    pub fn w1(&self, v: f64) -> f64 {
        self.zero_terms
            .iter()
            .map(|t| t.weight * (t.coef * (t.zero * v).exp()).re)
            .sum()
    }

    /// `−max Re z_i`, the exponential decay rate of `w₁`; `None` without zeros.
    pub fn decay_rate(&self) -> Option<f64> {
        self.zero_terms.iter().map(|t| -t.zero.re).reduce(f64::min)
    }

    /// `w₁(v) e^{θv}`, finite even where `w₁(v)` itself underflows.
    pub fn w1_scaled(&self, v: f64, theta: f64) -> f64 {
        self.zero_terms
            .iter()
            .map(|t| t.weight * (t.coef * ((t.zero + theta) * v).exp()).re)
            .sum()
    }

    /// `w₂(v)` from the tabulated rule; identically 0 for half-integer `μ`.
    pub fn w2(&self, v: f64) -> f64 {
        let mut sum = 0.0;
        for &(u, c) in &self.nodes {
            let e = v * u;
            if e > EXP_UNDERFLOW {
                break;
            }
            sum += c * (-e).exp();
        }
        sum
    }

    /// `w(v) = w₁(v) + w₂(v)`.
    pub fn w(&self, v: f64) -> f64 {
        self.w1(v) + self.w2(v)
    }

    /// `w₂(v)` by adaptive quadrature of the defining `u`-integral. Much
    /// slower than [`Kernel::w2`]; kept as an independent check of the table.
    pub fn w2_adaptive(&self, v: f64, tol: &Tolerance) -> Result<QuadResult> {
        if self.index.half_integer {
            return Ok(QuadResult {
                value: 0.0,
                abs_error_estimate: 0.0,
                subdivisions: 0,
            });
        }
        let (mu, x, lambda) = (self.index.mu, self.x, self.lambda);
        let pref = prefactor(mu, x, lambda);
        // Geometric breaks from the decay scale 1/(1+v) up to 1, so that no
        // panel sees only underflowed values of e^{−vu}.
        let mut breaks = vec![0.0];
        let mut b = 0.5 / (1.0 + v);
        while b < 1.0 {
            breaks.push(b);
            b *= 4.0;
        }
        breaks.extend([1.0, 4.0, f64::INFINITY]);
        let r = integrate_with_breaks(
            |u| {
                let h = table_integrand(mu, x, lambda, u).unwrap_or(f64::NAN);
                if h == 0.0 {
                    0.0
                } else {
                    h * (-v * u).exp()
                }
            },
            &breaks,
            tol,
        )?;
        Ok(QuadResult {
            value: pref * r.value,
            abs_error_estimate: pref.abs() * r.abs_error_estimate,
            subdivisions: r.subdivisions,
        })
    }

    /// `∫_V^∞ v^m w(v) dv` in closed form from the zeros and the table.
    ///
    /// Converges when `m < 1 + 2μ`, or for any `m` when `μ` is a
    /// half-integer (then `w` decays exponentially).
    pub fn tail_moment(&self, m: usize, from: f64) -> Result<f64> {
        if !(from >= 0.0 && from.is_finite()) {
            return Err(domain(format!(
                "tail start must be finite and non-negative, got {from}"
            )));
        }
        let mut sum = 0.0;
        for t in &self.zero_terms {
            sum += t.weight * (t.coef * exp_moment_complex(m, from, -t.zero)).re;
        }
        if self.nodes.is_empty() {
            return Ok(sum);
        }
        let power = 1.0 + 2.0 * self.index.mu - m as f64;
        if power <= 0.0 {
            return Err(domain(format!("∫ v^{m} w(v) dv diverges for μ = {}", self.index.mu)));
        }
        for &(u, c) in &self.nodes {
            sum += c * exp_moment(m, from, u);
        }
        // ∫₀^{U_MIN} a u^{1+2μ} ∫_V^∞ v^m e^{−vu} dv du with V·U_MIN ≪ 1.
        sum += self.below_table * factorial(m) * U_MIN.powf(power) / power;
        Ok(sum)
    }

    /// `Σ_m coeffs[m] ∫_V^∞ v^m w(v) dv`.
    pub fn tail_polynomial(&self, coeffs: &[f64], from: f64) -> Result<f64> {
        let mut sum = 0.0;
        for (m, &a) in coeffs.iter().enumerate() {
            if a != 0.0 {
                sum += a * self.tail_moment(m, from)?;
            }
        }
        Ok(sum)
    }

    /// Breakpoints on `[0, end]` that separate the scales of `w`: the
    /// decay of the zero terms, `λ` and `x`, plus the caller's own scales.
    pub(crate) fn breakpoints(&self, end: f64, extra: &[f64]) -> Vec<f64> {
        let mut pts = vec![0.0, end];
        let mut scales = vec![1.0, self.lambda, self.x];
        scales.extend_from_slice(extra);
        for s in scales {
            if s > 0.0 && s < end {
                pts.push(s);
            }
        }
        pts.sort_by(f64::total_cmp);
        pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs().max(1e-300));
        pts
    }
}

/// `−cos(πμ) x^μ / λ`.
fn prefactor(mu: f64, x: f64, lambda: f64) -> f64 {
    -(std::f64::consts::PI * mu).cos() * x.powf(mu) / lambda
}

/// `u S(u) e^{−λu} / D(u)` in scaled form; overflow-free for all `u > 0`.
pub(crate) fn table_integrand(mu: f64, x: f64, lambda: f64, u: f64) -> Result<f64> {
    use std::f64::consts::PI;
    let (iu, ku) = bessel_ik_scaled(mu, u)?;
    let (ixu, kxu) = bessel_ik_scaled(mu, x * u)?;
    let (s, c) = (PI * mu).sin_cos();
    let e2 = (-2.0 * u).exp();
    let ku2 = ku * e2;
    let num = ixu * ku - iu * kxu * (-2.0 * lambda * u).exp();
    let den = c * c * ku2 * ku2 + (PI * iu + s * ku2).powi(2);
    Ok(u * e2 * num / den)
}

fn zero_terms(mu: f64, x: f64, lambda: f64) -> Result<Vec<ZeroTerm>> {
    let set = find_zeros(mu, 1e-10)?;
    let scale = x.powf(mu) / lambda;
    let other = (mu - 1.0).abs();
    let coef = |z: Complex64| -> Result<Complex64> {
        // e^{λz} K_μ(xz) / K_{μ−1}(z) in scaled form: the exponentials cancel.
        let num = bessel_k_complex_scaled_any(mu, z * x)?;
        let den = bessel_k_complex_scaled_any(other, z)?;
        Ok(-scale * z * num / den)
    };
    let mut out = Vec::new();
    for &z in set.zeros.iter().filter(|z| z.im >= 0.0) {
        let c = coef(z)?;
        if z.im > 0.0 {
            let c_conj = coef(z.conj())?;
            debug_assert!(
                (c_conj - c.conj()).norm() <= 1e-10 * c.norm() + 1e-14,
                "zero-sum coefficients are not conjugate symmetric: {c} vs {c_conj}"
            );
            out.push(ZeroTerm {
                zero: z,
                coef: c,
                weight: 2.0,
            });
        } else {
            out.push(ZeroTerm {
                zero: z,
                coef: Complex64::new(c.re, 0.0),
                weight: 1.0,
            });
        }
    }
    Ok(out)
}

/// Nodes `(u, weight)`, the small-`u` coefficient and the estimated
/// relative error.
type Table = (Vec<(f64, f64)>, f64, f64);

/// Gauss–Kronrod product rule for `w₂`: geometric panels `[2^j, 2^{j+1}]`
/// below 1 and unit panels above, each bisected until its own relative
/// error is below `TABLE_REL_TOL`. Near `μ = 3/2, 7/2, 11/2` the integrand
/// has a narrow peak (a zero of `K_μ` leaving the cut) and the bisection
/// resolves it.
fn build_table(mu: f64, x: f64, lambda: f64) -> Result<Table> {
    let pref = prefactor(mu, x, lambda);
    let mut stack: Vec<(f64, f64, u32)> = Vec::new();
    let mut a = U_MIN;
    while a < 1.0 {
        stack.push((a, 2.0 * a, 0));
        a *= 2.0;
    }
    let mut k = 1.0;
    while k < U_MAX {
        stack.push((k, k + 1.0, 0));
        k += 1.0;
    }

    let mut failure = None;
    let mut h = |u: f64| match table_integrand(mu, x, lambda, u) {
        Ok(v) => v,
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let mut nodes = Vec::new();
    let (mut total, mut total_err) = (0.0, 0.0);
    let mut panels = 0usize;
    while let Some((a, b, depth)) = stack.pop() {
        let (value, err, rule) = gk21_tabulated(&mut h, a, b);
        panels += 1;
        if !value.is_finite() {
            break;
        }
        if err > TABLE_REL_TOL * value.abs() && depth < 40 && panels < MAX_TABLE_PANELS {
            let mid = 0.5 * (a + b);
            stack.push((a, mid, depth + 1));
            stack.push((mid, b, depth + 1));
            continue;
        }
        total += value.abs();
        total_err += err;
        nodes.extend(rule.iter().map(|&(u, w, f)| (u, pref * w * f)));
    }
    if let Some(e) = failure {
        return Err(e);
    }
    if !total.is_finite() || nodes.iter().any(|n| !n.1.is_finite()) {
        return Err(Error::Range(format!("w₂ table for μ = {mu}, x = {x} is not finite")));
    }
    nodes.sort_by(|p, q| p.0.total_cmp(&q.0));
    let below = pref * table_integrand(mu, x, lambda, U_MIN)? / U_MIN.powf(1.0 + 2.0 * mu);
    Ok((nodes, below, total_err / total))
}

/// `∫_V^∞ v^m e^{−sv} dv = e^{−sV} Σ_{k≤m} m!/k! V^k / s^{m−k+1}` for `s > 0`.
fn exp_moment(m: usize, from: f64, s: f64) -> f64 {
    let e = (-s * from).exp();
    if e == 0.0 {
        return 0.0;
    }
    let mut term = factorial(m) / s.powi(m as i32 + 1);
    let mut sum = term;
    for k in 1..=m {
        term *= from * s / k as f64;
        sum += term;
    }
    e * sum
}

/// Complex version of [`exp_moment`] for `Re s > 0`.
fn exp_moment_complex(m: usize, from: f64, s: Complex64) -> Complex64 {
    let e = (-s * from).exp();
    let mut term = factorial(m) / s.powi(m as i32 + 1);
    let mut sum = term;
    for k in 1..=m {
        term = term * s * (from / k as f64);
        sum += term;
    }
    e * sum
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|k| k as f64).product()
}
