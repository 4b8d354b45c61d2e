//! Zeros of `K_μ` in the plane cut along the negative real axis.
//!
//! For `μ = m + 1/2` the zeros are the roots of the reverse Bessel
//! polynomial `θ_m(z) = Σ_k (m+k)!/(k!(m−k)!) z^{m−k}/2^k`, found as
//! companion-matrix eigenvalues and polished by Newton's method. For other
//! orders the zeros are followed by continuation in `μ`, starting from the
//! half-integer order `k + 1/2` that has the same number `k` of zeros.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::special::{bessel_k_complex, bessel_k_complex_scaled_any, half_integer_coefficients, half_integer_degree};

/// Largest order accepted by [`find_zeros`].
pub const MAX_ORDER: f64 = 6.0;

/// Largest continuation step in `μ`.
const STEP: f64 = 0.05;

/// The zeros of `K_μ`, closed under conjugation, ordered by decreasing
/// imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    pub mu: f64,
    pub zeros: Vec<Complex64>,
}

impl ZeroSet {
    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    /// `−max Re z_i`, the exponential decay rate of the zero-sum part of
    /// the kernel; `None` without zeros.
    pub fn decay_rate(&self) -> Option<f64> {
        self.zeros.iter().map(|z| -z.re).reduce(f64::min)
    }
}

/// Number of zeros of `K_μ` off the cut: `μ − 1/2` when that is a
/// non-negative integer, otherwise the even integer closest to `μ − 1/2`.
///
/// Away from half-integers `μ − 1/2` is never an odd integer, so the
/// "closest even integer" is always unique.
///
/// ```
/// use besselhit::zeros::count_zeros;
/// assert_eq!(count_zeros(0.0), 0);
/// assert_eq!(count_zeros(2.5), 2);
/// assert_eq!(count_zeros(2.0), 2);
/// ```
pub fn count_zeros(mu: f64) -> usize {
    if let Some(m) = half_integer_degree(mu) {
        return m;
    }
    let s = mu - 0.5;
    if s <= 0.0 {
        return 0;
    }
    (2.0 * (s / 2.0).round()) as usize
}

/// All zeros of `K_μ` for `0 ≤ μ ≤ 6`. Each returned zero satisfies
/// `|K_μ(z)| < tol`.
pub fn find_zeros(mu: f64, tol: f64) -> Result<ZeroSet> {
    if !(0.0..=MAX_ORDER).contains(&mu) {
        return Err(domain(format!("zero search supports 0 ≤ μ ≤ {MAX_ORDER}, got {mu}")));
    }
    if !(tol >= 1e-12) {
        return Err(domain(format!("zero tolerance must be at least 1e-12, got {tol}")));
    }
    let upper = if let Some(m) = half_integer_degree(mu) {
        half_integer_upper_zeros(m)?
    } else {
        let k = count_zeros(mu);
        if k == 0 {
            Vec::new()
        } else {
            continue_zeros(k, mu)?
        }
    };

    let mut zeros = Vec::with_capacity(2 * upper.len());
    for z in upper {
        if z.im == 0.0 {
            zeros.push(z);
        } else {
            zeros.push(z);
            zeros.push(z.conj());
        }
    }
    zeros.sort_by(|a, b| b.im.total_cmp(&a.im).then(a.re.total_cmp(&b.re)));

    for z in &zeros {
        let r = residual(mu, *z)?;
        if !(r < tol) {
            return Err(Error::ZeroSearch { mu, seed: *z });
        }
    }
    Ok(ZeroSet { mu, zeros })
}

/// `|K_μ(z)|`. Real negative zeros only occur for half-integer order,
/// where `K_μ` has no branch cut apart from the `√z` prefactor.
pub fn residual(mu: f64, z: Complex64) -> Result<f64> {
    Ok(bessel_k_complex(mu, z)?.norm())
}

/// Roots of `θ_m` with `Im z ≥ 0`; real roots have their imaginary part set to 0.
fn half_integer_upper_zeros(m: usize) -> Result<Vec<Complex64>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    let poly = reverse_bessel_polynomial(m);
    // Monic companion matrix: p(z) = z^m + a_{m−1} z^{m−1} + … + a_0,
    // `poly[j]` is the coefficient of z^j.
    let mut c = DMatrix::<f64>::zeros(m, m);
    for i in 1..m {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..m {
        c[(i, m - 1)] = -poly[i];
    }
    let eig = c.complex_eigenvalues();
    let mut out = Vec::new();
    for mut z in eig.iter().copied() {
        for _ in 0..50 {
            let (p, dp) = horner(&poly, z);
            let step = p / dp;
            z -= step;
            if step.norm() <= 1e-16 * z.norm() {
                break;
            }
        }
        if z.im.abs() < 1e-12 * z.norm() {
            z.im = 0.0;
        }
        if z.im >= 0.0 {
            out.push(z);
        }
    }
    let expected = m.div_ceil(2);
    if out.len() != expected {
        return Err(Error::ZeroSearch {
            mu: m as f64 + 0.5,
            seed: out.first().copied().unwrap_or_default(),
        });
    }
    Ok(out)
}

/// Coefficients of `θ_m`, lowest degree first; monic.
pub(crate) fn reverse_bessel_polynomial(m: usize) -> Vec<f64> {
    let c = half_integer_coefficients(m);
    let mut poly = vec![0.0; m + 1];
    for (k, ck) in c.iter().enumerate() {
        poly[m - k] = ck / 2f64.powi(k as i32);
    }
    poly
}

fn horner(poly: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in poly.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Newton step for `K_μ` using `K'_μ = −K_{μ−1} − (μ/z) K_μ`, in scaled form.
fn newton(mu: f64, mut z: Complex64) -> Result<Complex64> {
    let seed = z;
    for _ in 0..60 {
        let k = bessel_k_complex_scaled_any(mu, z)?;
        let km1 = bessel_k_complex_scaled_any((mu - 1.0).abs(), z)?;
        let dk = -km1 - k * (mu / z);
        let step = k / dk;
        z -= step;
        if !(z.re.is_finite() && z.im.is_finite()) || z.im <= 0.0 {
            return Err(Error::ZeroSearch { mu, seed });
        }
        // The series loses a few digits near integer orders, so demanding
        // machine precision here would stall.
        if step.norm() <= 1e-13 * z.norm() {
            return Ok(z);
        }
    }
    Err(Error::ZeroSearch { mu, seed })
}

/// Upper-half-plane zeros for non-half-integer `μ` with `k` (even, > 0) zeros.
fn continue_zeros(k: usize, mu: f64) -> Result<Vec<Complex64>> {
    let start = k as f64 + 0.5;
    let mut zeros = half_integer_upper_zeros(k)?;
    let steps = ((mu - start).abs() / STEP).ceil().max(1.0) as usize;
    let mut current = start;
    let mut history: Option<(Vec<Complex64>, f64)> = None;
    for j in 1..=steps {
        let mut m = start + (mu - start) * j as f64 / steps as f64;
        if j == steps {
            m = mu;
        } else {
            // Stay clear of the unstable band around integer orders.
            let gap = (m - m.round()).abs();
            if gap > 0.0 && gap < 1e-4 {
                m += 2e-4 * (mu - start).signum();
            }
        }
        let guesses: Vec<Complex64> = match &history {
            Some((old, old_mu)) => zeros
                .iter()
                .zip(old)
                .map(|(z, zo)| {
                    let g = *z + (*z - *zo) * ((m - current) / (current - old_mu));
                    if g.im > 0.0 {
                        g
                    } else {
                        *z
                    }
                })
                .collect(),
            None => zeros.clone(),
        };
        let next = guesses.iter().map(|g| newton(m, *g)).collect::<Result<Vec<_>>>()?;
        history = Some((std::mem::replace(&mut zeros, next), current));
        current = m;
    }
    Ok(zeros)
}
