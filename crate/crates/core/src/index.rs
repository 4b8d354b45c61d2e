//! The process index and evaluation points.

use crate::error::{domain, Result};
use crate::special::half_integer_degree;
use crate::zeros::{count_zeros, MAX_ORDER};

/// A Bessel process index together with the quantities the integral
/// representation derives from it.
///
/// `mu` is the non-negative order used by the representation; the process
/// index is `signed_index`, either `−mu` or `+mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselIndex {
    pub mu: f64,
    pub signed_index: f64,
    /// Number of zeros of `K_mu` off the negative real axis.
    pub k_mu: usize,
    /// Degree of the Taylor head removed in the large-time representation.
    pub l: usize,
    pub half_integer: bool,
}

impl BesselIndex {
    /// Index from the signed process index, `|signed_index| ≤ 6`.
    ///
    /// ```
    /// use besselhit::BesselIndex;
    /// let idx = BesselIndex::new(-1.25).unwrap();
    /// assert_eq!((idx.mu, idx.k_mu, idx.l), (1.25, 0, 1));
    /// assert_eq!(BesselIndex::new(2.5).unwrap().l, 2);
    /// ```
    pub fn new(signed_index: f64) -> Result<Self> {
        if !signed_index.is_finite() || signed_index.abs() > MAX_ORDER {
            return Err(domain(format!(
                "index must satisfy |index| ≤ {MAX_ORDER}, got {signed_index}"
            )));
        }
        let mu = signed_index.abs();
        let half = half_integer_degree(mu);
        let l = match half {
            Some(m) => m,
            None => (mu + 0.5).floor() as usize,
        };
        Ok(BesselIndex {
            mu,
            signed_index,
            k_mu: count_zeros(mu),
            l,
            half_integer: half.is_some(),
        })
    }

    /// The index `−mu`, whose hitting density the representation computes.
    pub fn from_order(mu: f64) -> Result<Self> {
        if !(mu >= 0.0) {
            return Err(domain(format!("order must be non-negative, got {mu}")));
        }
        Self::new(-mu)
    }

    /// `mu − 1/2`.
    pub fn excess(&self) -> f64 {
        self.mu - 0.5
    }
}

/// A start point `x > 1` and a time `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub x: f64,
    pub t: f64,
    /// Distance to the barrier, `x − 1`.
    pub lambda: f64,
}

impl EvalPoint {
    pub fn new(x: f64, t: f64) -> Result<Self> {
        check_start(x)?;
        if !(t > 0.0 && t.is_finite()) {
            return Err(domain(format!("time must be positive and finite, got {t}")));
        }
        Ok(EvalPoint { x, t, lambda: x - 1.0 })
    }

    /// `κ(v) = v(2λ + v)`.
    pub fn kappa(&self, v: f64) -> f64 {
        kappa(self.lambda, v)
    }
}

pub(crate) fn kappa(lambda: f64, v: f64) -> f64 {
    v * (2.0 * lambda + v)
}

pub(crate) fn check_start(x: f64) -> Result<()> {
    if !(x > 1.0 && x.is_finite()) {
        return Err(domain(format!("start point must satisfy x > 1, got {x}")));
    }
    Ok(())
}
