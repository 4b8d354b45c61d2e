//! Modified Bessel functions.

mod complex;
mod real;

pub use complex::{bessel_k_complex, bessel_k_complex_scaled};
pub(crate) use complex::{
    half_integer_coefficients, half_integer_degree, scaled_unchecked as bessel_k_complex_scaled_any,
};
pub use real::{
    bessel_i, bessel_i_scaled, bessel_ik_scaled, bessel_ik_scaled_pair, bessel_k, bessel_k_scaled, wronskian_residual,
    ScaledPair,
};

/// Γ(x) for real `x` away from the poles.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}
