//! First hitting times of level 1 for Bessel processes: exact densities from
//! an integral representation, two-sided envelopes, survival probabilities,
//! Monte Carlo validation and the Poisson kernel of hyperbolic Brownian
//! motion with drift.

pub mod acceptance;
pub mod density;
pub mod envelopes;
pub mod error;
pub mod hyperbolic;
pub mod index;
pub mod monte_carlo;
pub mod quadrature;
pub mod special;
pub mod zeros;

pub use density::{Branch, DensityValue, HittingTime, Kernel};
pub use error::{Error, Result};
pub use index::{BesselIndex, EvalPoint};

// The guide's code blocks run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/densities.md")]
    mod densities {}
    #[doc = include_str!("../../../book/src/envelopes.md")]
    mod envelopes {}
    #[doc = include_str!("../../../book/src/zeros.md")]
    mod zeros {}
    #[doc = include_str!("../../../book/src/survival.md")]
    mod survival {}
    #[doc = include_str!("../../../book/src/monte_carlo.md")]
    mod monte_carlo {}
    #[doc = include_str!("../../../book/src/hyperbolic.md")]
    mod hyperbolic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/accuracy.md")]
    mod accuracy {}
}
