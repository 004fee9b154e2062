//! Exact values of ζ(2n) from a rectangle-contour recursion, checked against
//! the Bernoulli closed form, plus numerical verification of every integral
//! identity the recursion is built from.
//!
//! * [`exact`]: rational arithmetic route (recursion and Euler's formula).
//! * [`pi`]: truncated decimal expansions backed by a Machin-formula π.
//! * [`quadrature`]: adaptive Gauss–Kronrod engine and the integrands.
//! * [`identities`]: identity reports, contour closure, odd-zeta extraction.
//! * [`cli`]: the `zeta-recur` command-line front end.

pub mod cli;
pub mod error;
pub mod exact;
pub mod identities;
pub mod pi;
pub mod quadrature;
pub mod rational;

pub use error::ZetaError;
pub use exact::{
    alpha_coeff, bernoulli, binomial, gamma_int, zeta_even_euler, zeta_even_recursive, AlphaCoeff,
    ZetaEvenValue,
};
pub use identities::{ContourReport, IdentityId, IdentityReport, Value};
pub use pi::{pi_digits, render_decimal};
pub use quadrature::{QuadratureResult, Segment};
pub use rational::Rational;
