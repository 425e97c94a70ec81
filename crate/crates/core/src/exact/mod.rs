//! Exact scalars: rationals, Gaussian rationals and polar roots of unity.

mod complex;
mod gaussian;
mod polar;
pub mod rational;
mod serial;

pub use complex::{binomial, binomial_signed, ExactComplex, FloatApprox, ModulusClass};
pub use gaussian::GaussianRational;
pub use polar::PolarExact;
pub use rational::Rational;
pub use serial::{complex_from_json, gaussian_from_json};
