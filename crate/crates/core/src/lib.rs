//! Amplitude distributions of quantum billiard eigenstates.
//!
//! The crate provides the special functions and quadrature needed to evaluate
//! closed-form characteristic functions and densities of the amplitude
//! Psi(X) of a billiard eigenfunction at a uniformly random point X, together
//! with the Monte Carlo and Fourier-inversion oracles used to check them.

pub mod billiards;
pub mod distributions;
pub mod error;
pub mod mcstats;
pub mod quadrature;
pub mod specialfn;

pub use error::{Error, Result};
