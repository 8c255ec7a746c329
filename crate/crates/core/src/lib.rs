//! Graph spectra, spectral distances and brute-force cospectrality.
//!
//! Graphs are small (at most 64 vertices, exhaustive work up to order 10).
//! Numeric spectra come from a Jacobi eigensolver; exact decisions such as
//! "are these two graphs cospectral" or "is lambda_2 exactly -1" go through
//! integer characteristic polynomials.

pub mod cospectrality;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod spectrum;

pub use error::{Error, Result};
