//! Exact computation of degenerate Stirling, Bernoulli, Fubini and
//! poly-Bernoulli families over ℚ[λ, x, y], with a catalog of identities
//! that is checked by exact polynomial equality.

pub mod bernoulli;
pub mod error;
pub mod identity;
pub mod poly_bernoulli;
pub mod rings;
pub mod series;
pub mod stirling;
pub mod tables;

pub use error::{Error, Result};
