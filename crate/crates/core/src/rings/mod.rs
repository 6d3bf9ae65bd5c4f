//! Exact coefficient rings.
//!
//! [`Rational`] is the base field. [`Poly`] is a dense univariate polynomial
//! over any [`Ring`]; nesting it gives the fixed variable tower used across
//! the crate: [`LambdaPoly`] in λ, [`XPoly`] in x over λ-polynomials, and
//! [`MultiPoly`] in y over x-polynomials.

mod combinat;
mod poly;
mod rational;
mod tower;

pub use combinat::{binomial, factorial, Factorials};
pub use poly::Poly;
pub use rational::Rational;
pub use tower::{Assignment, LambdaPoly, MultiPoly, Var, XPoly};

use std::fmt::Debug;

/// Commutative ring with a rational embedding.
///
/// Method names avoid the `std::ops` ones so generic code never hits
/// ambiguous calls; the concrete types implement the operator traits too.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    fn from_rational(c: Rational) -> Self;
    /// Multiplies by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;
    /// `Some(c)` when the element is the constant `c`.
    fn as_rational(&self) -> Option<Rational>;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }
}

/// Ring containing the indeterminate λ.
pub trait LambdaRing: Ring {
    fn lambda() -> Self;
}
