//! Degenerate falling factorials, forward differences, and the degenerate
//! Stirling families of the second kind.
//!
//! Each family has an explicit alternating-sum route and a route through
//! generating-function coefficient extraction; the r-Stirling numbers and
//! Stirling polynomials also have a binomial-convolution route.

use crate::error::{index, Error, Result};
use crate::rings::{binomial, factorial, LambdaPoly, LambdaRing, MultiPoly, Rational, Ring};
use crate::series::{degenerate_falling, exp_deg_minus_one, exp_deg_series, Sign, TruncatedSeries};

/// Selects between the ordinary falling factorial `(a)ₙ = a(a−1)⋯(a−n+1)`
/// and the degenerate one `(a)ₙ,λ = a(a−λ)⋯(a−(n−1)λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FallingKind {
    Ordinary,
    Degenerate,
}

pub fn falling_factorial<R: LambdaRing>(kind: FallingKind, argument: &R, n: i64) -> Result<R> {
    Ok(falling(kind, argument, index("n", n)?))
}

pub(crate) fn falling<R: LambdaRing>(kind: FallingKind, argument: &R, n: usize) -> R {
    match kind {
        FallingKind::Degenerate => degenerate_falling(argument, n),
        FallingKind::Ordinary => (0..n).fold(R::one(), |acc, i| {
            acc.times(&argument.minus(&R::from_integer(i as i64)))
        }),
    }
}

/// `(a)ₙ,λ` for an integer argument.
pub(crate) fn falling_int(a: i64, n: usize) -> LambdaPoly {
    degenerate_falling(&LambdaPoly::from_integer(a), n)
}

/// k-th forward difference from the samples `f(x), f(x+1), …, f(x+k)`.
pub fn forward_difference<R: Ring>(values: &[R], k: i64) -> Result<R> {
    let k = index("k", k)?;
    if values.len() != k + 1 {
        return Err(Error::ArityMismatch {
            expected: k + 1,
            actual: values.len(),
        });
    }
    Ok(alternating_sum(k, |j| values[j].clone()))
}

/// Σ_{j=0}^{k} C(k,j)(−1)^{k−j} f(j).
pub(crate) fn alternating_sum<R: Ring>(k: usize, f: impl Fn(usize) -> R) -> R {
    (0..=k).fold(R::zero(), |acc, j| {
        let mut c = Rational::from_integer(binomial(k, j));
        if (k - j) % 2 == 1 {
            c = -c;
        }
        acc.plus(&f(j).scale(&c))
    })
}

fn inv_factorial(k: usize) -> Rational {
    Rational::new(1, factorial(k))
}

pub(crate) fn s2(n: usize, k: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    alternating_sum(k, |j| falling_int(j as i64, n)).scale(&inv_factorial(k))
}

/// Degenerate Stirling number of the second kind by its alternating sum.
pub fn stirling2_deg(n: i64, k: i64) -> Result<LambdaPoly> {
    Ok(s2(index("n", n)?, index("k", k)?))
}

/// `(e_λ(t) − 1)ᵏ/k!·e_λ^a(t)` at the given order.
fn stirling_series<R: LambdaRing>(order: usize, k: usize, shift: &R) -> TruncatedSeries<R> {
    exp_deg_minus_one::<R>(order)
        .pow(k)
        .scale(&inv_factorial(k))
        .mul(&exp_deg_series(shift, order, Sign::Plus))
}

/// S₂,λ(n,k) for n = 0..=n_max read off `(e_λ(t) − 1)ᵏ/k!`.
pub fn stirling2_deg_gf(n_max: i64, k: i64) -> Result<Vec<LambdaPoly>> {
    let (n_max, k) = (index("n_max", n_max)?, index("k", k)?);
    Ok(stirling_series(n_max, k, &LambdaPoly::zero()).egf_coefficients())
}

pub(crate) fn rs2(n: usize, k: usize, r: usize) -> LambdaPoly {
    alternating_sum(k, |j| falling_int((r + j) as i64, n)).scale(&inv_factorial(k))
}

/// Degenerate r-Stirling number S⁽ʳ⁾₂,λ(n+r, k+r) by its alternating sum.
pub fn rstirling2_deg(n: i64, k: i64, r: i64) -> Result<LambdaPoly> {
    Ok(rs2(index("n", n)?, index("k", k)?, index("r", r)?))
}

pub(crate) fn rs2_convolution(n: usize, k: usize, r: usize) -> LambdaPoly {
    (k..=n).fold(LambdaPoly::zero(), |acc, l| {
        let term = s2(l, k)
            .times(&falling_int(r as i64, n - l))
            .scale(&Rational::from_integer(binomial(n, l)));
        acc.plus(&term)
    })
}

/// S⁽ʳ⁾₂,λ(n+r, k+r) as Σ_l C(n,l) S₂,λ(l,k) (r)ₙ₋ₗ,λ.
pub fn rstirling2_via_convolution(n: i64, k: i64, r: i64) -> Result<LambdaPoly> {
    Ok(rs2_convolution(
        index("n", n)?,
        index("k", k)?,
        index("r", r)?,
    ))
}

/// S⁽ʳ⁾₂,λ(n+r, k+r) for n = 0..=n_max read off `e_λ^r(t)(e_λ(t) − 1)ᵏ/k!`.
pub fn rstirling2_deg_gf(n_max: i64, k: i64, r: i64) -> Result<Vec<LambdaPoly>> {
    let (n_max, k, r) = (index("n_max", n_max)?, index("k", k)?, index("r", r)?);
    Ok(stirling_series(n_max, k, &LambdaPoly::from_integer(r as i64)).egf_coefficients())
}

/// Σ_{l=k}^{n} C(n,l) S₂,λ(l,k) (x)ₙ₋ₗ,λ.
pub(crate) fn stirling_poly_convolution(n: usize, k: usize) -> MultiPoly {
    let x = MultiPoly::x();
    (k..=n).fold(MultiPoly::zero(), |acc, l| {
        let term = s2(l, k)
            .to_multi()
            .times(&degenerate_falling(&x, n - l))
            .scale(&Rational::from_integer(binomial(n, l)));
        acc.plus(&term)
    })
}

/// (1/k!) Σ_{l=0}^{k} C(k,l)(−1)^{k−l} (l+x)ₙ,λ.
pub(crate) fn stirling_poly_alternating(n: usize, k: usize) -> MultiPoly {
    let x = MultiPoly::x();
    alternating_sum(k, |l| {
        degenerate_falling(&x.plus(&MultiPoly::from_integer(l as i64)), n)
    })
    .scale(&inv_factorial(k))
}

pub(crate) fn stirling_poly_checked(n: usize, k: usize) -> Result<MultiPoly> {
    let conv = stirling_poly_convolution(n, k);
    let alt = stirling_poly_alternating(n, k);
    if conv != alt {
        return Err(Error::InternalIdentityFailure {
            what: format!("S2,l({n},{k}|x)"),
            detail: format!("convolution {conv} vs alternating {alt}"),
        });
    }
    Ok(conv)
}

/// Degenerate Stirling polynomial S₂,λ(n,k|x).
///
/// Both closed forms are evaluated and must agree.
pub fn stirling_poly(n: i64, k: i64) -> Result<MultiPoly> {
    stirling_poly_checked(index("n", n)?, index("k", k)?)
}

/// S₂,λ(n,k|x) for n = 0..=n_max read off `(e_λ(t) − 1)ᵏ/k!·e_λ^x(t)`.
pub fn stirling_poly_gf(n_max: i64, k: i64) -> Result<Vec<MultiPoly>> {
    let (n_max, k) = (index("n_max", n_max)?, index("k", k)?);
    Ok(stirling_series(n_max, k, &MultiPoly::x()).egf_coefficients())
}
