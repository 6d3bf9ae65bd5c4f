//! Fully degenerate Bernoulli numbers and polynomials, Carlitz degenerate
//! Bernoulli polynomials, and degenerate two-variable Fubini polynomials.
//!
//! The fully degenerate Bernoulli values are computed through several
//! closed forms (Stirling-number sums, double alternating sums, iterated
//! forward differences) and through generating-function extraction. The
//! checked entry points evaluate every closed form and fail with
//! [`Error::InternalIdentityFailure`] if any two disagree.
//!
//! The integrated Fubini polynomials connect the two sides: integrating
//! the alternating Fubini sums over y from 0 to 1 reproduces the Bernoulli
//! values exactly.

use crate::error::{index, Error, Result};
use crate::rings::{binomial, factorial, Assignment, LambdaPoly, MultiPoly, Rational, Ring, Var};
use crate::series::{
    degenerate_falling, exp_deg_minus_one, exp_deg_series, log1p_lambda_over_lambda, log1p_series,
    Sign, TruncatedSeries,
};
use crate::stirling::{alternating_sum, falling_int, rs2, s2, stirling_poly_checked};

/// Argument of the Bernoulli generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMode {
    /// x = 0.
    Number,
    /// Symbolic x.
    SymbolicX,
    /// x = r for a nonnegative integer r.
    AtR(i64),
}

/// Second argument of the alternating Fubini sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FubiniShift {
    None,
    R(i64),
    SymbolicX,
}

/// `(−1)ᵏ k!/(k+1)`.
fn bernoulli_weight(k: usize) -> Rational {
    let w = Rational::new(factorial(k), k as i64 + 1);
    if k % 2 == 1 {
        -w
    } else {
        w
    }
}

/// `(−1)ᵏ/(k+1)`.
fn signed_harmonic(k: usize) -> Rational {
    Rational::new(if k % 2 == 1 { -1 } else { 1 }, k as i64 + 1)
}

/// Σ_k 1/(k+1) Σ_j C(k,j)(−1)ʲ f(j); the inner sum is (−1)ᵏ times the
/// alternating sum.
fn double_sum<R: Ring>(n: usize, f: impl Fn(usize) -> R) -> R {
    (0..=n).fold(R::zero(), |acc, k| {
        let inner = alternating_sum(k, &f);
        acc.plus(&inner.scale(&signed_harmonic(k)))
    })
}

fn agree<T: PartialEq + std::fmt::Display>(what: String, routes: &[(&str, &T)]) -> Result<()> {
    let (first_name, first) = routes[0];
    for &(name, value) in &routes[1..] {
        if value != first {
            return Err(Error::InternalIdentityFailure {
                what,
                detail: format!("{first_name} = {first}, {name} = {value}"),
            });
        }
    }
    Ok(())
}

pub(crate) fn beta_number_stirling(n: usize) -> LambdaPoly {
    (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        acc.plus(&s2(n, k).scale(&bernoulli_weight(k)))
    })
}

pub(crate) fn beta_number_double_sum(n: usize) -> LambdaPoly {
    double_sum(n, |j| falling_int(j as i64, n))
}

pub(crate) fn beta_number_difference(n: usize) -> LambdaPoly {
    (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        let samples: Vec<LambdaPoly> = (0..=k).map(|j| falling_int(j as i64, n)).collect();
        let diff = alternating_sum(k, |j| samples[j].clone());
        acc.plus(&diff.scale(&signed_harmonic(k)))
    })
}

/// Fully degenerate Bernoulli number βₙ,λ.
pub fn beta_deg_number(n: i64) -> Result<LambdaPoly> {
    let n = index("n", n)?;
    let stirling = beta_number_stirling(n);
    let double = beta_number_double_sum(n);
    let diff = beta_number_difference(n);
    agree(
        format!("beta_{n},l"),
        &[
            ("stirling", &stirling),
            ("double_sum", &double),
            ("difference", &diff),
        ],
    )?;
    Ok(stirling)
}

pub(crate) fn beta_poly_stirling(n: usize) -> Result<MultiPoly> {
    (0..=n).try_fold(MultiPoly::zero(), |acc, k| {
        Ok(acc.plus(&stirling_poly_checked(n, k)?.scale(&bernoulli_weight(k))))
    })
}

fn shifted_x_falling(j: usize, n: usize) -> MultiPoly {
    degenerate_falling(&MultiPoly::x().plus(&MultiPoly::from_integer(j as i64)), n)
}

pub(crate) fn beta_poly_double_sum(n: usize) -> MultiPoly {
    double_sum(n, |l| shifted_x_falling(l, n))
}

pub(crate) fn beta_poly_difference(n: usize) -> MultiPoly {
    (0..=n).fold(MultiPoly::zero(), |acc, k| {
        let diff = alternating_sum(k, |j| shifted_x_falling(j, n));
        acc.plus(&diff.scale(&signed_harmonic(k)))
    })
}

pub(crate) fn beta_poly_checked(n: usize) -> Result<MultiPoly> {
    let stirling = beta_poly_stirling(n)?;
    let double = beta_poly_double_sum(n);
    let diff = beta_poly_difference(n);
    agree(
        format!("beta_{n},l(x)"),
        &[
            ("stirling", &stirling),
            ("double_sum", &double),
            ("difference", &diff),
        ],
    )?;
    Ok(stirling)
}

/// Fully degenerate Bernoulli polynomial βₙ,λ(x).
pub fn beta_deg_poly(n: i64) -> Result<MultiPoly> {
    beta_poly_checked(index("n", n)?)
}

pub(crate) fn beta_at_r_stirling(n: usize, r: usize) -> LambdaPoly {
    (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        acc.plus(&rs2(n, k, r).scale(&bernoulli_weight(k)))
    })
}

pub(crate) fn beta_at_r_double_sum(n: usize, r: usize) -> LambdaPoly {
    double_sum(n, |j| falling_int((r + j) as i64, n))
}

pub(crate) fn beta_at_r_difference(n: usize, r: usize) -> LambdaPoly {
    (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        let samples: Vec<LambdaPoly> = (0..=k).map(|j| falling_int((r + j) as i64, n)).collect();
        let diff = alternating_sum(k, |j| samples[j].clone());
        acc.plus(&diff.scale(&signed_harmonic(k)))
    })
}

/// βₙ,λ(r) for a nonnegative integer r.
///
/// Agrees with `beta_deg_poly(n)` evaluated at x = r.
pub fn beta_deg_at_r(n: i64, r: i64) -> Result<LambdaPoly> {
    let (n, r) = (index("n", n)?, index("r", r)?);
    let stirling = beta_at_r_stirling(n, r);
    let double = beta_at_r_double_sum(n, r);
    let diff = beta_at_r_difference(n, r);
    let substituted = beta_poly_checked(n)?
        .eval(&Assignment::new().x(r as i64))
        .to_lambda()
        .expect("x-free after substitution");
    agree(
        format!("beta_{n},l({r})"),
        &[
            ("stirling", &stirling),
            ("double_sum", &double),
            ("difference", &diff),
            ("poly_at_r", &substituted),
        ],
    )?;
    Ok(stirling)
}

/// `n!·[tⁿ]` of log(1+λt)/(λ(e_λ(t)−1))·e_λ^a(t) for n = 0..=n_max.
pub fn beta_deg_gf(n_max: i64, mode: BetaMode) -> Result<Vec<MultiPoly>> {
    let n_max = index("n_max", n_max)?;
    let exponent = match mode {
        BetaMode::Number => MultiPoly::zero(),
        BetaMode::SymbolicX => MultiPoly::x(),
        BetaMode::AtR(r) => MultiPoly::from_integer(index("r", r)? as i64),
    };
    let order = n_max + 1;
    let kernel = log1p_lambda_over_lambda::<MultiPoly>(order).div(&exp_deg_minus_one(order))?;
    let gf = kernel.mul(&exp_deg_series(&exponent, n_max, Sign::Plus));
    Ok(gf.egf_coefficients())
}

/// Carlitz degenerate Bernoulli polynomials βₙ(x|λ), n = 0..=n_max, from
/// t/(e_λ(t)−1)·e_λ^x(t).
pub fn carlitz_beta_gf(n_max: i64) -> Result<Vec<MultiPoly>> {
    let n_max = index("n_max", n_max)?;
    let order = n_max + 1;
    let kernel = TruncatedSeries::<MultiPoly>::variable(order).div(&exp_deg_minus_one(order))?;
    Ok(kernel
        .mul(&exp_deg_series(&MultiPoly::x(), n_max, Sign::Plus))
        .egf_coefficients())
}

pub fn carlitz_beta(n: i64) -> Result<MultiPoly> {
    let n_idx = index("n", n)?;
    Ok(carlitz_beta_gf(n)?.swap_remove(n_idx))
}

pub(crate) fn fubini_closed(n: usize) -> MultiPoly {
    let x = MultiPoly::x();
    let y = MultiPoly::y();
    let mut acc = MultiPoly::zero();
    for m in 0..=n {
        let tail = degenerate_falling(&y, n - m).scale(&Rational::from_integer(binomial(n, m)));
        for k in 0..=m {
            let term = s2(m, k)
                .to_multi()
                .times(&x.pow(k))
                .scale(&Rational::from_integer(factorial(k)))
                .times(&tail);
            acc = acc.plus(&term);
        }
    }
    acc
}

/// Degenerate two-variable Fubini polynomial Fₙ,λ(x|y) by its double sum.
pub fn fubini_deg(n: i64) -> Result<MultiPoly> {
    Ok(fubini_closed(index("n", n)?))
}

/// Fₙ,λ(x|y) for n = 0..=n_max from e_λ^y(t)/(1 − x(e_λ(t)−1)).
pub fn fubini_deg_gf(n_max: i64) -> Result<Vec<MultiPoly>> {
    let n_max = index("n_max", n_max)?;
    let den = TruncatedSeries::one(n_max)
        .sub(&exp_deg_minus_one::<MultiPoly>(n_max).mul_scalar(&MultiPoly::x()));
    let gf = exp_deg_series(&MultiPoly::y(), n_max, Sign::Plus).div(&den)?;
    Ok(gf.egf_coefficients())
}

/// Alternating Fubini sums Fₙ,λ(−y), Fₙ,λ(−y|r), Fₙ,λ(−y|x).
pub fn fubini_neg_arg(n: i64, shift: FubiniShift) -> Result<MultiPoly> {
    let n = index("n", n)?;
    let y = MultiPoly::y();
    let coeff: Box<dyn Fn(usize) -> Result<MultiPoly>> = match shift {
        FubiniShift::None => Box::new(|k| Ok(s2(n, k).to_multi())),
        FubiniShift::R(r) => {
            let r = index("r", r)?;
            Box::new(move |k| Ok(rs2(n, k, r).to_multi()))
        }
        FubiniShift::SymbolicX => Box::new(|k| stirling_poly_checked(n, k)),
    };
    (0..=n).try_fold(MultiPoly::zero(), |acc, k| {
        let w = Rational::from_integer(factorial(k));
        let w = if k % 2 == 1 { -w } else { w };
        Ok(acc.plus(&coeff(k)?.times(&y.pow(k)).scale(&w)))
    })
}

/// Fubini polynomial with x ↦ −y and y ↦ (0, r or x), by substitution into
/// [`fubini_deg`].
pub fn fubini_substituted(n: i64, shift: FubiniShift) -> Result<MultiPoly> {
    let second = match shift {
        FubiniShift::None => MultiPoly::zero(),
        FubiniShift::R(r) => MultiPoly::from_integer(index("r", r)? as i64),
        FubiniShift::SymbolicX => MultiPoly::x(),
    };
    Ok(fubini_deg(n)?.substitute_many(&[(Var::X, -MultiPoly::y()), (Var::Y, second)]))
}

/// ∫₀^z of the alternating Fubini sum in y, with the upper limit z kept in
/// the y slot.
pub fn integrated_fubini_upper(n: i64, shift: FubiniShift) -> Result<MultiPoly> {
    Ok(fubini_neg_arg(n, shift)?.integrate_y())
}

/// Integrated alternating Fubini sum.
///
/// For [`FubiniShift::None`] and [`FubiniShift::R`] the upper limit is the
/// symbol x. For [`FubiniShift::SymbolicX`], x is already the shift
/// argument, so the upper limit is fixed at 1.
pub fn integrated_fubini(n: i64, shift: FubiniShift) -> Result<MultiPoly> {
    let upper = integrated_fubini_upper(n, shift)?;
    Ok(match shift {
        FubiniShift::None | FubiniShift::R(_) => upper.substitute(Var::Y, &MultiPoly::x()),
        FubiniShift::SymbolicX => upper.eval(&Assignment::new().y(1)),
    })
}

/// `n!·[tⁿ]` of log(1 + z(e_λ(t)−1))/(e_λ(t)−1)·e_λ^a(t), z in the y slot.
pub fn integrated_fubini_gf(n_max: i64, shift: FubiniShift) -> Result<Vec<MultiPoly>> {
    let n_max = index("n_max", n_max)?;
    let exponent = match shift {
        FubiniShift::None => MultiPoly::zero(),
        FubiniShift::R(r) => MultiPoly::from_integer(index("r", r)? as i64),
        FubiniShift::SymbolicX => MultiPoly::x(),
    };
    let order = n_max + 1;
    let em1 = exp_deg_minus_one::<MultiPoly>(order);
    let log = log1p_series::<MultiPoly>(order).compose(&em1.mul_scalar(&MultiPoly::y()))?;
    let gf = log
        .div(&em1)?
        .mul(&exp_deg_series(&exponent, n_max, Sign::Plus));
    Ok(gf.egf_coefficients())
}
