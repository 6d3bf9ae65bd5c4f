//! Truncated formal power series in t.
//!
//! Every series carries its truncation order explicitly. Binary operations
//! shrink to the smaller order; [`TruncatedSeries::div`] additionally loses
//! the divisor's valuation, and [`TruncatedSeries::compose`] keeps the
//! smaller of the outer and inner orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{Factorials, LambdaPoly, LambdaRing, Rational, Ring};

/// Index of the first nonzero coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(usize),
    /// Zero series up to the truncation order.
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Substitution t ↦ ±t applied by the series builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Coefficients of t⁰..t^N; `coeffs.len() == order + 1` always.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr<R>", into = "SeriesRepr<R>")]
#[serde(bound(
    serialize = "R: Ring + Serialize",
    deserialize = "R: Ring + Deserialize<'de>"
))]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TryFrom<SeriesRepr<R>> for TruncatedSeries<R> {
    type Error = Error;

    fn try_from(repr: SeriesRepr<R>) -> Result<Self> {
        if repr.coeffs.len() != repr.order + 1 {
            return Err(Error::ArityMismatch {
                expected: repr.order + 1,
                actual: repr.coeffs.len(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: repr.coeffs,
        })
    }
}

impl<R: Ring> From<TruncatedSeries<R>> for SeriesRepr<R> {
    fn from(s: TruncatedSeries<R>) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs,
        }
    }
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or truncates `coeffs` to `order`.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series variable t (order ≥ 1 to be meaningful).
    pub fn variable(order: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of tⁿ; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn valuation(&self) -> Valuation {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(Valuation::Infinite, Valuation::Finite)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_fn(order, |i| f(&self.coeffs[i], &rhs.coeffs[i]))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Coefficientwise product with a ring constant.
    pub fn mul_scalar(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient `q` with `self = q·den`.
    ///
    /// The divisor's first nonzero coefficient must be a nonzero rational
    /// constant. The result has order `min(N_self, N_den) − valuation(den)`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let v = match den.valuation() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => return Err(Error::NonUnitLeadingCoefficient),
        };
        let inv = den.coeffs[v]
            .as_rational()
            .and_then(|c| c.recip())
            .ok_or(Error::NonUnitLeadingCoefficient)?;
        let num_val = self.valuation();
        if num_val.cmp(&Valuation::Finite(v)) == Ordering::Less {
            return Err(Error::ValuationMismatch {
                numerator: num_val.to_string(),
                denominator: v.to_string(),
            });
        }
        let order = self
            .order()
            .min(den.order())
            .checked_sub(v)
            .ok_or_else(|| Error::ValuationMismatch {
                numerator: format!("order {}", self.order()),
                denominator: v.to_string(),
            })?;
        let num = &self.coeffs[v..];
        let den = &den.coeffs[v..];
        let mut q: Vec<R> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num[i].clone();
            for j in 1..=i {
                acc = acc.minus(&den[j].times(&q[i - j]));
            }
            q.push(acc.scale(&inv));
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `self ∘ inner`, by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentInner);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// `n!·[tⁿ]` for every n up to the order.
    pub fn egf_coefficients(&self) -> Vec<R> {
        let fact = Factorials::up_to(self.order());
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&fact.as_rational(n)))
            .collect()
    }
}

/// Degenerate falling factorial `a(a−λ)⋯(a−(n−1)λ)`.
pub(crate) fn degenerate_falling<R: LambdaRing>(a: &R, n: usize) -> R {
    let lambda = R::lambda();
    let mut acc = R::one();
    let mut shift = R::zero();
    for _ in 0..n {
        acc = acc.times(&a.minus(&shift));
        shift = shift.plus(&lambda);
    }
    acc
}

/// Degenerate exponential e_λ^a(±t) = Σ (a)ₖ,λ (±t)ᵏ/k!.
pub fn exp_deg_series<R: LambdaRing>(exponent: &R, order: usize, sign: Sign) -> TruncatedSeries<R> {
    let fact = Factorials::up_to(order);
    let lambda = R::lambda();
    let mut falling = R::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k > 0 {
            let shift = lambda.scale(&Rational::from_integer(k as i64 - 1));
            falling = falling.times(&exponent.minus(&shift));
        }
        let mut c = falling.scale(&fact.inverse(k));
        if sign == Sign::Minus && k % 2 == 1 {
            c = c.negated();
        }
        coeffs.push(c);
    }
    TruncatedSeries { coeffs }
}

/// e_λ(t) − 1.
pub fn exp_deg_minus_one<R: LambdaRing>(order: usize) -> TruncatedSeries<R> {
    let mut s = exp_deg_series(&R::one(), order, Sign::Plus);
    s.coeffs[0] = R::zero();
    s
}

/// ∏_{j=1}^{k} (j − λ).
pub fn shifted_rising(k: usize) -> LambdaPoly {
    (1..=k as i64).fold(LambdaPoly::one(), |acc, j| {
        acc.times(&LambdaPoly::from_coeffs(vec![
            Rational::from_integer(j),
            Rational::from_integer(-1),
        ]))
    })
}

/// ∏_{j=1}^{k} (λ − j).
pub fn shifted_falling(k: usize) -> LambdaPoly {
    (1..=k as i64).fold(LambdaPoly::one(), |acc, j| {
        acc.times(&LambdaPoly::from_coeffs(vec![
            Rational::from_integer(-j),
            Rational::from_integer(1),
        ]))
    })
}

/// Degenerate logarithm log_λ(1+t), the compositional inverse of e_λ(t) − 1.
///
/// The coefficient of tⁿ is ∏_{j=1}^{n−1}(λ − j)/n!.
pub fn deg_log_series(order: usize) -> TruncatedSeries<LambdaPoly> {
    let fact = Factorials::up_to(order);
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            LambdaPoly::zero()
        } else {
            shifted_falling(n - 1).scale(&fact.inverse(n))
        }
    })
}

/// Degenerate polylogarithm of integer index `index`.
///
/// The coefficient of tⁿ (n ≥ 1) is ∏_{j=1}^{n−1}(j − λ)/((n−1)!·n^index).
pub fn deg_polylog_series(index: i64, order: usize) -> TruncatedSeries<LambdaPoly> {
    let fact = Factorials::up_to(order);
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            return LambdaPoly::zero();
        }
        let weight = Rational::from_integer(n as i64)
            .powi(-index)
            .expect("n >= 1 is invertible");
        shifted_rising(n - 1)
            .scale(&fact.inverse(n - 1))
            .scale(&weight)
    })
}

/// log(1 + t) = Σ (−1)ⁿ⁻¹ tⁿ/n.
pub fn log1p_series<R: Ring>(order: usize) -> TruncatedSeries<R> {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            R::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            R::from_rational(Rational::new(sign, n as i64))
        }
    })
}

/// log(1 + λt)/λ = Σ (−λ)ⁿ⁻¹ tⁿ/n, kept inside the polynomial ring.
pub fn log1p_lambda_over_lambda<R: LambdaRing>(order: usize) -> TruncatedSeries<R> {
    let neg_lambda = R::lambda().negated();
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            R::zero()
        } else {
            neg_lambda.pow(n - 1).scale(&Rational::new(1, n as i64))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::MultiPoly;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lp(coeffs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::from_coeffs(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn rat_series(coeffs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(
            coeffs.iter().map(|&c| Rational::from_integer(c)).collect(),
            order,
        )
    }

    #[test]
    fn product_examples() {
        let a = rat_series(&[1, 1], 2);
        let b = rat_series(&[1, -1], 2);
        assert_eq!(a.mul(&b), rat_series(&[1, 0, -1], 2));
        assert_eq!(a.mul(&TruncatedSeries::one(2)), a);
        // orders contract to the minimum
        assert_eq!(a.mul(&rat_series(&[1], 5)).order(), 2);
    }

    #[test]
    fn square_of_exp_minus_one_gives_stirling_diagonal() {
        let e1: TruncatedSeries<LambdaPoly> = exp_deg_minus_one(3);
        let sq = e1.mul(&e1);
        // (e_λ(t) − 1)²/2! has t²/2! coefficient S₂,λ(2,2) = 1
        let s22 = sq.coeff(2).scale(&q(2, 1)).scale(&q(1, 2));
        assert_eq!(s22, LambdaPoly::one());
    }

    #[test]
    fn division_examples() {
        let t = TruncatedSeries::<Rational>::variable(3);
        let quotient = t.div(&t).unwrap();
        assert_eq!(quotient, TruncatedSeries::one(2));

        let num: TruncatedSeries<LambdaPoly> = log1p_lambda_over_lambda(3);
        let den: TruncatedSeries<LambdaPoly> = exp_deg_minus_one(3);
        let beta = num.div(&den).unwrap();
        assert_eq!(beta.order(), 2);
        assert_eq!(beta.coeff(0), &LambdaPoly::one());
        assert_eq!(beta.coeff(1), &lp(&[(-1, 2)]));
        assert_eq!(beta.coeff(2), &lp(&[(1, 12), (1, 4)]));

        // 1/(1 − y(e_λ(t) − 1)) has t-coefficient y
        let e1: TruncatedSeries<MultiPoly> = exp_deg_minus_one(3);
        let den = TruncatedSeries::one(3).sub(&e1.mul_scalar(&MultiPoly::y()));
        let fub = TruncatedSeries::one(3).div(&den).unwrap();
        assert_eq!(fub.coeff(1), &MultiPoly::y());
    }

    #[test]
    fn division_errors() {
        let t = TruncatedSeries::<Rational>::variable(3);
        let one = TruncatedSeries::<Rational>::one(3);
        assert!(matches!(one.div(&t), Err(Error::ValuationMismatch { .. })));
        assert_eq!(
            one.div(&TruncatedSeries::zero(3)),
            Err(Error::NonUnitLeadingCoefficient)
        );

        let lam_den = TruncatedSeries::<LambdaPoly>::constant(LambdaPoly::lambda(), 3);
        assert_eq!(
            TruncatedSeries::one(3).div(&lam_den),
            Err(Error::NonUnitLeadingCoefficient)
        );
    }

    #[test]
    fn composition_examples() {
        let outer = rat_series(&[1, 1, 1], 2);
        let t = TruncatedSeries::<Rational>::variable(2);
        assert_eq!(outer.compose(&t).unwrap(), outer);

        let log = log1p_series::<LambdaPoly>(3);
        let lam_t = TruncatedSeries::new(vec![LambdaPoly::zero(), LambdaPoly::lambda()], 3);
        let composed = log.compose(&lam_t).unwrap();
        assert_eq!(composed.coeff(1), &lp(&[(0, 1), (1, 1)]));
        assert_eq!(composed.coeff(2), &lp(&[(0, 1), (0, 1), (-1, 2)]));
        assert_eq!(composed.coeff(3), &lp(&[(0, 1), (0, 1), (0, 1), (1, 3)]));

        assert_eq!(
            log.compose(&TruncatedSeries::one(3)),
            Err(Error::NonNilpotentInner)
        );
    }

    #[test]
    fn polylog_one_over_shifted_argument_matches_exponential_ratio() {
        let order = 8;
        let inner = TruncatedSeries::one(order).sub(&exp_deg_series(
            &LambdaPoly::one(),
            order,
            Sign::Minus,
        ));
        let li = deg_polylog_series(1, order).compose(&inner).unwrap();
        let lhs = li.div(&inner).unwrap();

        // t/(e_{−λ}(t) − 1)·e_{−λ}(t) with λ negated coefficientwise
        let t = TruncatedSeries::<LambdaPoly>::variable(order);
        let e =
            exp_deg_series(&LambdaPoly::one(), order, Sign::Plus).map(LambdaPoly::negate_lambda);
        let em1 = e.sub(&TruncatedSeries::one(order));
        let rhs = t.div(&em1).unwrap().mul(&e);
        assert_eq!(lhs.order(), rhs.order());
        assert_eq!(lhs, rhs.truncate(lhs.order()));
    }

    #[test]
    fn exponential_builders() {
        let zero: TruncatedSeries<MultiPoly> = exp_deg_series(&MultiPoly::zero(), 4, Sign::Plus);
        assert_eq!(zero, TruncatedSeries::one(4));

        let one: TruncatedSeries<LambdaPoly> = exp_deg_series(&LambdaPoly::one(), 2, Sign::Plus);
        assert_eq!(
            one.coeffs(),
            &[LambdaPoly::one(), LambdaPoly::one(), lp(&[(1, 2), (-1, 2)])]
        );

        let x = MultiPoly::x();
        let ex = exp_deg_series(&x, 2, Sign::Plus);
        assert_eq!(ex.coeff(1), &x);
        assert_eq!(
            ex.coeff(2),
            &(&x * &(&x - &MultiPoly::lambda())).scale(&q(1, 2))
        );

        let neg = exp_deg_series(&x, 2, Sign::Minus);
        assert_eq!(neg.coeff(1), &-&x);
        assert_eq!(neg.coeff(2), ex.coeff(2));
    }

    #[test]
    fn log_builders() {
        let log = deg_log_series(5);
        assert_eq!(log.coeff(0), &LambdaPoly::zero());
        assert_eq!(log.coeff(1), &LambdaPoly::one());
        assert_eq!(log.coeff(2), &lp(&[(-1, 2), (1, 2)]));
        // λ = 3: 3·(1)(1 − 1/3) = 2 = 3 − 1, divided by 2!
        assert_eq!(log.coeff(2).eval_at(&q(3, 1)), q(1, 1));

        let inverse = log.compose(&exp_deg_minus_one(5)).unwrap();
        assert_eq!(inverse, TruncatedSeries::variable(5));
    }

    #[test]
    fn polylog_builders() {
        for index in -3..=3 {
            let li = deg_polylog_series(index, 6);
            assert_eq!(li.coeff(0), &LambdaPoly::zero());
            assert_eq!(li.coeff(1), &LambdaPoly::one());
            for n in 1..=6i64 {
                let at_zero = li.coeff(n as usize).eval_at(&Rational::zero());
                assert_eq!(at_zero, Rational::from_integer(n).powi(-index).unwrap());
            }
        }
        // index 1 equals −log_λ(1 − t)
        let order = 10;
        let minus_t = TruncatedSeries::new(vec![LambdaPoly::zero(), -LambdaPoly::one()], order);
        let rhs = deg_log_series(order).compose(&minus_t).unwrap().neg();
        assert_eq!(deg_polylog_series(1, order), rhs);
    }

    #[test]
    fn prefactor_products_match_reciprocal_lambda_form() {
        for lam in [q(1, 2), q(-2, 3), q(5, 1), q(7, 3)] {
            let inv = lam.recip().unwrap();
            for k in 0..=10usize {
                // (−λ)ᵏ(1)ₖ₊₁,₁/λ and λᵏ(1)ₖ₊₁,₁/λ with literal 1/λ arithmetic
                let falling: Rational = (0..=k as i64)
                    .map(|j| Rational::one() - Rational::from_integer(j) * inv.clone())
                    .fold(Rational::one(), |a, b| a * b);
                let neg_pow = (-lam.clone()).powi(k as i64).unwrap();
                let pos_pow = lam.powi(k as i64).unwrap();
                assert_eq!(shifted_rising(k).eval_at(&lam), neg_pow * falling.clone());
                assert_eq!(shifted_falling(k).eval_at(&lam), pos_pow * falling);
            }
        }
    }

    #[test]
    fn serde_layout() {
        let s = rat_series(&[1, 2], 2);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","2","0"]}"#);
        assert_eq!(
            serde_json::from_str::<TruncatedSeries<Rational>>(&json).unwrap(),
            s
        );
        assert!(
            serde_json::from_str::<TruncatedSeries<Rational>>(r#"{"order":3,"coeffs":["1"]}"#)
                .is_err()
        );
    }
}
