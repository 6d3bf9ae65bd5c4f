//! Degenerate poly-Bernoulli polynomials of integer index.
//!
//! The generating function is Li_{p,λ}(1 − e_λ(−t))/(1 − e_λ(−t))·e_λ^{−x}(−t).
//! The closed forms carry the prefactors (−λ)ᵏ(1)ₖ₊₁,₁/λ and λᵏ(1)ₖ₊₁,₁/λ,
//! which are evaluated as the polynomials ∏_{j=1}^{k}(j − λ) and
//! ∏_{j=1}^{k}(λ − j) so everything stays in ℚ[λ].

use crate::error::{index, Error, Result};
use crate::identity::{self, IdentityReport, Limits};
use crate::rings::{binomial, factorial, Assignment, LambdaPoly, MultiPoly, Rational, Ring};
use crate::series::{
    deg_polylog_series, degenerate_falling, exp_deg_series, shifted_falling, shifted_rising, Sign,
    TruncatedSeries,
};
use crate::stirling::{falling_int, rs2, s2, stirling_poly_checked};

/// Closed-form expansions of the degenerate poly-Bernoulli polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Σₖ ∏(j−λ)/(k+1)ᵖ · S₂,₋λ(n,k|x−k).
    ShiftedStirlingPoly,
    /// Σₖ ∏(j−λ)/((k+1)ᵖ k!) · Σₗ C(k,l)(−1)ˡ (x−l)ₙ,₋λ.
    AlternatingFactorials,
    /// Σₖ ∏(λ−j)/(k+1)ᵖ · Σⱼ C(n,j)(−1)ʲ S₂,λ(j,k)(x)ₙ₋ⱼ,₋λ.
    StirlingConvolution,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 3] = [
        ClosedForm::ShiftedStirlingPoly,
        ClosedForm::AlternatingFactorials,
        ClosedForm::StirlingConvolution,
    ];
}

/// `(k+1)^{−p}`.
fn index_weight(p: i64, k: usize) -> Rational {
    Rational::from_integer(k as i64 + 1)
        .powi(-p)
        .expect("k + 1 >= 1")
}

fn sign(k: usize) -> Rational {
    Rational::from_integer(if k % 2 == 1 { -1 } else { 1 })
}

/// β⁽ᵖ⁾ₙ,λ(x) for n = 0..=n_max by coefficient extraction.
pub fn poly_bernoulli_gf(p: i64, n_max: i64) -> Result<Vec<MultiPoly>> {
    let n_max = index("n_max", n_max)?;
    let order = n_max + 1;
    let inner = TruncatedSeries::<LambdaPoly>::one(order).sub(&exp_deg_series(
        &LambdaPoly::one(),
        order,
        Sign::Minus,
    ));
    let ratio = deg_polylog_series(p, order).compose(&inner)?.div(&inner)?;
    let gf =
        ratio
            .map(LambdaPoly::to_multi)
            .mul(&exp_deg_series(&-MultiPoly::x(), n_max, Sign::Minus));
    Ok(gf.egf_coefficients())
}

/// S₂,₋λ(n,k|x−k): λ is negated first, then x is shifted.
pub(crate) fn negated_shifted_stirling_poly(n: usize, k: usize) -> Result<MultiPoly> {
    Ok(stirling_poly_checked(n, k)?
        .negate_lambda()
        .shift_x(&Rational::from_integer(-(k as i64))))
}

/// (x − l)ₙ,₋λ.
pub(crate) fn negated_falling_x_minus(l: usize, n: usize) -> MultiPoly {
    degenerate_falling(&MultiPoly::x().minus(&MultiPoly::from_integer(l as i64)), n).negate_lambda()
}

/// Σₗ C(k,l)(−1)ˡ (x−l)ₙ,₋λ.
pub(crate) fn alternating_negated_falling(n: usize, k: usize) -> MultiPoly {
    (0..=k).fold(MultiPoly::zero(), |acc, l| {
        let c = Rational::from_integer(binomial(k, l)) * sign(l);
        acc.plus(&negated_falling_x_minus(l, n).scale(&c))
    })
}

/// Σⱼ C(n,j)(−1)ʲ (x)ₙ₋ⱼ,₋λ · k!(−1)ᵏ S₂,λ(j,k).
pub(crate) fn stirling_negated_falling(n: usize, k: usize) -> MultiPoly {
    let x = MultiPoly::x();
    let outer = Rational::from_integer(factorial(k)) * sign(k);
    (0..=n)
        .fold(MultiPoly::zero(), |acc, j| {
            let c = Rational::from_integer(binomial(n, j)) * sign(j);
            let term = degenerate_falling(&x, n - j)
                .negate_lambda()
                .times(&s2(j, k).to_multi());
            acc.plus(&term.scale(&c))
        })
        .scale(&outer)
}

pub(crate) fn closed(p: i64, n: usize, form: ClosedForm) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for k in 0..=n {
        let w = index_weight(p, k);
        let term = match form {
            ClosedForm::ShiftedStirlingPoly => shifted_rising(k)
                .to_multi()
                .times(&negated_shifted_stirling_poly(n, k)?),
            ClosedForm::AlternatingFactorials => shifted_rising(k)
                .to_multi()
                .times(&alternating_negated_falling(n, k))
                .scale(&Rational::new(1, factorial(k))),
            ClosedForm::StirlingConvolution => {
                // k!(−1)ᵏ from the Stirling expansion cancels against 1/k!
                // and turns (−λ)ᵏ into λᵏ.
                let inner = (0..=n).fold(MultiPoly::zero(), |acc, j| {
                    let c = Rational::from_integer(binomial(n, j)) * sign(j);
                    let term = degenerate_falling(&MultiPoly::x(), n - j)
                        .negate_lambda()
                        .times(&s2(j, k).to_multi());
                    acc.plus(&term.scale(&c))
                });
                shifted_falling(k).to_multi().times(&inner)
            }
        };
        acc = acc.plus(&term.scale(&w));
    }
    Ok(acc)
}

/// β⁽ᵖ⁾ₙ,λ(x) by the selected closed form.
pub fn poly_bernoulli_closed(p: i64, n: i64, form: ClosedForm) -> Result<MultiPoly> {
    closed(p, index("n", n)?, form)
}

/// β⁽ᵖ⁾ₙ,λ(x) with every closed form and the generating function checked
/// against each other.
pub fn poly_bernoulli(p: i64, n: i64) -> Result<MultiPoly> {
    let n_idx = index("n", n)?;
    let from_gf = poly_bernoulli_gf(p, n)?.swap_remove(n_idx);
    for form in ClosedForm::ALL {
        let value = closed(p, n_idx, form)?;
        if value != from_gf {
            return Err(Error::InternalIdentityFailure {
                what: format!("beta^({p})_{n},l(x)"),
                detail: format!("generating function {from_gf} vs {form:?} {value}"),
            });
        }
    }
    Ok(from_gf)
}

/// (−1)ⁿ Σₖ ∏(λ−j)/(k+1)ᵖ Σⱼ C(n,j) S₂,λ(j,k)(r)ₙ₋ⱼ,λ.
pub(crate) fn at_neg_r_convolution(p: i64, n: usize, r: usize) -> LambdaPoly {
    let total = (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        let inner = (0..=n).fold(LambdaPoly::zero(), |acc, j| {
            let term = s2(j, k).times(&falling_int(r as i64, n - j));
            acc.plus(&term.scale(&Rational::from_integer(binomial(n, j))))
        });
        acc.plus(&shifted_falling(k).times(&inner).scale(&index_weight(p, k)))
    });
    total.scale(&sign(n))
}

/// (−1)ⁿ Σₖ ∏(λ−j)/(k+1)ᵖ S⁽ʳ⁾₂,λ(n+r,k+r).
pub(crate) fn at_neg_r_rstirling(p: i64, n: usize, r: usize) -> LambdaPoly {
    let total = (0..=n).fold(LambdaPoly::zero(), |acc, k| {
        acc.plus(
            &shifted_falling(k)
                .times(&rs2(n, k, r))
                .scale(&index_weight(p, k)),
        )
    });
    total.scale(&sign(n))
}

/// β⁽ᵖ⁾ₙ,λ(−r) for a nonnegative integer r.
///
/// Both explicit sums are evaluated and compared with the closed form
/// substituted at x = −r.
pub fn poly_bernoulli_at_neg_r(p: i64, n: i64, r: i64) -> Result<LambdaPoly> {
    let (n, r) = (index("n", n)?, index("r", r)?);
    let conv = at_neg_r_convolution(p, n, r);
    let rstir = at_neg_r_rstirling(p, n, r);
    let substituted = closed(p, n, ClosedForm::ShiftedStirlingPoly)?
        .eval(&Assignment::new().x(-(r as i64)))
        .to_lambda()
        .expect("x-free after substitution");
    for (name, value) in [("r-Stirling", &rstir), ("substitution", &substituted)] {
        if value != &conv {
            return Err(Error::InternalIdentityFailure {
                what: format!("beta^({p})_{n},l(-{r})"),
                detail: format!("convolution {conv} vs {name} {value}"),
            });
        }
    }
    Ok(conv)
}

/// Compares Li₁,λ(t) with −log_λ(1 − t) coefficientwise up to `order`.
pub fn check_polylog_log_bridge(order: i64) -> Result<IdentityReport> {
    let order = index("order", order)?;
    let case = identity::find_case("eq42").expect("catalog carries the polylog/log bridge");
    let limits = Limits {
        n_max: order,
        ..Limits::default()
    };
    Ok(identity::run_identity(&case, &limits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::Status;
    use crate::rings::LambdaRing;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn expected_p1_n1() -> MultiPoly {
        MultiPoly::x() + MultiPoly::from_rational(q(1, 2)) - MultiPoly::lambda().scale(&q(1, 2))
    }

    #[test]
    fn gf_examples() {
        for p in -3..=3 {
            assert_eq!(poly_bernoulli_gf(p, 0).unwrap(), vec![MultiPoly::one()]);
        }
        assert_eq!(poly_bernoulli_gf(1, 1).unwrap()[1], expected_p1_n1());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            poly_bernoulli_closed(1, 1, ClosedForm::ShiftedStirlingPoly).unwrap(),
            expected_p1_n1()
        );
        for p in [-2, 0, 3] {
            for form in ClosedForm::ALL {
                assert_eq!(poly_bernoulli_closed(p, 0, form).unwrap(), MultiPoly::one());
            }
        }
        assert!(matches!(
            poly_bernoulli_closed(1, -1, ClosedForm::StirlingConvolution),
            Err(Error::NegativeIndex { .. })
        ));
    }

    #[test]
    fn checked_entry_point_agrees() {
        for p in -2..=2 {
            for n in 0..=4 {
                poly_bernoulli(p, n).unwrap();
            }
        }
    }

    #[test]
    fn negate_and_shift_commute() {
        for n in 0..=5 {
            for k in 0..=n {
                let base = stirling_poly_checked(n, k).unwrap();
                let shift = Rational::from_integer(-(k as i64));
                let a = base.negate_lambda().shift_x(&shift);
                let b = base.shift_x(&shift).negate_lambda();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn at_neg_r_examples() {
        assert_eq!(
            poly_bernoulli_at_neg_r(1, 1, 1).unwrap(),
            LambdaPoly::from_coeffs(vec![q(-1, 2), q(-1, 2)])
        );
        for n in 0..=5 {
            let at_zero = poly_bernoulli_at_neg_r(2, n, 0).unwrap();
            let closed_at_zero = poly_bernoulli_closed(2, n, ClosedForm::AlternatingFactorials)
                .unwrap()
                .eval(&Assignment::new().x(0));
            assert_eq!(at_zero.to_multi(), closed_at_zero);
        }
        assert!(poly_bernoulli_at_neg_r(1, 2, -1).is_err());
    }

    #[test]
    fn polylog_bridge_reports() {
        let small = check_polylog_log_bridge(1).unwrap();
        assert_eq!(small.status, Status::Pass);
        let report = check_polylog_log_bridge(8).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.points, 9);
    }
}
