//! The identity catalog.
//!
//! Ids follow the equation or theorem they exercise ("eq12", "thm7");
//! r-analogues of a defining relation take a ".r" suffix and sampled
//! checks use the "guard." prefix.

use super::{Bound, IdentityCase, Point, Route, Sweep};
use crate::bernoulli::{
    beta_at_r_difference, beta_at_r_double_sum, beta_at_r_stirling, beta_deg_gf,
    beta_number_difference, beta_number_double_sum, beta_number_stirling, beta_poly_difference,
    beta_poly_double_sum, beta_poly_stirling, carlitz_beta, fubini_closed, fubini_deg_gf,
    fubini_neg_arg, fubini_substituted, integrated_fubini, integrated_fubini_gf,
    integrated_fubini_upper, BetaMode, FubiniShift,
};
use crate::poly_bernoulli::{
    alternating_negated_falling, at_neg_r_convolution, at_neg_r_rstirling, closed,
    negated_falling_x_minus, negated_shifted_stirling_poly, poly_bernoulli_gf,
    stirling_negated_falling, ClosedForm,
};
use crate::rings::{binomial, factorial, Assignment, LambdaPoly, MultiPoly, Rational, Ring};
use crate::series::{
    deg_log_series, deg_polylog_series, degenerate_falling, exp_deg_minus_one, exp_deg_series,
    shifted_falling, shifted_rising, Sign, TruncatedSeries,
};
use crate::stirling::{
    alternating_sum, falling, falling_int, forward_difference, rs2, rs2_convolution,
    rstirling2_deg_gf, s2, stirling2_deg_gf, stirling_poly_alternating, stirling_poly_checked,
    stirling_poly_convolution, stirling_poly_gf, FallingKind,
};

const N: (&str, Bound) = ("n", Bound::N);
const K: (&str, Bound) = ("k", Bound::UpToN);
const R: (&str, Bound) = ("r", Bound::R);
const P: (&str, Bound) = ("p", Bound::P);
const PB_N: (&str, Bound) = ("n", Bound::PolyBernoulliN);

/// λ values for the sampled prefactor guards. λ = 0 is excluded because
/// the literal form divides by λ.
const LAMBDA_SAMPLES: [(i64, i64); 4] = [(1, 2), (-2, 3), (5, 1), (7, 3)];

fn m(p: LambdaPoly) -> MultiPoly {
    p.to_multi()
}

fn int(v: i64) -> MultiPoly {
    MultiPoly::from_integer(v)
}

fn q(v: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(v)
}

fn sign(k: usize) -> Rational {
    q(if k % 2 == 1 { -1 } else { 1 })
}

fn at_lambda_zero(p: &MultiPoly) -> MultiPoly {
    p.eval(&Assignment::new().lambda(0))
}

fn nth<T: Clone>(v: Vec<T>, n: usize) -> T {
    v[n].clone()
}

fn sweep(params: &[(&'static str, Bound)]) -> Sweep {
    Sweep::new(params)
}

/// e^{at} with the undeformed exponential.
fn classical_exp(a: &MultiPoly, order: usize) -> TruncatedSeries<MultiPoly> {
    let mut fact = Rational::from_integer(1);
    TruncatedSeries::from_fn(order, |k| {
        if k > 0 {
            fact = fact.clone() * q(k as i64);
        }
        a.pow(k).scale(&fact.recip().expect("k! is nonzero"))
    })
}

/// n![tⁿ] of t/(e^t − 1)·e^{xt}.
fn classical_bernoulli(n: usize) -> crate::Result<MultiPoly> {
    let order = n + 1;
    let mut em1 = classical_exp(&MultiPoly::one(), order);
    em1 = em1.sub(&TruncatedSeries::one(order));
    let kernel = TruncatedSeries::<MultiPoly>::variable(order).div(&em1)?;
    Ok(nth(
        kernel
            .mul(&classical_exp(&MultiPoly::x(), n))
            .egf_coefficients(),
        n,
    ))
}

/// Δᵏ applied to a polynomial in x by repeated shifting.
fn iterated_difference(mut p: MultiPoly, k: usize) -> MultiPoly {
    for _ in 0..k {
        p = p.shift_x(&q(1)).minus(&p);
    }
    p
}

/// The literal prefactor (±λ)ᵏ·(1)ₖ₊₁,₁/λ at a nonzero rational λ.
fn literal_prefactor(lambda: &Rational, k: usize, negate: bool) -> Rational {
    let inv = lambda.recip().expect("sample λ is nonzero");
    let falling = (0..=k).fold(q(1), |acc, i| acc * (q(1) - inv.clone() * q(i as i64)));
    let base = if negate {
        -lambda.clone()
    } else {
        lambda.clone()
    };
    base.powi(k as i64).expect("nonnegative power") * falling
}

fn stirling_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "eq4",
            &["(4)"],
            "(x)_{n,l} expands in ordinary falling factorials with S2,l(n,k) coefficients",
            sweep(&[N]),
            |pt: &Point| -> crate::Result<Vec<Route>> {
                let n = pt.index("n");
                let x = MultiPoly::x();
                let expansion = (0..=n).fold(MultiPoly::zero(), |acc, k| {
                    acc.plus(&m(s2(n, k)).times(&falling(FallingKind::Ordinary, &x, k)))
                });
                Ok(vec![("degenerate_falling", degenerate_falling(&x, n)), ("stirling_expansion", expansion)])
            },
        ),
        IdentityCase::new(
            "eq4.r",
            &["(5)"],
            "(x+r)_{n,l} expands in ordinary falling factorials with r-Stirling coefficients",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.index("r"));
                let x = MultiPoly::x();
                let expansion = (0..=n).fold(MultiPoly::zero(), |acc, k| {
                    acc.plus(&m(rs2(n, k, r)).times(&falling(FallingKind::Ordinary, &x, k)))
                });
                let lhs = degenerate_falling(&x.plus(&int(r as i64)), n);
                Ok(vec![("degenerate_falling", lhs), ("rstirling_expansion", expansion)])
            },
        ),
        IdentityCase::new(
            "eq12",
            &["(6)", "(11)", "(12)"],
            "alternating sum for S2,l(n,k) matches (e_l(t)-1)^k/k! coefficients",
            sweep(&[N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                let gf = nth(stirling2_deg_gf(n as i64, k as i64)?, n);
                Ok(vec![("alternating_sum", m(s2(n, k))), ("generating_function", m(gf))])
            },
        ),
        IdentityCase::new(
            "eq14",
            &["(7)", "(13)", "(14)", "(49)"],
            "alternating sum for the r-Stirling numbers matches e_l^r(t)(e_l(t)-1)^k/k! coefficients",
            sweep(&[N, K, R]),
            |pt: &Point| {
                let (n, k, r) = (pt.index("n"), pt.index("k"), pt.index("r"));
                let gf = nth(rstirling2_deg_gf(n as i64, k as i64, r as i64)?, n);
                Ok(vec![("alternating_sum", m(rs2(n, k, r))), ("generating_function", m(gf))])
            },
        ),
        IdentityCase::new(
            "eq32",
            &["(32)"],
            "r-Stirling numbers as a binomial convolution of S2,l with (r)_{n-l,l}",
            sweep(&[N, K, R]),
            |pt: &Point| {
                let (n, k, r) = (pt.index("n"), pt.index("k"), pt.index("r"));
                Ok(vec![("alternating_sum", m(rs2(n, k, r))), ("convolution", m(rs2_convolution(n, k, r)))])
            },
        ),
        IdentityCase::new(
            "eq33",
            &["(1)", "(33)"],
            "binomial theorem for degenerate falling factorials",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let (x, y) = (MultiPoly::x(), MultiPoly::y());
                let direct = degenerate_falling(&x.plus(&y), n);
                let product = exp_deg_series(&x, n, Sign::Plus).mul(&exp_deg_series(&y, n, Sign::Plus));
                let binomial_sum = (0..=n).fold(MultiPoly::zero(), |acc, l| {
                    let term = degenerate_falling(&x, l).times(&degenerate_falling(&y, n - l));
                    acc.plus(&term.scale(&q(binomial(n, l))))
                });
                Ok(vec![
                    ("falling_of_sum", direct),
                    ("exponential_product", nth(product.egf_coefficients(), n)),
                    ("binomial_sum", binomial_sum),
                ])
            },
        ),
        IdentityCase::new(
            "eq22",
            &["(22)", "(39)"],
            "alternating sum of shifted (x+j)_{n,l} equals the k-fold forward difference",
            sweep(&[N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                let x = MultiPoly::x();
                let alternating = alternating_sum(k, |j| degenerate_falling(&x.plus(&int(j as i64)), n));
                let iterated = iterated_difference(degenerate_falling(&x, n), k);
                Ok(vec![("alternating_sum", alternating), ("iterated_difference", iterated)])
            },
        ),
        IdentityCase::new(
            "eq23",
            &["(23)"],
            "k-th forward difference of (x)_{n,l} at 0 equals k! S2,l(n,k)",
            sweep(&[N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                let at_zero = iterated_difference(degenerate_falling(&MultiPoly::x(), n), k)
                    .eval(&Assignment::new().x(0));
                Ok(vec![("difference_at_zero", at_zero), ("factorial_stirling", m(s2(n, k)).scale(&q(factorial(k))))])
            },
        ),
        IdentityCase::new(
            "eq34",
            &["(34)"],
            "alternating sum of (r+j)_{n,l} through the binomial theorem",
            sweep(&[N, K, R]),
            |pt: &Point| {
                let (n, k, r) = (pt.index("n"), pt.index("k"), pt.index("r"));
                let direct = (0..=k).fold(LambdaPoly::zero(), |acc, j| {
                    acc.plus(&falling_int((r + j) as i64, n).scale(&(q(binomial(k, j)) * sign(j))))
                });
                let expanded = (0..=k).fold(LambdaPoly::zero(), |acc, j| {
                    let inner = (0..=n).fold(LambdaPoly::zero(), |acc, l| {
                        let term = falling_int(r as i64, n - l).times(&falling_int(j as i64, l));
                        acc.plus(&term.scale(&q(binomial(n, l))))
                    });
                    acc.plus(&inner.scale(&(q(binomial(k, j)) * sign(j))))
                });
                let stirling = (0..=n).fold(LambdaPoly::zero(), |acc, l| {
                    let term = falling_int(r as i64, n - l).times(&s2(l, k));
                    acc.plus(&term.scale(&q(binomial(n, l))))
                });
                let stirling = stirling.scale(&(q(factorial(k)) * sign(k)));
                Ok(vec![("direct", m(direct)), ("expanded", m(expanded)), ("stirling", m(stirling))])
            },
        ),
        IdentityCase::new(
            "eq35",
            &["(34-1)", "(35)"],
            "Stirling polynomials by convolution, alternating sum and generating function",
            sweep(&[N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                Ok(vec![
                    ("convolution", stirling_poly_convolution(n, k)),
                    ("alternating_sum", stirling_poly_alternating(n, k)),
                    ("generating_function", nth(stirling_poly_gf(n as i64, k as i64)?, n)),
                ])
            },
        ),
    ]
}

fn bernoulli_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "thm1",
            &["Theorem 1", "(3)", "(20)"],
            "Bernoulli numbers by Stirling sum, double alternating sum and generating function",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("stirling", m(beta_number_stirling(n))),
                    ("double_sum", m(beta_number_double_sum(n))),
                    ("generating_function", nth(beta_deg_gf(n as i64, BetaMode::Number)?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "cor2",
            &["Corollary 2"],
            "Bernoulli numbers through forward differences of (0)_{n,l}",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![("difference", m(beta_number_difference(n))), ("stirling", m(beta_number_stirling(n)))])
            },
        ),
        IdentityCase::new(
            "thm3",
            &["Theorem 3", "(28)"],
            "Bernoulli values at x = r by r-Stirling sum, double sum, polynomial and generating function",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.index("r"));
                let poly_at_r = beta_poly_stirling(n)?.eval(&Assignment::new().x(r as i64));
                Ok(vec![
                    ("rstirling", m(beta_at_r_stirling(n, r))),
                    ("double_sum", m(beta_at_r_double_sum(n, r))),
                    ("polynomial_at_r", poly_at_r),
                    ("generating_function", nth(beta_deg_gf(n as i64, BetaMode::AtR(r as i64))?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "cor4",
            &["Corollary 4", "(30)"],
            "Bernoulli values at x = r through forward differences of (r)_{n,l}",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.index("r"));
                Ok(vec![
                    ("difference", m(beta_at_r_difference(n, r))),
                    ("rstirling", m(beta_at_r_stirling(n, r))),
                ])
            },
        ),
        IdentityCase::new(
            "thm5",
            &["Theorem 5", "(31)"],
            "signed alternating sum of (j+r)_{n,l} as a Stirling convolution",
            sweep(&[N, K, R]),
            |pt: &Point| {
                let (n, k, r) = (pt.index("n"), pt.index("k"), pt.index("r"));
                let lhs = (0..=k).fold(LambdaPoly::zero(), |acc, j| {
                    acc.plus(&falling_int((r + j) as i64, n).scale(&(q(binomial(k, j)) * sign(j))))
                });
                let weight = q(factorial(k)) * sign(k);
                let convolution = m(rs2_convolution(n, k, r)).scale(&weight);
                let samples: Vec<LambdaPoly> = (0..=k).map(|j| falling_int((r + j) as i64, n)).collect();
                let difference = forward_difference(&samples, k as i64)?.scale(&sign(k));
                Ok(vec![("alternating_sum", m(lhs)), ("convolution", convolution), ("difference", m(difference))])
            },
        ),
        IdentityCase::new(
            "thm6",
            &["Theorem 6", "(3)"],
            "Bernoulli polynomials by Stirling polynomial sum, double sum and generating function",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("stirling_poly", beta_poly_stirling(n)?),
                    ("double_sum", beta_poly_double_sum(n)),
                    ("generating_function", nth(beta_deg_gf(n as i64, BetaMode::SymbolicX)?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "eq39",
            &["(39)"],
            "Bernoulli polynomials through forward differences of (x)_{n,l}",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![("difference", beta_poly_difference(n)), ("stirling_poly", beta_poly_stirling(n)?)])
            },
        ),
        IdentityCase::new(
            "lambda0.beta",
            &["(3)"],
            "Bernoulli polynomials at l = 0 against the classical t/(e^t-1) e^{xt} kernel",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let gf = nth(beta_deg_gf(n as i64, BetaMode::SymbolicX)?, n);
                Ok(vec![
                    ("closed_form", at_lambda_zero(&beta_poly_stirling(n)?)),
                    ("generating_function", at_lambda_zero(&gf)),
                    ("classical", classical_bernoulli(n)?),
                ])
            },
        ),
        IdentityCase::new(
            "lambda0.carlitz",
            &["(2)"],
            "Carlitz polynomials at l = 0 against the classical kernel",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("carlitz", at_lambda_zero(&carlitz_beta(n as i64)?)),
                    ("classical", classical_bernoulli(n)?),
                ])
            },
        ),
    ]
}

fn fubini_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "eq8",
            &["(8)"],
            "Fubini polynomial at y = r as an r-Stirling sum",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.index("r"));
                let at_r = fubini_closed(n).eval(&Assignment::new().y(r as i64));
                let x = MultiPoly::x();
                let sum = (0..=n).fold(MultiPoly::zero(), |acc, k| {
                    acc.plus(&m(rs2(n, k, r)).times(&x.pow(k)).scale(&q(factorial(k))))
                });
                Ok(vec![("fubini_at_r", at_r), ("rstirling_sum", sum)])
            },
        ),
        IdentityCase::new(
            "eq10",
            &["(9)", "(10)"],
            "Fubini double sum matches e_l^y(t)/(1-x(e_l(t)-1)) coefficients",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![("double_sum", fubini_closed(n)), ("generating_function", nth(fubini_deg_gf(n as i64)?, n))])
            },
        ),
        IdentityCase::new(
            "eq16",
            &["(15)", "(16)"],
            "alternating Fubini sum equals the Fubini polynomial at x = -y, y = 0",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n") as i64;
                Ok(vec![
                    ("alternating_sum", fubini_neg_arg(n, FubiniShift::None)?),
                    ("substituted", fubini_substituted(n, FubiniShift::None)?),
                ])
            },
        ),
        IdentityCase::new(
            "eq17",
            &["(17)"],
            "antiderivative of the alternating Fubini sum in closed form",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let x = MultiPoly::x();
                let explicit = (0..=n).fold(MultiPoly::zero(), |acc, k| {
                    let w = q(factorial(k)) * sign(k) * Rational::new(1, k as i64 + 1);
                    acc.plus(&m(s2(n, k)).times(&x.pow(k + 1)).scale(&w))
                });
                Ok(vec![("integrated", integrated_fubini(n as i64, FubiniShift::None)?), ("explicit", explicit)])
            },
        ),
        IdentityCase::new(
            "eq18",
            &["(18)"],
            "integrated Fubini sums match log(1+z(e_l(t)-1))/(e_l(t)-1) coefficients",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("integrated", integrated_fubini_upper(n as i64, FubiniShift::None)?),
                    ("generating_function", nth(integrated_fubini_gf(n as i64, FubiniShift::None)?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "eq19",
            &["(19)", "(20)"],
            "integrated Fubini sum with upper limit 1 equals the Bernoulli number",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let at_one = integrated_fubini(n as i64, FubiniShift::None)?.eval(&Assignment::new().x(1));
                Ok(vec![
                    ("integrated_at_one", at_one),
                    ("stirling", m(beta_number_stirling(n))),
                    ("generating_function", nth(beta_deg_gf(n as i64, BetaMode::Number)?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "eq26",
            &["(25)", "(26)"],
            "alternating r-Fubini sum equals the Fubini polynomial at x = -y, y = r",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.get("n"), pt.get("r"));
                Ok(vec![
                    ("alternating_sum", fubini_neg_arg(n, FubiniShift::R(r))?),
                    ("substituted", fubini_substituted(n, FubiniShift::R(r))?),
                ])
            },
        ),
        IdentityCase::new(
            "eq27",
            &["(24)", "(27)"],
            "integrated r-Fubini sums match e_l^r(t) log(1+z(e_l(t)-1))/(e_l(t)-1) coefficients",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.get("r"));
                Ok(vec![
                    ("integrated", integrated_fubini_upper(n as i64, FubiniShift::R(r))?),
                    ("generating_function", nth(integrated_fubini_gf(n as i64, FubiniShift::R(r))?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "eq28",
            &["(28)"],
            "integrated r-Fubini sum with upper limit 1 equals the Bernoulli value at r",
            sweep(&[N, R]),
            |pt: &Point| {
                let (n, r) = (pt.index("n"), pt.index("r"));
                let at_one = integrated_fubini(n as i64, FubiniShift::R(r as i64))?.eval(&Assignment::new().x(1));
                Ok(vec![("integrated_at_one", at_one), ("rstirling", m(beta_at_r_stirling(n, r)))])
            },
        ),
        IdentityCase::new(
            "eq36",
            &["(36)"],
            "alternating Fubini sum with Stirling polynomials equals the Fubini polynomial at x = -y, y = x",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.get("n");
                Ok(vec![
                    ("alternating_sum", fubini_neg_arg(n, FubiniShift::SymbolicX)?),
                    ("substituted", fubini_substituted(n, FubiniShift::SymbolicX)?),
                ])
            },
        ),
        IdentityCase::new(
            "eq37",
            &["(37)"],
            "integrated x-shifted Fubini sums match e_l^x(t) log(1+z(e_l(t)-1))/(e_l(t)-1) coefficients",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("integrated", integrated_fubini_upper(n as i64, FubiniShift::SymbolicX)?),
                    ("generating_function", nth(integrated_fubini_gf(n as i64, FubiniShift::SymbolicX)?, n)),
                ])
            },
        ),
        IdentityCase::new(
            "eq38",
            &["(38)"],
            "integrated x-shifted Fubini sum with upper limit 1 equals the Bernoulli polynomial",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                Ok(vec![
                    ("integrated_at_one", integrated_fubini(n as i64, FubiniShift::SymbolicX)?),
                    ("stirling_poly", beta_poly_stirling(n)?),
                    ("generating_function", nth(beta_deg_gf(n as i64, BetaMode::SymbolicX)?, n)),
                ])
            },
        ),
    ]
}

fn series_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "eq41",
            &["(41)"],
            "log_l(1+t) and e_l(t)-1 are compositional inverses",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let log = deg_log_series(n);
                let em1 = exp_deg_minus_one::<LambdaPoly>(n);
                let variable = TruncatedSeries::<LambdaPoly>::variable(n);
                Ok(vec![
                    ("log_of_exp", m(log.compose(&em1)?.coeff(n).clone())),
                    ("exp_of_log", m(em1.compose(&log)?.coeff(n).clone())),
                    ("identity", m(variable.coeff(n).clone())),
                ])
            },
        ),
        IdentityCase::new(
            "eq42",
            &["(40)", "(42)"],
            "Li_{1,l}(t) equals -log_l(1-t)",
            sweep(&[N]),
            |pt: &Point| {
                let n = pt.index("n");
                let minus_t = TruncatedSeries::<LambdaPoly>::variable(n).neg();
                let rhs = deg_log_series(n).compose(&minus_t)?.neg();
                Ok(vec![
                    ("polylog", m(deg_polylog_series(1, n).coeff(n).clone())),
                    ("negated_log", m(rhs.coeff(n).clone())),
                ])
            },
        ),
        IdentityCase::new(
            "guard.rising",
            &[],
            "(-l)^k (1)_{k+1,1/l} equals prod_{j=1}^k (j - l) at sampled l",
            sweep(&[
                ("k", Bound::N),
                ("sample", Bound::Fixed(LAMBDA_SAMPLES.len() as i64)),
            ]),
            |pt: &Point| {
                let (k, s) = (pt.index("k"), pt.index("sample"));
                let (num, den) = LAMBDA_SAMPLES[s];
                let lambda = Rational::new(num, den);
                let poly = shifted_rising(k).eval_at(&lambda);
                Ok(vec![
                    (
                        "literal",
                        MultiPoly::from_rational(literal_prefactor(&lambda, k, true)),
                    ),
                    ("product", MultiPoly::from_rational(poly)),
                ])
            },
        )
        .sampled(),
        IdentityCase::new(
            "guard.falling",
            &[],
            "l^k (1)_{k+1,1/l} equals prod_{j=1}^k (l - j) at sampled l",
            sweep(&[
                ("k", Bound::N),
                ("sample", Bound::Fixed(LAMBDA_SAMPLES.len() as i64)),
            ]),
            |pt: &Point| {
                let (k, s) = (pt.index("k"), pt.index("sample"));
                let (num, den) = LAMBDA_SAMPLES[s];
                let lambda = Rational::new(num, den);
                let poly = shifted_falling(k).eval_at(&lambda);
                Ok(vec![
                    (
                        "literal",
                        MultiPoly::from_rational(literal_prefactor(&lambda, k, false)),
                    ),
                    ("product", MultiPoly::from_rational(poly)),
                ])
            },
        )
        .sampled(),
    ]
}

fn poly_bernoulli_cases() -> Vec<IdentityCase> {
    let gf = |p: i64, n: usize| -> crate::Result<MultiPoly> {
        Ok(nth(poly_bernoulli_gf(p, n as i64)?, n))
    };
    let theorem = |id: &'static str,
                   anchors: &'static [&'static str],
                   summary: &'static str,
                   form: ClosedForm| {
        IdentityCase::new(
            id,
            anchors,
            summary,
            sweep(&[P, PB_N]),
            move |pt: &Point| {
                let (p, n) = (pt.get("p"), pt.index("n"));
                Ok(vec![
                    ("generating_function", gf(p, n)?),
                    ("closed_form", closed(p, n, form)?),
                ])
            },
        )
    };
    vec![
        theorem(
            "thm7",
            &["Theorem 7", "(43)", "(46)"],
            "poly-Bernoulli polynomials as a sum of l-negated, x-shifted Stirling polynomials",
            ClosedForm::ShiftedStirlingPoly,
        ),
        theorem(
            "thm8",
            &["Theorem 8"],
            "poly-Bernoulli polynomials as alternating sums of (x-l)_{n,-l}",
            ClosedForm::AlternatingFactorials,
        ),
        theorem(
            "thm9",
            &["Theorem 9"],
            "poly-Bernoulli polynomials as a convolution of S2,l(j,k) with (x)_{n-j,-l}",
            ClosedForm::StirlingConvolution,
        ),
        IdentityCase::new(
            "eq44",
            &["(44)"],
            "index-1 poly-Bernoulli kernel reduces to t/(1-e_l(-t)) e_l^{-x}(-t)",
            sweep(&[PB_N]),
            move |pt: &Point| {
                let n = pt.index("n");
                let order = n + 1;
                let x = MultiPoly::x();
                let one_minus = TruncatedSeries::one(order).sub(&exp_deg_series(
                    &MultiPoly::one(),
                    order,
                    Sign::Minus,
                ));
                let direct = TruncatedSeries::<MultiPoly>::variable(order)
                    .div(&one_minus)?
                    .mul(&exp_deg_series(&-x.clone(), n, Sign::Minus));
                let carlitz_shape = TruncatedSeries::<MultiPoly>::variable(order)
                    .div(&exp_deg_minus_one(order))?
                    .mul(&exp_deg_series(&x.plus(&MultiPoly::one()), n, Sign::Plus));
                Ok(vec![
                    ("generating_function", gf(1, n)?),
                    ("reduced_kernel", nth(direct.egf_coefficients(), n)),
                    (
                        "negated_carlitz_kernel",
                        nth(carlitz_shape.egf_coefficients(), n).negate_lambda(),
                    ),
                ])
            },
        ),
        IdentityCase::new(
            "eq45",
            &["(45)"],
            "index-1 poly-Bernoulli polynomial equals the Carlitz polynomial at x+1 with l negated",
            sweep(&[PB_N]),
            move |pt: &Point| {
                let n = pt.index("n");
                let carlitz = carlitz_beta(n as i64)?.negate_lambda().shift_x(&q(1));
                Ok(vec![
                    ("generating_function", gf(1, n)?),
                    ("carlitz", carlitz),
                ])
            },
        ),
        IdentityCase::new(
            "eq47",
            &["(47)"],
            "S2,-l(n,k|x-k) as alternating sums of shifted (.)_{n,-l}",
            sweep(&[PB_N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                let inv = Rational::new(1, factorial(k));
                let x = MultiPoly::x();
                let shifted = alternating_sum(k, |l| {
                    degenerate_falling(&x.plus(&int(l as i64 - k as i64)), n).negate_lambda()
                })
                .scale(&inv);
                let reflected = alternating_negated_falling(n, k).scale(&inv);
                let shift_first = stirling_poly_checked(n, k)?
                    .shift_x(&q(-(k as i64)))
                    .negate_lambda();
                Ok(vec![
                    ("stirling_poly", negated_shifted_stirling_poly(n, k)?),
                    ("shift_then_negate", shift_first),
                    ("alternating_sum", shifted),
                    ("reflected_sum", reflected),
                ])
            },
        ),
        IdentityCase::new(
            "eq48",
            &["(48)"],
            "alternating sums of (x-l)_{n,-l} through the binomial theorem and S2,l",
            sweep(&[PB_N, K]),
            |pt: &Point| {
                let (n, k) = (pt.index("n"), pt.index("k"));
                let x = MultiPoly::x();
                let expanded = (0..=k).fold(MultiPoly::zero(), |acc, l| {
                    let inner = (0..=n).fold(MultiPoly::zero(), |acc, j| {
                        let term = degenerate_falling(&x, n - j)
                            .negate_lambda()
                            .times(&m(falling_int(l as i64, j)));
                        acc.plus(&term.scale(&(q(binomial(n, j)) * sign(j))))
                    });
                    acc.plus(&inner.scale(&(q(binomial(k, l)) * sign(l))))
                });
                let direct = (0..=k).fold(MultiPoly::zero(), |acc, l| {
                    acc.plus(&negated_falling_x_minus(l, n).scale(&(q(binomial(k, l)) * sign(l))))
                });
                Ok(vec![
                    ("alternating_sum", direct),
                    ("expanded", expanded),
                    ("stirling", stirling_negated_falling(n, k)),
                ])
            },
        ),
        IdentityCase::new(
            "thm10",
            &["Theorem 10", "(50)"],
            "poly-Bernoulli values at x = -r by convolution, r-Stirling sum and substitution",
            sweep(&[P, PB_N, ("r", Bound::SmallR)]),
            |pt: &Point| {
                let (p, n, r) = (pt.get("p"), pt.index("n"), pt.index("r"));
                let at = Assignment::new().x(-(r as i64));
                Ok(vec![
                    ("convolution", m(at_neg_r_convolution(p, n, r))),
                    ("rstirling", m(at_neg_r_rstirling(p, n, r))),
                    (
                        "stirling_poly_form",
                        closed(p, n, ClosedForm::ShiftedStirlingPoly)?.eval(&at),
                    ),
                    (
                        "convolution_form",
                        closed(p, n, ClosedForm::StirlingConvolution)?.eval(&at),
                    ),
                ])
            },
        ),
    ]
}

/// Every catalog case, in a fixed order.
pub fn catalog() -> Vec<IdentityCase> {
    let mut cases = stirling_cases();
    cases.extend(bernoulli_cases());
    cases.extend(fubini_cases());
    cases.extend(series_cases());
    cases.extend(poly_bernoulli_cases());
    cases
}

/// Deliberately corrupted cases that must fail.
pub fn negative_controls() -> Vec<IdentityCase> {
    let all = catalog();
    let base = |id: &str| all.iter().find(|c| c.id == id).expect("catalog id").clone();
    vec![
        base("thm1").corrupted("neg.thm1-sign", "double_sum", |_, v| v.negated()),
        base("eq12").corrupted("neg.eq12-lambda", "generating_function", |_, v| {
            v.negate_lambda()
        }),
        base("eq4").corrupted("neg.eq4-shift", "stirling_expansion", |pt, v| {
            if pt.get("n") >= 3 {
                v.shift_x(&q(1))
            } else {
                v
            }
        }),
    ]
}
