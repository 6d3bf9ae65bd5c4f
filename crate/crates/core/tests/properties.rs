use degen_core::rings::{Assignment, LambdaPoly, MultiPoly, Rational, Ring};
use degen_core::series::{exp_deg_series, Sign, TruncatedSeries};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn multi() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0usize..3, 0usize..3, 0usize..3), rational()), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(MultiPoly::zero(), |acc, ((a, b, c), q)| {
                acc + MultiPoly::term([a, b, c], q)
            })
    })
}

fn lambda_poly() -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec(rational(), 0..4).prop_map(LambdaPoly::from_coeffs)
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<LambdaPoly>> {
    prop::collection::vec(lambda_poly(), order + 1)
        .prop_map(move |c| TruncatedSeries::new(c, order))
}

/// Series with a nonzero rational constant term.
fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries<LambdaPoly>> {
    (
        series(order),
        rational().prop_filter("nonzero", |q| *q != Rational::from_integer(0)),
    )
        .prop_map(move |(s, c)| {
            let mut coeffs = s.coeffs().to_vec();
            coeffs.resize(order + 1, LambdaPoly::zero());
            coeffs[0] = LambdaPoly::constant(c);
            TruncatedSeries::new(coeffs, order)
        })
}

fn nilpotent(order: usize) -> impl Strategy<Value = TruncatedSeries<LambdaPoly>> {
    series(order).prop_map(move |s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(order + 1, LambdaPoly::zero());
        coeffs[0] = LambdaPoly::zero();
        TruncatedSeries::new(coeffs, order)
    })
}

fn assignment() -> impl Strategy<Value = Assignment> {
    (rational(), rational(), rational()).prop_map(|(l, x, y)| Assignment::new().lambda(l).x(x).y(y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in multi(), b in multi(), c in multi()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.plus(&MultiPoly::zero()), a.clone());
        prop_assert_eq!(a.times(&MultiPoly::one()), a.clone());
        prop_assert!(a.minus(&a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in multi(), b in multi(), at in assignment()) {
        let ev = |p: &MultiPoly| p.eval(&at);
        prop_assert_eq!(ev(&a.plus(&b)), ev(&a).plus(&ev(&b)));
        prop_assert_eq!(ev(&a.times(&b)), ev(&a).times(&ev(&b)));
        prop_assert!(ev(&a).as_rational().is_some());
    }

    #[test]
    fn division_inverts_multiplication(a in series(5), b in unit_series(5)) {
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn composition_is_associative(f in series(4), g in nilpotent(4), h in nilpotent(4)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn degenerate_exponential_adds_exponents(a in rational(), b in rational()) {
        let order = 6;
        let (a, b) = (LambdaPoly::constant(a), LambdaPoly::constant(b));
        let product = exp_deg_series(&a, order, Sign::Plus).mul(&exp_deg_series(&b, order, Sign::Plus));
        prop_assert_eq!(product, exp_deg_series(&a.plus(&b), order, Sign::Plus));
    }
}

#[test]
fn symbolic_exponential_product() {
    let order = 6;
    let (x, y) = (MultiPoly::x(), MultiPoly::y());
    let product = exp_deg_series(&x, order, Sign::Plus).mul(&exp_deg_series(&y, order, Sign::Plus));
    assert_eq!(product, exp_deg_series(&x.plus(&y), order, Sign::Plus));
}
