//! Acceptance criteria. Each criterion prints one PASS/FAIL line to
//! stderr (bypassing test output capture); the test fails if any
//! criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use degen_core::bernoulli::{beta_deg_number, beta_deg_poly};
use degen_core::identity::{
    all_pass, catalog, negative_controls, run_cases, run_identity, run_suite, IdentityCase,
    IdentityReport, Limits, Status,
};
use degen_core::poly_bernoulli::check_polylog_log_bridge;
use degen_core::rings::{Assignment, LambdaPoly, LambdaRing, MultiPoly, Rational, Ring};
use degen_core::stirling::{rstirling2_deg, stirling2_deg};
use degen_core::tables::{Family, LambdaSpec, Table, TableRequest};

mod common;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

/// Runs one criterion, reports it, and returns whether it passed.
fn criterion(
    number: &str,
    title: &str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Outcome,
) -> bool {
    let start = Instant::now();
    let mut outcome = body();
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            outcome = fail(format!(
                "{} (took {:.1}s, budget {:.0}s)",
                outcome.detail,
                elapsed.as_secs_f64(),
                b.as_secs_f64()
            ));
        }
    }
    let line = format!(
        "[{}] criterion {number}: {title} ({:.2}s) {}\n",
        if outcome.ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        outcome.detail
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    outcome.ok
}

fn cases(ids: &[&str]) -> Vec<IdentityCase> {
    let all = catalog();
    ids.iter()
        .map(|id| {
            all.iter()
                .find(|c| c.id == *id)
                .unwrap_or_else(|| panic!("catalog has {id}"))
                .clone()
        })
        .collect()
}

fn suite_outcome(reports: &[IdentityReport]) -> Outcome {
    let points: usize = reports.iter().map(|r| r.points).sum();
    match reports.iter().find(|r| r.status == Status::Fail) {
        None => pass(format!("{} identities, {points} points", reports.len())),
        Some(r) => fail(r.to_json_line(false)),
    }
}

fn run(ids: &[&str], limits: &Limits) -> Outcome {
    suite_outcome(&run_cases(&cases(ids), limits))
}

fn and(a: Outcome, b: Outcome) -> Outcome {
    match (a.ok, b.ok) {
        (true, true) => pass(format!("{}; {}", a.detail, b.detail)),
        (true, false) => b,
        _ => a,
    }
}

/// Σₖ 1/(k+1) Σⱼ C(k,j)(−1)ʲ ∏ᵢ(j − iλ), written out directly.
fn bernoulli_by_summation(n: usize) -> LambdaPoly {
    let mut total = LambdaPoly::zero();
    for k in 0..=n {
        let mut binom = 1i64;
        for j in 0..=k {
            if j > 0 {
                binom = binom * (k - j + 1) as i64 / j as i64;
            }
            let falling = (0..n).fold(LambdaPoly::one(), |acc, i| {
                acc * (LambdaPoly::from_integer(j as i64)
                    - LambdaPoly::lambda().scale(&Rational::from_integer(i as i64)))
            });
            let sign = if j % 2 == 1 { -1 } else { 1 };
            total = total + falling.scale(&Rational::new(sign * binom, k as i64 + 1));
        }
    }
    total
}

fn criterion_1() -> bool {
    criterion(
        "1",
        "defining relations (x)_{n,l} and (x+r)_{n,l}, n<=10, r<=4",
        Some(Duration::from_secs(5)),
        || {
            let reports = run_suite(Some("eq4"), &Limits::default());
            let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
            if ids != ["eq4", "eq4.r"] {
                return fail(format!("filter selected {ids:?}"));
            }
            suite_outcome(&reports)
        },
    )
}

fn criterion_2() -> bool {
    criterion("2", "Bernoulli route agreement, n<=10, r<=4", None, || {
        let q = |n, d| Rational::new(n, d);
        let expected = [
            LambdaPoly::one(),
            LambdaPoly::constant(q(-1, 2)),
            LambdaPoly::from_coeffs(vec![q(1, 6), q(1, 2)]),
        ];
        for (n, e) in expected.iter().enumerate() {
            let brute = bernoulli_by_summation(n);
            let lib = beta_deg_number(n as i64).unwrap();
            if &brute != e || &lib != e {
                return fail(format!(
                    "n={n}: summation {brute}, library {lib}, expected {e}"
                ));
            }
        }
        run(
            &["thm1", "cor2", "thm3", "cor4", "thm6", "eq39"],
            &Limits::default(),
        )
    })
}

fn criterion_3() -> bool {
    criterion(
        "3",
        "Stirling route agreement and set-partition oracle",
        None,
        || {
            let routes = run(&["eq12", "eq14", "eq32", "eq35"], &Limits::default());
            let zero = Rational::from_integer(0);
            for n in 0..=8usize {
                for k in 0..=n {
                    let s = stirling2_deg(n as i64, k as i64).unwrap().eval_at(&zero);
                    if s != Rational::from_integer(common::count_partitions(n, k)) {
                        return fail(format!("S({n},{k}) at l=0 is {s}"));
                    }
                }
            }
            for r in 0..=3usize {
                for n in 0..=(8 - r) {
                    for k in 0..=n {
                        let s = rstirling2_deg(n as i64, k as i64, r as i64)
                            .unwrap()
                            .eval_at(&zero);
                        if s != Rational::from_integer(common::count_r_partitions(n, k, r)) {
                            return fail(format!("r-Stirling n={n} k={k} r={r} at l=0 is {s}"));
                        }
                    }
                }
            }
            and(routes, pass("oracle n<=8"))
        },
    )
}

fn criterion_4() -> bool {
    criterion(
        "4",
        "Fubini chain and integrated Fubini reproducing Bernoulli values",
        None,
        || {
            let gf = run(&["eq10"], &Limits::default().with_n_max(8));
            let chain = run(
                &[
                    "eq16", "eq26", "eq36", "eq17", "eq18", "eq19", "eq27", "eq28", "eq37", "eq38",
                ],
                &Limits::default(),
            );
            and(gf, chain)
        },
    )
}

fn criterion_5() -> bool {
    criterion(
        "5",
        "poly-Bernoulli four-route agreement, p in -3..3, n<=8",
        Some(Duration::from_secs(30)),
        || {
            let limits = Limits::default();
            assert_eq!((limits.pb_n_max, limits.p_min, limits.p_max), (8, -3, 3));
            let routes = run(
                &[
                    "thm7", "thm8", "thm9", "thm10", "eq44", "eq45", "eq47", "eq48",
                ],
                &limits,
            );
            let bridge = check_polylog_log_bridge(10).unwrap();
            let bridge = if bridge.status == Status::Pass && bridge.points == 11 {
                pass("polylog/log bridge to order 10")
            } else {
                fail(bridge.to_json_line(false))
            };
            and(routes, bridge)
        },
    )
}

fn criterion_6() -> bool {
    criterion(
        "6",
        "l -> 0 regression against the classical kernel",
        None,
        || {
            let at0 = |n: i64, x: Rational| {
                beta_deg_poly(n)
                    .unwrap()
                    .eval(&Assignment::new().lambda(0).x(x))
            };
            let b1 = at0(1, Rational::from_integer(0));
            let b2_half = at0(2, Rational::new(1, 2));
            if b1 != MultiPoly::from_rational(Rational::new(-1, 2))
                || b2_half != MultiPoly::from_rational(Rational::new(-1, 12))
            {
                return fail(format!("B1 = {b1}, B2(1/2) = {b2_half}"));
            }
            run(&["lambda0.beta", "lambda0.carlitz"], &Limits::default())
        },
    )
}

fn criterion_7() -> bool {
    criterion(
        "7",
        "negative controls fail at their smallest violating point",
        None,
        || {
            let limits = Limits::default();
            let controls = negative_controls();
            if controls.len() < 2 {
                return fail("fewer than two controls");
            }
            for case in &controls {
                let report = run_identity(case, &limits);
                let Some(ce) = report.counterexample else {
                    return fail(format!("{} passed", case.id));
                };
                let first = case.sweep.points(&limits).into_iter().find(|p| {
                    let routes = case.evaluate(p).unwrap();
                    routes.iter().any(|(_, v)| v != &routes[0].1)
                });
                if first.as_ref() != Some(&ce.point) {
                    return fail(format!(
                        "{} reported {} instead of {first:?}",
                        case.id, ce.point
                    ));
                }
            }
            let good = cases(&["thm1", "eq12", "eq4"]);
            let mut mixed = good.clone();
            mixed.extend(controls.iter().cloned());
            let small = Limits::default().with_n_max(4);
            if !all_pass(&run_cases(&good, &small)) || all_pass(&run_cases(&mixed, &small)) {
                return fail("aggregate status does not separate pass from fail");
            }
            pass(format!("{} controls", controls.len()))
        },
    )
}

fn criterion_8() -> bool {
    criterion(
        "8",
        "deterministic reports and lossless JSON tables",
        None,
        || {
            let limits = Limits::default().with_n_max(5).with_r_max(2);
            let lines = |reports: Vec<IdentityReport>| {
                reports
                    .iter()
                    .map(|r| r.to_json_line(false))
                    .collect::<Vec<_>>()
            };
            if lines(run_suite(None, &limits)) != lines(run_suite(None, &limits)) {
                return fail("two suite runs differ");
            }
            for family in Family::ALL {
                for lambda in [
                    LambdaSpec::Symbolic,
                    LambdaSpec::Value(Rational::new(-3, 7)),
                ] {
                    let mut req = TableRequest::new(family, 5);
                    req.lambda = lambda;
                    if family.uses_r() {
                        req.r = Some(2);
                    }
                    if family.uses_p() {
                        req.p = Some(-1);
                    }
                    let table = req.build().unwrap();
                    let text = table.to_json().unwrap();
                    let back = Table::from_json(&text).unwrap();
                    if back != table || back.to_json().unwrap() != text {
                        return fail(format!("round trip changed {family}"));
                    }
                }
            }
            pass("all families, symbolic and numeric l")
        },
    )
}

fn full_suite() -> bool {
    criterion(
        "suite",
        "full catalog at default limits",
        Some(Duration::from_secs(60)),
        || suite_outcome(&run_suite(None, &Limits::default())),
    )
}

#[test]
fn acceptance() {
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        full_suite(),
    ];
    assert!(
        results.iter().all(|&ok| ok),
        "acceptance criteria failed: {results:?}"
    );
}
