//! Catalog-driven identity checking.
//!
//! Every catalog entry names a set of routes that must produce the same
//! canonical polynomial at each point of an integer parameter sweep. The
//! runner evaluates all routes at every point and records the first
//! disagreement in sweep order.

mod catalog;

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{MultiPoly, Ring};

pub use catalog::{catalog, negative_controls};

/// Sweep limits shared by every case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound for n (and k ≤ n).
    pub n_max: usize,
    /// Upper bound for r.
    pub r_max: usize,
    pub p_min: i64,
    pub p_max: i64,
    /// Upper bound for n in the poly-Bernoulli cases.
    pub pb_n_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            n_max: 10,
            r_max: 4,
            p_min: -3,
            p_max: 3,
            pb_n_max: 8,
        }
    }
}

impl Limits {
    /// Sets `n_max`, lowering `pb_n_max` so it never exceeds it.
    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self.pb_n_max = self.pb_n_max.min(n_max);
        self
    }

    pub fn with_r_max(mut self, r_max: usize) -> Self {
        self.r_max = r_max;
        self
    }
}

/// Range of one sweep parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// 0..=n_max.
    N,
    /// 0..=pb_n_max.
    PolyBernoulliN,
    /// 0..=n, where n is an earlier parameter.
    UpToN,
    /// 0..=r_max.
    R,
    /// 0..=min(r_max, 3).
    SmallR,
    /// p_min..=p_max.
    P,
    /// 0..=len−1.
    Fixed(i64),
}

impl Bound {
    fn range(self, limits: &Limits, earlier: &Point) -> (i64, i64) {
        match self {
            Bound::N => (0, limits.n_max as i64),
            Bound::PolyBernoulliN => (0, limits.pb_n_max as i64),
            Bound::UpToN => (0, earlier.get("n")),
            Bound::R => (0, limits.r_max as i64),
            Bound::SmallR => (0, limits.r_max.min(3) as i64),
            Bound::P => (limits.p_min, limits.p_max),
            Bound::Fixed(len) => (0, len - 1),
        }
    }

    fn describe(self, limits: &Limits) -> String {
        match self {
            Bound::UpToN => "0..n".to_string(),
            other => {
                let (lo, hi) = other.range(limits, &Point::default());
                format!("{lo}..{hi}")
            }
        }
    }
}

/// Named integer parameters, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    params: Vec<(&'static str, Bound)>,
}

impl Sweep {
    pub fn new(params: &[(&'static str, Bound)]) -> Self {
        Sweep {
            params: params.to_vec(),
        }
    }

    pub fn params(&self) -> &[(&'static str, Bound)] {
        &self.params
    }

    /// All points in lexicographic order of the parameter tuple.
    pub fn points(&self, limits: &Limits) -> Vec<Point> {
        let mut out = Vec::new();
        self.extend(limits, Point::default(), &mut out);
        out
    }

    fn extend(&self, limits: &Limits, prefix: Point, out: &mut Vec<Point>) {
        let depth = prefix.entries.len();
        let Some(&(name, bound)) = self.params.get(depth) else {
            out.push(prefix);
            return;
        };
        let (lo, hi) = bound.range(limits, &prefix);
        for v in lo..=hi {
            let mut next = prefix.clone();
            next.entries.push((name, v));
            self.extend(limits, next, out);
        }
    }

    pub fn describe(&self, limits: &Limits) -> String {
        self.params
            .iter()
            .map(|(name, bound)| format!("{name}={}", bound.describe(limits)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// One assignment of the sweep parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point {
    entries: Vec<(&'static str, i64)>,
}

impl Point {
    pub fn new(entries: &[(&'static str, i64)]) -> Self {
        Point {
            entries: entries.to_vec(),
        }
    }

    pub fn entries(&self) -> &[(&'static str, i64)] {
        &self.entries
    }

    /// Value of a parameter. Panics if the sweep does not define it.
    pub fn get(&self, name: &str) -> i64 {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| panic!("sweep has no parameter `{name}`"))
    }

    /// Value of a nonnegative parameter.
    pub fn index(&self, name: &str) -> usize {
        usize::try_from(self.get(name)).expect("nonnegative sweep parameter")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (name, value) in &self.entries {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

/// A named evaluation of one side of an identity.
pub type Route = (&'static str, MultiPoly);

pub type Evaluator = Arc<dyn Fn(&Point) -> Result<Vec<Route>> + Send + Sync>;

/// A catalog entry: routes that must agree at every swept point.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: String,
    /// Equation and theorem labels this case exercises.
    pub anchors: Vec<&'static str>,
    pub summary: String,
    pub sweep: Sweep,
    /// Whether λ is sampled at rational points instead of kept symbolic.
    pub sampled: bool,
    eval: Evaluator,
}

impl IdentityCase {
    pub fn new(
        id: impl Into<String>,
        anchors: &[&'static str],
        summary: impl Into<String>,
        sweep: Sweep,
        eval: impl Fn(&Point) -> Result<Vec<Route>> + Send + Sync + 'static,
    ) -> Self {
        IdentityCase {
            id: id.into(),
            anchors: anchors.to_vec(),
            summary: summary.into(),
            sweep,
            sampled: false,
            eval: Arc::new(eval),
        }
    }

    pub fn sampled(mut self) -> Self {
        self.sampled = true;
        self
    }

    /// Evaluates every route at one point.
    pub fn evaluate(&self, point: &Point) -> Result<Vec<Route>> {
        (self.eval)(point)
    }

    /// The same case with one route post-processed; used to build
    /// negative controls.
    pub fn corrupted(
        &self,
        id: impl Into<String>,
        route: &'static str,
        f: impl Fn(&Point, MultiPoly) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        let inner = Arc::clone(&self.eval);
        IdentityCase {
            id: id.into(),
            anchors: Vec::new(),
            summary: format!("corrupted copy of {}", self.id),
            sweep: self.sweep.clone(),
            sampled: self.sampled,
            eval: Arc::new(move |point| {
                let mut routes = inner(point)?;
                for (name, value) in routes.iter_mut() {
                    if *name == route {
                        *value = f(point, std::mem::replace(value, MultiPoly::zero()));
                    }
                }
                Ok(routes)
            }),
        }
    }
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("anchors", &self.anchors)
            .field("sweep", &self.sweep)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Route values (or the evaluation error) at the first failing point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub point: Point,
    #[serde(serialize_with = "serialize_routes")]
    pub routes: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn serialize_routes<S: Serializer>(
    routes: &[(String, String)],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(routes.len()))?;
    for (name, value) in routes {
        map.serialize_entry(name, value)?;
    }
    map.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub sweep: String,
    pub points: usize,
    pub failures: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl IdentityReport {
    /// One JSON object on a single line. Wall time is included only when
    /// requested so that default output is reproducible.
    pub fn to_json_line(&self, with_time: bool) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            #[serde(flatten)]
            report: &'a IdentityReport,
            #[serde(skip_serializing_if = "Option::is_none")]
            wall_ms: Option<f64>,
        }
        let wall_ms = with_time.then(|| (self.wall_time.as_secs_f64() * 1e6).round() / 1e3);
        serde_json::to_string(&Line {
            report: self,
            wall_ms,
        })
        .expect("report serializes")
    }
}

/// Plain-text table with one row per report.
pub fn summary_table(reports: &[IdentityReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!(
        "{:<width$}  {:>6}  {:<6}  {:>9}\n",
        "id", "points", "status", "time (ms)"
    );
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        out.push_str(&format!(
            "{:<width$}  {:>6}  {:<6}  {:>9.1}\n",
            r.id,
            r.points,
            status,
            r.wall_time.as_secs_f64() * 1e3
        ));
    }
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    out.push_str(&format!(
        "{} identities, {} passed, {} failed\n",
        reports.len(),
        reports.len() - failed,
        failed
    ));
    out
}

enum Outcome {
    Agree,
    Disagree(Vec<Route>),
    Error(Error),
}

fn check_point(case: &IdentityCase, point: &Point) -> Outcome {
    match case.evaluate(point) {
        Err(e) => Outcome::Error(e),
        Ok(routes) => {
            let first = &routes[0].1;
            if routes[1..].iter().all(|(_, v)| v == first) {
                Outcome::Agree
            } else {
                Outcome::Disagree(routes)
            }
        }
    }
}

/// Checks one case over its whole sweep.
pub fn run_identity(case: &IdentityCase, limits: &Limits) -> IdentityReport {
    let start = Instant::now();
    let points = case.sweep.points(limits);
    let outcomes: Vec<Outcome> = points.par_iter().map(|p| check_point(case, p)).collect();
    let failures = outcomes
        .iter()
        .filter(|o| !matches!(o, Outcome::Agree))
        .count();
    let counterexample = points
        .iter()
        .zip(outcomes)
        .find_map(|(point, outcome)| match outcome {
            Outcome::Agree => None,
            Outcome::Disagree(routes) => Some(Counterexample {
                point: point.clone(),
                routes: routes
                    .into_iter()
                    .map(|(n, v)| (n.to_string(), v.to_string()))
                    .collect(),
                error: None,
            }),
            Outcome::Error(e) => Some(Counterexample {
                point: point.clone(),
                routes: Vec::new(),
                error: Some(e.to_string()),
            }),
        });
    IdentityReport {
        id: case.id.clone(),
        sweep: case.sweep.describe(limits),
        points: points.len(),
        failures,
        status: if failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexample,
        wall_time: start.elapsed(),
    }
}

/// Catalog case with exactly this id.
pub fn find_case(id: &str) -> Option<IdentityCase> {
    catalog().into_iter().find(|c| c.id == id)
}

pub fn run_identity_by_id(id: &str, limits: &Limits) -> Result<IdentityReport> {
    let case = find_case(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(run_identity(&case, limits))
}

/// Whether `id` is selected by the prefix `filter`.
///
/// A prefix ending in a digit does not match ids that continue with
/// another digit, so "thm1" selects "thm1" but not "thm10", and "eq4"
/// selects "eq4" and "eq4.r" but not "eq42".
pub fn matches_filter(id: &str, filter: &str) -> bool {
    let Some(rest) = id.strip_prefix(filter) else {
        return false;
    };
    let ends_in_digit = filter.chars().last().is_some_and(|c| c.is_ascii_digit());
    !(ends_in_digit && rest.chars().next().is_some_and(|c| c.is_ascii_digit()))
}

/// Runs the given cases concurrently; reports are sorted by id.
pub fn run_cases(cases: &[IdentityCase], limits: &Limits) -> Vec<IdentityReport> {
    let mut reports: Vec<IdentityReport> =
        cases.par_iter().map(|c| run_identity(c, limits)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

/// Runs every catalog case selected by `filter` (all cases if `None`).
pub fn run_suite(filter: Option<&str>, limits: &Limits) -> Vec<IdentityReport> {
    let cases: Vec<IdentityCase> = catalog()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| matches_filter(&c.id, f)))
        .collect();
    run_cases(&cases, limits)
}

/// Whether every report passed.
pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.status == Status::Pass)
}
