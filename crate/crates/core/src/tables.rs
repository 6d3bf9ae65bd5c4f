//! Tables of the supported families and single-value evaluation.
//!
//! Entries are kept as [`MultiPoly`] values. A table with a numeric λ has
//! λ substituted in every entry; the JSON form picks the narrowest
//! encoding for the family (a bare rational, a coefficient array in λ, or
//! the nested trivariate array).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bernoulli::{beta_deg_number, beta_deg_poly, carlitz_beta_gf, fubini_deg};
use crate::error::{Error, Result};
use crate::poly_bernoulli::poly_bernoulli;
use crate::rings::{Assignment, LambdaPoly, MultiPoly, Rational, Ring, Var};
use crate::stirling::{rstirling2_deg, stirling2_deg, stirling_poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Stirling,
    RStirling,
    StirlingPoly,
    BetaNumber,
    BetaPoly,
    Carlitz,
    Fubini,
    PolyBernoulli,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Stirling,
        Family::RStirling,
        Family::StirlingPoly,
        Family::BetaNumber,
        Family::BetaPoly,
        Family::Carlitz,
        Family::Fubini,
        Family::PolyBernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling => "stirling",
            Family::RStirling => "rstirling",
            Family::StirlingPoly => "stirling_poly",
            Family::BetaNumber => "beta_number",
            Family::BetaPoly => "beta_poly",
            Family::Carlitz => "carlitz",
            Family::Fubini => "fubini",
            Family::PolyBernoulli => "poly_bernoulli",
        }
    }

    /// Entries are indexed by (n, k) rather than n.
    pub fn is_triangular(self) -> bool {
        matches!(
            self,
            Family::Stirling | Family::RStirling | Family::StirlingPoly
        )
    }

    pub fn uses_r(self) -> bool {
        self == Family::RStirling
    }

    pub fn uses_p(self) -> bool {
        self == Family::PolyBernoulli
    }

    /// Whether the family's values may contain the symbol `var`.
    pub fn uses_var(self, var: Var) -> bool {
        match var {
            Var::Lambda => true,
            Var::X => !matches!(
                self,
                Family::Stirling | Family::RStirling | Family::BetaNumber
            ),
            Var::Y => self == Family::Fubini,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: format!(
                    "unknown family; expected one of {}",
                    Family::ALL.map(Family::name).join(", ")
                ),
            })
    }
}

/// λ kept symbolic or fixed at a rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaSpec {
    Symbolic,
    Value(Rational),
}

impl fmt::Display for LambdaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaSpec::Symbolic => f.write_str("sym"),
            LambdaSpec::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for LambdaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(LambdaSpec::Symbolic),
            other => Ok(LambdaSpec::Value(other.parse()?)),
        }
    }
}

/// How table entries are encoded in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Rational,
    Lambda,
    Multi,
}

/// Integer indices for a single value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Indices {
    pub n: i64,
    pub k: Option<i64>,
    pub r: Option<i64>,
    pub p: Option<i64>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidRequest(msg)
}

/// Checks that `family` receives exactly the integer parameters it needs.
pub fn check_params(
    family: Family,
    k: Option<i64>,
    r: Option<i64>,
    p: Option<i64>,
    need_k: bool,
) -> Result<()> {
    if family.is_triangular() {
        if need_k && k.is_none() {
            return Err(invalid(format!("family {family} requires k")));
        }
    } else if k.is_some() {
        return Err(invalid(format!("family {family} does not take k")));
    }
    match (family.uses_r(), r) {
        (true, None) => return Err(invalid(format!("family {family} requires r"))),
        (false, Some(_)) => return Err(invalid(format!("family {family} does not take r"))),
        _ => {}
    }
    match (family.uses_p(), p) {
        (true, None) => return Err(invalid(format!("family {family} requires p"))),
        (false, Some(_)) => return Err(invalid(format!("family {family} does not take p"))),
        _ => {}
    }
    for (name, v) in [("k", k), ("r", r)] {
        if let Some(v) = v {
            if v < 0 {
                return Err(Error::NegativeIndex { name, value: v });
            }
        }
    }
    Ok(())
}

/// One value of a family with λ, x, y symbolic.
pub fn family_value(family: Family, idx: Indices) -> Result<MultiPoly> {
    check_params(family, idx.k, idx.r, idx.p, true)?;
    let n = idx.n;
    let k = idx.k.unwrap_or(0);
    Ok(match family {
        Family::Stirling => stirling2_deg(n, k)?.to_multi(),
        Family::RStirling => rstirling2_deg(n, k, idx.r.unwrap_or(0))?.to_multi(),
        Family::StirlingPoly => stirling_poly(n, k)?,
        Family::BetaNumber => beta_deg_number(n)?.to_multi(),
        Family::BetaPoly => beta_deg_poly(n)?,
        Family::Carlitz => {
            let all = carlitz_beta_gf(n)?;
            all.into_iter().last().expect("n_max + 1 entries")
        }
        Family::Fubini => fubini_deg(n)?,
        Family::PolyBernoulli => poly_bernoulli(idx.p.unwrap_or(0), n)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    pub family: Family,
    pub n_max: i64,
    pub k_max: Option<i64>,
    pub r: Option<i64>,
    pub p: Option<i64>,
    pub lambda: LambdaSpec,
}

impl TableRequest {
    pub fn new(family: Family, n_max: i64) -> Self {
        TableRequest {
            family,
            n_max,
            k_max: None,
            r: None,
            p: None,
            lambda: LambdaSpec::Symbolic,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 0 {
            return Err(Error::NegativeIndex {
                name: "n_max",
                value: self.n_max,
            });
        }
        if !self.family.is_triangular() && self.k_max.is_some() {
            return Err(invalid(format!(
                "family {} does not take k-max",
                self.family
            )));
        }
        if let Some(k) = self.k_max {
            if k < 0 {
                return Err(Error::NegativeIndex {
                    name: "k_max",
                    value: k,
                });
            }
        }
        check_params(self.family, None, self.r, self.p, false)
    }

    pub fn ring(&self) -> RingKind {
        match (self.family.uses_var(Var::X), &self.lambda) {
            (true, _) => RingKind::Multi,
            (false, LambdaSpec::Symbolic) => RingKind::Lambda,
            (false, LambdaSpec::Value(_)) => RingKind::Rational,
        }
    }

    /// Computes every entry of the table.
    pub fn build(&self) -> Result<Table> {
        self.validate()?;
        let at = match &self.lambda {
            LambdaSpec::Symbolic => Assignment::new(),
            LambdaSpec::Value(v) => Assignment::new().lambda(v.clone()),
        };
        let fix = |v: MultiPoly| if at.is_empty() { v } else { v.eval(&at) };
        let rows = if self.family.is_triangular() {
            let mut rows = Vec::new();
            for n in 0..=self.n_max {
                let k_top = self.k_max.map_or(n, |k| k.min(n));
                let row = (0..=k_top)
                    .map(|k| {
                        let idx = Indices {
                            n,
                            k: Some(k),
                            r: self.r,
                            p: self.p,
                        };
                        family_value(self.family, idx).map(&fix)
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            Rows::Triangle(rows)
        } else if self.family == Family::Carlitz {
            Rows::Sequence(carlitz_beta_gf(self.n_max)?.into_iter().map(&fix).collect())
        } else {
            let seq = (0..=self.n_max)
                .map(|n| {
                    family_value(
                        self.family,
                        Indices {
                            n,
                            k: None,
                            r: self.r,
                            p: self.p,
                        },
                    )
                    .map(&fix)
                })
                .collect::<Result<Vec<_>>>()?;
            Rows::Sequence(seq)
        };
        Ok(Table {
            request: self.clone(),
            rows,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rows {
    Sequence(Vec<MultiPoly>),
    Triangle(Vec<Vec<MultiPoly>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub request: TableRequest,
    pub rows: Rows,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRepr {
    family: String,
    lambda: String,
    ring: RingKind,
    n_max: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k_max: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<i64>,
    rows: Vec<Value>,
}

fn encode(v: &MultiPoly, ring: RingKind) -> Result<Value> {
    let value = match ring {
        RingKind::Rational => serde_json::to_value(
            v.as_rational()
                .ok_or_else(|| invalid(format!("entry {v} is not a rational")))?,
        ),
        RingKind::Lambda => serde_json::to_value(
            v.to_lambda()
                .ok_or_else(|| invalid(format!("entry {v} is not a polynomial in l")))?,
        ),
        RingKind::Multi => serde_json::to_value(v),
    };
    Ok(value.expect("entries serialize"))
}

fn decode(v: Value, ring: RingKind) -> Result<MultiPoly> {
    let parse = |e: serde_json::Error| Error::Parse {
        input: "table entry".into(),
        reason: e.to_string(),
    };
    Ok(match ring {
        RingKind::Rational => {
            MultiPoly::from_rational(serde_json::from_value::<Rational>(v).map_err(parse)?)
        }
        RingKind::Lambda => serde_json::from_value::<LambdaPoly>(v)
            .map_err(parse)?
            .to_multi(),
        RingKind::Multi => serde_json::from_value::<MultiPoly>(v).map_err(parse)?,
    })
}

impl Table {
    pub fn ring(&self) -> RingKind {
        self.request.ring()
    }

    /// Compact JSON with a fixed key order.
    pub fn to_json(&self) -> Result<String> {
        let ring = self.ring();
        let rows = match &self.rows {
            Rows::Sequence(seq) => seq
                .iter()
                .map(|v| encode(v, ring))
                .collect::<Result<Vec<_>>>()?,
            Rows::Triangle(tri) => tri
                .iter()
                .map(|row| {
                    Ok(Value::Array(
                        row.iter()
                            .map(|v| encode(v, ring))
                            .collect::<Result<Vec<_>>>()?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let req = &self.request;
        let repr = TableRepr {
            family: req.family.name().to_string(),
            lambda: req.lambda.to_string(),
            ring,
            n_max: req.n_max,
            k_max: req.k_max,
            r: req.r,
            p: req.p,
            rows,
        };
        Ok(serde_json::to_string(&repr).expect("table serializes"))
    }

    pub fn from_json(text: &str) -> Result<Table> {
        let parse = |e: serde_json::Error| Error::Parse {
            input: "table".into(),
            reason: e.to_string(),
        };
        let repr: TableRepr = serde_json::from_str(text).map_err(parse)?;
        let request = TableRequest {
            family: repr.family.parse()?,
            n_max: repr.n_max,
            k_max: repr.k_max,
            r: repr.r,
            p: repr.p,
            lambda: repr.lambda.parse()?,
        };
        request.validate()?;
        if request.ring() != repr.ring {
            return Err(invalid(format!(
                "ring {:?} does not match family and lambda",
                repr.ring
            )));
        }
        let ring = repr.ring;
        let rows = if request.family.is_triangular() {
            let tri = repr
                .rows
                .into_iter()
                .map(|row| match row {
                    Value::Array(items) => items.into_iter().map(|v| decode(v, ring)).collect(),
                    _ => Err(invalid("triangular table rows must be arrays".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            Rows::Triangle(tri)
        } else {
            Rows::Sequence(
                repr.rows
                    .into_iter()
                    .map(|v| decode(v, ring))
                    .collect::<Result<Vec<_>>>()?,
            )
        };
        Ok(Table { request, rows })
    }

    /// CSV with a header row; values use the text rendering.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| invalid(format!("csv: {e}"));
        match &self.rows {
            Rows::Sequence(seq) => {
                w.write_record(["n", "value"]).map_err(io)?;
                for (n, v) in seq.iter().enumerate() {
                    w.write_record([n.to_string(), v.to_string()]).map_err(io)?;
                }
            }
            Rows::Triangle(tri) => {
                w.write_record(["n", "k", "value"]).map_err(io)?;
                for (n, row) in tri.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        w.write_record([n.to_string(), k.to_string(), v.to_string()])
                            .map_err(io)?;
                    }
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| invalid(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
