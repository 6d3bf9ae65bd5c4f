use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LambdaRing, Poly, Rational, Ring};

/// Polynomial in λ over the rationals.
pub type LambdaPoly = Poly<Rational>;
/// Polynomial in x with λ-polynomial coefficients.
pub type XPoly = Poly<LambdaPoly>;
/// Polynomial in y with [`XPoly`] coefficients; the full (λ, x, y) tower.
pub type MultiPoly = Poly<XPoly>;

/// Exponent triple `[λ, x, y]` of a monomial.
pub type Exponents = [usize; 3];

/// The symbols of the tower, innermost first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Lambda,
    X,
    Y,
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::Lambda => 0,
            Var::X => 1,
            Var::Y => 2,
        }
    }

    /// Spelling used in rendered polynomials.
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Lambda => "l",
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Partial assignment of rational values to the tower symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub lambda: Option<Rational>,
    pub x: Option<Rational>,
    pub y: Option<Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lambda(mut self, v: impl Into<Rational>) -> Self {
        self.lambda = Some(v.into());
        self
    }

    pub fn x(mut self, v: impl Into<Rational>) -> Self {
        self.x = Some(v.into());
        self
    }

    pub fn y(mut self, v: impl Into<Rational>) -> Self {
        self.y = Some(v.into());
        self
    }

    pub fn get(&self, var: Var) -> Option<&Rational> {
        match var {
            Var::Lambda => self.lambda.as_ref(),
            Var::X => self.x.as_ref(),
            Var::Y => self.y.as_ref(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_none() && self.x.is_none() && self.y.is_none()
    }
}

impl LambdaRing for LambdaPoly {
    fn lambda() -> Self {
        Poly::var()
    }
}

impl LambdaPoly {
    /// λ ↦ −λ.
    pub fn negate_lambda(&self) -> Self {
        Poly::from_coeffs(
            self.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_lambda(self.clone())
    }
}

impl MultiPoly {
    pub fn x() -> Self {
        Poly::constant(XPoly::var())
    }

    pub fn y() -> Self {
        Poly::var()
    }

    pub fn symbol(var: Var) -> Self {
        match var {
            Var::Lambda => Self::lambda(),
            Var::X => Self::x(),
            Var::Y => Self::y(),
        }
    }

    pub fn from_lambda(p: LambdaPoly) -> Self {
        Poly::constant(Poly::constant(p))
    }

    /// `c·λ^l·x^i·y^j`.
    pub fn term(exps: Exponents, c: Rational) -> Self {
        let [l, i, j] = exps;
        Poly::monomial(j, Poly::monomial(i, Poly::monomial(l, c)))
    }

    /// The λ-polynomial, when neither x nor y occurs.
    pub fn to_lambda(&self) -> Option<LambdaPoly> {
        match self.coeffs() {
            [] => Some(LambdaPoly::zero()),
            [xp] => match xp.coeffs() {
                [] => Some(LambdaPoly::zero()),
                [lp] => Some(lp.clone()),
                _ => None,
            },
            _ => None,
        }
    }

    /// Nonzero terms in ascending (y, x, λ) order.
    pub fn terms(&self) -> Vec<(Exponents, Rational)> {
        let mut out = Vec::new();
        for (j, xp) in self.coeffs().iter().enumerate() {
            for (i, lp) in xp.coeffs().iter().enumerate() {
                for (l, c) in lp.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        out.push(([l, i, j], c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn uses(&self, var: Var) -> bool {
        self.terms().iter().any(|(e, _)| e[var.slot()] > 0)
    }

    pub fn degree_in(&self, var: Var) -> Option<usize> {
        self.terms().iter().map(|(e, _)| e[var.slot()]).max()
    }

    /// Coefficient of `var^deg`, as a polynomial in the other symbols.
    pub fn coeff_of(&self, var: Var, deg: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (mut e, c) in self.terms() {
            if e[var.slot()] == deg {
                e[var.slot()] = 0;
                acc = acc.plus(&MultiPoly::term(e, c));
            }
        }
        acc
    }

    /// Replaces `var` by an arbitrary tower polynomial.
    pub fn substitute(&self, var: Var, value: &MultiPoly) -> MultiPoly {
        self.substitute_many(&[(var, value.clone())])
    }

    /// Simultaneous substitution; each listed symbol is replaced in one pass,
    /// so values may mention the other substituted symbols.
    pub fn substitute_many(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut powers: Vec<Vec<MultiPoly>> = subs.iter().map(|_| vec![MultiPoly::one()]).collect();
        let mut acc = MultiPoly::zero();
        for (mut e, c) in self.terms() {
            let mut term = MultiPoly::one();
            for (idx, (var, value)) in subs.iter().enumerate() {
                let k = std::mem::take(&mut e[var.slot()]);
                let table = &mut powers[idx];
                while table.len() <= k {
                    let next = table.last().unwrap().times(value);
                    table.push(next);
                }
                term = term.times(&table[k]);
            }
            acc = acc.plus(&MultiPoly::term(e, c).times(&term));
        }
        acc
    }

    /// Substitutes the assigned values; unassigned symbols remain.
    pub fn eval(&self, at: &Assignment) -> MultiPoly {
        let mut out = self.clone();
        for var in [Var::Lambda, Var::X, Var::Y] {
            if let Some(v) = at.get(var) {
                out = out.substitute(var, &MultiPoly::from_rational(v.clone()));
            }
        }
        out
    }

    /// x ↦ x + c.
    pub fn shift_x(&self, c: &Rational) -> MultiPoly {
        let shifted = MultiPoly::x().plus(&MultiPoly::from_rational(c.clone()));
        self.substitute(Var::X, &shifted)
    }

    /// λ ↦ −λ.
    pub fn negate_lambda(&self) -> MultiPoly {
        self.map(|xp| xp.map(LambdaPoly::negate_lambda))
    }

    /// Formal antiderivative in y, zero at y = 0.
    pub fn integrate_y(&self) -> MultiPoly {
        self.antiderivative()
    }
}

fn render(terms: Vec<(Exponents, Rational)>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (idx, (exps, c)) in terms.into_iter().enumerate() {
        let mono: Vec<String> = [Var::Lambda, Var::X, Var::Y]
            .into_iter()
            .zip(exps)
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| {
                if e == 1 {
                    v.symbol().to_owned()
                } else {
                    format!("{}^{}", v.symbol(), e)
                }
            })
            .collect();
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c };
        let body = if mono.is_empty() {
            magnitude.to_string()
        } else if magnitude == Rational::one() {
            mono.join("*")
        } else {
            format!("{}*{}", magnitude, mono.join("*"))
        };
        match (idx, negative) {
            (0, false) => write!(f, "{body}")?,
            (0, true) => write!(f, "-{body}")?,
            (_, false) => write!(f, " + {body}")?,
            (_, true) => write!(f, " - {body}")?,
        }
    }
    Ok(())
}

/// Ascending powers with explicit separators, e.g. `1/6 + 1/2*l`.
impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(self.to_multi().terms(), f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(self.terms(), f)
    }
}
