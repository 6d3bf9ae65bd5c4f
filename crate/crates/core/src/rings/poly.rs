use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LambdaRing, Rational, Ring};

/// Dense univariate polynomial with ascending coefficients.
///
/// Canonical form has no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·v^deg`.
    pub fn monomial(deg: usize, c: R) -> Self {
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(1, R::one())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation at a ring element.
    pub fn eval_at(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(at).plus(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// `p(v + c)`.
    pub fn shift(&self, c: &R) -> Self {
        let step = Self::from_coeffs(vec![c.clone(), R::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, coeff| {
            acc.times(&step).plus(&Self::constant(coeff.clone()))
        })
    }

    /// Formal antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, i as i64 + 1)));
        }
        Self::from_coeffs(coeffs)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    fn negated(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    fn from_rational(c: Rational) -> Self {
        Self::constant(R::from_rational(c))
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(<Rational as Ring>::zero()),
            1 => self.coeffs[0].as_rational(),
            _ => None,
        }
    }
}

impl<R: LambdaRing> LambdaRing for Poly<R> {
    fn lambda() -> Self {
        Self::constant(R::lambda())
    }
}

impl<R: Ring> From<Rational> for Poly<R> {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl<R: Ring + Serialize> Serialize for Poly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for Poly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<R>::deserialize(deserializer).map(Self::from_coeffs)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $ring:ident) => {
        impl<R: Ring> $trait<&Poly<R>> for &Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: &Poly<R>) -> Poly<R> {
                self.$ring(rhs)
            }
        }
        impl<R: Ring> $trait for Poly<R> {
            type Output = Poly<R>;
            fn $method(self, rhs: Poly<R>) -> Poly<R> {
                self.$ring(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, plus);
poly_binop!(Sub, sub, minus);
poly_binop!(Mul, mul, times);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.negated()
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        self.negated()
    }
}
