use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// Factorial table `0!..=n!` built once for a computation.
#[derive(Debug, Clone)]
pub struct Factorials {
    table: Vec<BigInt>,
}

impl Factorials {
    pub fn up_to(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        table.push(BigInt::one());
        for i in 1..=n {
            let next = &table[i - 1] * BigInt::from(i);
            table.push(next);
        }
        Factorials { table }
    }

    /// `n!`; panics if `n` exceeds the table.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.table[n]
    }

    pub fn as_rational(&self, n: usize) -> Rational {
        Rational::from_integer(self.table[n].clone())
    }

    /// `1/n!`.
    pub fn inverse(&self, n: usize) -> Rational {
        Rational::new(1, self.table[n].clone())
    }

    /// Binomial coefficient; zero when `k > n`.
    pub fn binomial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::from(0);
        }
        &self.table[n] / (&self.table[k] * &self.table[n - k])
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient via the multiplicative formula; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_free_functions() {
        let f = Factorials::up_to(20);
        for n in 0..=20 {
            assert_eq!(f.get(n), &factorial(n));
            for k in 0..=n + 1 {
                assert_eq!(f.binomial(n, k), binomial(n, k), "C({n},{k})");
            }
        }
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(factorial(0), BigInt::one());
    }
}
