use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::LinalgError;

/// A coefficient modulus `m >= 2` together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Modulus {
    pub fn new(value: u64) -> Result<Self, LinalgError> {
        if value < 2 {
            return Err(LinalgError::InvalidModulus(value.to_string()));
        }
        Ok(Modulus {
            value,
            factors: factorize(value),
        })
    }

    /// `prime^exponent`; fails if `prime` is not prime or the power overflows.
    pub fn prime_power(prime: u64, exponent: u32) -> Result<Self, LinalgError> {
        let bad = || LinalgError::InvalidModulus(format!("{prime}^{exponent}"));
        if exponent == 0 || !is_prime(prime) {
            return Err(bad());
        }
        let value = prime.checked_pow(exponent).ok_or_else(bad)?;
        Self::new(value)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn as_bigint(&self) -> BigInt {
        BigInt::from(self.value)
    }

    /// Prime factorization with primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// `m^k`, or `None` on overflow.
    pub fn checked_power(&self, k: usize) -> Option<u64> {
        let k = u32::try_from(k).ok()?;
        self.value.checked_pow(k)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Accepts `m` or `l^v`.
impl FromStr for Modulus {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LinalgError::InvalidModulus(s.to_string());
        match s.trim().split_once('^') {
            Some((base, exp)) => {
                let base: u64 = base.trim().parse().map_err(|_| bad())?;
                let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
                let value = base.checked_pow(exp).ok_or_else(bad)?;
                Modulus::new(value).map_err(|_| bad())
            }
            None => Modulus::new(s.trim().parse().map_err(|_| bad())?),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Trial-division factorization; moduli are small enough that this is never the bottleneck.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
