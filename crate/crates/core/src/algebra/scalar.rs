use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact coefficient field for algebra elements.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `num / den`, or `None` if `den` is not invertible.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Used only to pick `+`/`-` when printing.
    fn is_negative(&self) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(&BigInt::from(n), &BigInt::one())
            .expect("integers are always representable")
    }
}

pub type Rational = BigRational;

impl Scalar for BigRational {
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField<const P: u64>(u64);

impl<const P: u64> PrimeField<P> {
    pub fn new(value: i128) -> Self {
        PrimeField(value.rem_euclid(P as i128) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for PrimeField<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for PrimeField<P> {
    fn zero() -> Self {
        PrimeField(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for PrimeField<P> {
    fn one() -> Self {
        PrimeField(1 % P)
    }
}

impl<const P: u64> Add for PrimeField<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        PrimeField(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for PrimeField<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const P: u64> Neg for PrimeField<P> {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeField((P - self.0) % P)
    }
}

impl<const P: u64> Mul for PrimeField<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        PrimeField(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for PrimeField<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero in F_{P}");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Scalar for PrimeField<P> {
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| PrimeField::<P>(x.mod_floor(&p).to_u64().expect("residue fits"));
        let d = reduce(den);
        (!d.is_zero()).then(|| reduce(num) / d)
    }

    fn is_negative(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = PrimeField<7>;

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((a / b) * b, a);
        assert_eq!(F7::new(-1).value(), 6);
    }

    #[test]
    fn ratios() {
        let half = F7::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.value(), 4);
        assert!(F7::from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
        let r = Rational::from_ratio(&BigInt::from(-2), &BigInt::from(4)).unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert!(Scalar::is_negative(&r));
    }
}
