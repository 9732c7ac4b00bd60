//! Vanishing and divisibility consequences of the mod-`l^v` computation, plus the
//! order/exponent check for the universal coefficient sequence
//! `0 -> K_n (x) Z/m -> K_n(-; Z/m) -> m-torsion(K_{n-1}) -> 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{leavitt_matrix, mod_l_ktheory, DegreeWindow, KGroupTable, KTheoryError};
use crate::linalg::{FinAbGroup, Modulus};
use crate::quiver::OrderedQuiver;

/// Trial division bound used when listing the primes of the determinant.
const DET_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// `K_n(L_Q)` is uniquely `l^v`-divisible for every `n >= 0`.
    UniquelyDivisible,
    /// For every `n >= 0` of a flagged parity, one of `K_n(L_Q)`, `K_{n-1}(L_Q)` is nonzero.
    Nonvanishing { even: bool, odd: bool },
}

impl Conclusion {
    pub fn describe(&self, modulus_label: &str) -> String {
        match self {
            Conclusion::UniquelyDivisible => {
                format!("K_n(L_Q) uniquely {modulus_label}-divisible for n >= 0")
            }
            Conclusion::Nonvanishing { even, odd } => {
                let parities: Vec<&str> = [(*even, "even"), (*odd, "odd")]
                    .into_iter()
                    .filter(|(f, _)| *f)
                    .map(|(_, p)| p)
                    .collect();
                format!(
                    "for every {} n >= 0, at least one of K_n(L_Q), K_(n-1)(L_Q) is nonzero",
                    parities.join(" and every ")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeReport {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: Modulus,
    pub table: KGroupTable,
    pub conclusion: Conclusion,
}

impl PrimeReport {
    pub fn label(&self) -> String {
        format!("{}^{}", self.prime, self.exponent)
    }

    pub fn even_group(&self) -> &FinAbGroup {
        self.table.group(0).expect("window covers degree 0")
    }

    pub fn odd_group(&self) -> &FinAbGroup {
        self.table.group(1).expect("window covers degree 1")
    }
}

/// Determinant of the square Leavitt matrix of a sink-free quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantInfo {
    pub value: BigInt,
    /// Primes below the trial-division bound dividing `value` (empty for `value = 0`).
    pub small_primes: Vec<u64>,
    /// What is left of `|value|` after removing those primes; `1` when fully factored.
    pub cofactor: BigInt,
}

impl DeterminantInfo {
    fn new(value: BigInt) -> Self {
        if value.is_zero() {
            return DeterminantInfo {
                value,
                small_primes: Vec::new(),
                cofactor: BigInt::zero(),
            };
        }
        let mut rest = value.abs();
        let mut primes = Vec::new();
        let mut p = 2u64;
        while p < DET_TRIAL_BOUND && BigInt::from(p) * BigInt::from(p) <= rest {
            let bp = BigInt::from(p);
            if rest.is_multiple_of(&bp) {
                primes.push(p);
                while rest.is_multiple_of(&bp) {
                    rest /= &bp;
                }
            }
            p += if p == 2 { 1 } else { 2 };
        }
        // a leftover below bound^2 is prime
        if !rest.is_one() && rest < BigInt::from(DET_TRIAL_BOUND) * BigInt::from(DET_TRIAL_BOUND) {
            if let Some(r) = rest.to_u64() {
                primes.push(r);
                rest = BigInt::one();
            }
        }
        DeterminantInfo {
            value,
            small_primes: primes,
            cofactor: rest,
        }
    }

    pub fn divisible_by(&self, prime: u64) -> bool {
        self.value.is_multiple_of(&BigInt::from(prime))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub determinant: Option<DeterminantInfo>,
    pub primes: Vec<PrimeReport>,
}

impl DivisibilityReport {
    /// For sink-free quivers: unique divisibility holds exactly when `l` does not divide
    /// the determinant. `None` when the quiver has sinks.
    pub fn determinant_consistent(&self) -> Option<bool> {
        let det = self.determinant.as_ref()?;
        Some(
            self.primes.iter().all(|r| {
                (r.conclusion == Conclusion::UniquelyDivisible) == !det.divisible_by(r.prime)
            }),
        )
    }
}

impl fmt::Display for DivisibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.primes {
            let label = r.label();
            writeln!(
                f,
                "{label}: K_even(L_Q; Z/{m}) = {}, K_odd(L_Q; Z/{m}) = {}",
                r.even_group(),
                r.odd_group(),
                m = r.modulus
            )?;
            writeln!(f, "{label}: {}", r.conclusion.describe(&label))?;
        }
        Ok(())
    }
}

/// Summarizes `K_*(L_Q; Z/l^v)` for each requested prime power and draws the vanishing /
/// divisibility conclusion. Degrees `0..=2` suffice since the table is 2-periodic there.
pub fn divisibility_report(
    q: &OrderedQuiver,
    primes: &[(u64, u32)],
) -> Result<DivisibilityReport, KTheoryError> {
    let m = leavitt_matrix(q)?;
    let determinant = m.is_square().then(|| DeterminantInfo::new(m.determinant()));
    let window = DegreeWindow::new(0, 2)?;
    let mut reports = Vec::new();
    for &(prime, exponent) in primes {
        let modulus = Modulus::prime_power(prime, exponent)?;
        let table = mod_l_ktheory(q, &modulus, window)?;
        let even = !table.group(0).is_some_and(FinAbGroup::is_trivial)
            || !table.group(2).is_some_and(FinAbGroup::is_trivial);
        let odd = !table.group(1).is_some_and(FinAbGroup::is_trivial);
        let conclusion = if even || odd {
            Conclusion::Nonvanishing { even, odd }
        } else {
            Conclusion::UniquelyDivisible
        };
        reports.push(PrimeReport {
            prime,
            exponent,
            modulus,
            table,
            conclusion,
        });
    }
    Ok(DivisibilityReport {
        determinant,
        primes: reports,
    })
}

/// Necessary conditions on the middle term of `0 -> A -> middle -> B -> 0` with
/// `A = K_n (x) Z/m` and `B = m-torsion(K_{n-1})`: orders multiply, and
/// `lcm(exp A, exp B) | exp(middle) | exp A * exp B`.
///
/// Passing does not pin down the extension: `Z/9` and `Z/3 (+) Z/3` both pass for
/// `A = B = Z/3`.
pub fn uct_order_check(
    kn: &FinAbGroup,
    kn_minus_1: &FinAbGroup,
    m: &Modulus,
    middle: &FinAbGroup,
) -> bool {
    let a = kn.tensor_mod(m);
    let b = kn_minus_1.torsion_mod(m);
    let (Some(order_a), Some(order_b), Some(order_mid)) = (a.order(), b.order(), middle.order())
    else {
        return false;
    };
    if order_mid != order_a * order_b {
        return false;
    }
    let exp_a = a.exponent().expect("finite");
    let exp_b = b.exponent().expect("finite");
    let exp_mid = middle.exponent().expect("finite");
    exp_mid.is_multiple_of(&exp_a.lcm(&exp_b)) && (&exp_a * &exp_b).is_multiple_of(&exp_mid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn rose(petals: usize) -> OrderedQuiver {
        Quiver::rose(petals).order_sinks_first()
    }

    #[test]
    fn rose_three_petals() {
        let r = divisibility_report(&rose(3), &[(5, 1), (2, 1)]).unwrap();
        let det = r.determinant.as_ref().unwrap();
        assert_eq!(det.value, BigInt::from(-2));
        assert_eq!(det.small_primes, vec![2]);
        assert_eq!(r.primes[0].conclusion, Conclusion::UniquelyDivisible);
        assert_eq!(
            r.primes[1].conclusion,
            Conclusion::Nonvanishing {
                even: true,
                odd: true
            }
        );
        assert_eq!(r.primes[1].even_group(), &FinAbGroup::cyclic(2));
        assert_eq!(r.determinant_consistent(), Some(true));
        let text = r.to_string();
        assert!(text.contains("uniquely 5^1-divisible"), "{text}");
    }

    #[test]
    fn rose_one_petal_never_divisible() {
        let r = divisibility_report(&rose(1), &[(3, 1), (2, 4)]).unwrap();
        assert_eq!(r.determinant.as_ref().unwrap().value, BigInt::zero());
        for p in &r.primes {
            assert_eq!(
                p.conclusion,
                Conclusion::Nonvanishing {
                    even: true,
                    odd: true
                }
            );
        }
        assert_eq!(r.determinant_consistent(), Some(true));
    }

    #[test]
    fn jacobson_has_no_determinant_and_even_classes() {
        let r = divisibility_report(&Quiver::jacobson(2).order_sinks_first(), &[(7, 2)]).unwrap();
        assert!(r.determinant.is_none());
        assert_eq!(
            r.primes[0].conclusion,
            Conclusion::Nonvanishing {
                even: true,
                odd: false
            }
        );
        assert!(r.primes[0]
            .conclusion
            .describe("7^2")
            .contains("every even n"));
    }

    #[test]
    fn non_prime_rejected() {
        assert!(divisibility_report(&rose(3), &[(4, 1)]).is_err());
    }

    #[test]
    fn determinant_factoring() {
        let d = DeterminantInfo::new(BigInt::from(-360));
        assert_eq!(d.small_primes, vec![2, 3, 5]);
        assert!(d.cofactor.is_one());
        let d = DeterminantInfo::new(BigInt::from(1_000_003u64 * 3));
        assert_eq!(d.small_primes, vec![3, 1_000_003]);
    }

    #[test]
    fn uct_examples() {
        let m2 = Modulus::new(2).unwrap();
        let z = FinAbGroup::free(1);
        let z2 = FinAbGroup::cyclic(2);
        assert!(uct_order_check(&z, &z2, &m2, &FinAbGroup::cyclic(4)));
        assert!(uct_order_check(
            &z,
            &z2,
            &m2,
            &FinAbGroup::from_cyclic_orders([2, 2].map(BigInt::from))
        ));
        assert!(!uct_order_check(&z, &z2, &m2, &z2));

        let m5 = Modulus::new(5).unwrap();
        assert!(uct_order_check(
            &FinAbGroup::trivial(),
            &FinAbGroup::trivial(),
            &m5,
            &FinAbGroup::trivial()
        ));

        let m3 = Modulus::new(3).unwrap();
        let z3 = FinAbGroup::cyclic(3);
        assert!(uct_order_check(&z3, &z3, &m3, &FinAbGroup::cyclic(9)));
        assert!(uct_order_check(
            &z3,
            &z3,
            &m3,
            &FinAbGroup::from_cyclic_orders([3, 3].map(BigInt::from))
        ));
        assert!(!uct_order_check(&z3, &z3, &m3, &z));
    }
}
