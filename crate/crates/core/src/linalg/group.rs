use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, Modulus};

/// Finitely generated abelian group `Z^r (+) Z/d1 (+) ... (+) Z/dk` in invariant-factor
/// normal form: `2 <= d1 | d2 | ... | dk`.
///
/// Two groups are isomorphic iff their normal forms are equal, so `Eq` is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/d`, with `d = 0` read as `Z` and `d = +-1` as the trivial group.
    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders([order.into()])
    }

    /// Normal form of an arbitrary direct sum of cyclic groups `Z/a_i` (`a_i = 0` meaning `Z`).
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut free_rank = 0;
        let mut finite = Vec::new();
        for a in orders {
            let a = a.abs();
            if a.is_zero() {
                free_rank += 1;
            } else if !a.is_one() {
                finite.push(a);
            }
        }
        FinAbGroup {
            free_rank,
            torsion: invariant_factors(finite),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Cyclic means generated by one element (the trivial group counts).
    pub fn is_cyclic(&self) -> bool {
        self.free_rank + self.torsion.len() <= 1
    }

    /// Number of cyclic summands in the normal form.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Exponent of a finite group (the largest invariant factor); `None` if infinite.
    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        FinAbGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: invariant_factors(torsion),
        }
    }

    /// `G (x) Z/m`.
    pub fn tensor_mod(&self, m: &Modulus) -> FinAbGroup {
        let m = m.as_bigint();
        let orders = std::iter::repeat_n(m.clone(), self.free_rank)
            .chain(self.torsion.iter().map(|d| d.gcd(&m)));
        Self::from_cyclic_orders(orders)
    }

    /// The `m`-torsion subgroup `{x : m x = 0}`.
    pub fn torsion_mod(&self, m: &Modulus) -> FinAbGroup {
        let m = m.as_bigint();
        Self::from_cyclic_orders(self.torsion.iter().map(|d| d.gcd(&m)))
    }
}

/// Pairwise gcd/lcm sweep; after pass `i`, entry `i` divides every later entry.
fn invariant_factors(mut a: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let g = a[i].gcd(&a[j]);
            if g != a[i] {
                let l = a[i].lcm(&a[j]);
                a[i] = g;
                a[j] = l;
            }
        }
    }
    a.retain(|d| !d.is_one());
    a
}

/// Renders in invariant-factor form: `0`, `Z (+) Z/2 (+) Z/4`.
impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = vec!["Z".to_string(); self.free_rank];
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" (+) "))
    }
}

impl FromStr for FinAbGroup {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let bad = || LinalgError::GroupSyntax(s.to_string());
        let mut orders = Vec::new();
        for part in s.split("(+)") {
            let part = part.trim();
            if part == "Z" {
                orders.push(BigInt::zero());
            } else if let Some(d) = part.strip_prefix("Z/") {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d < BigInt::from(2) {
                    return Err(bad());
                }
                orders.push(d);
            } else {
                return Err(bad());
            }
        }
        let g = Self::from_cyclic_orders(orders);
        // only normal forms are accepted, so rendering is a bijection
        if g.to_string() != s {
            return Err(bad());
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tors(g: &FinAbGroup) -> Vec<i64> {
        g.torsion()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn direct_sums_normalize() {
        let z2 = FinAbGroup::cyclic(2);
        let z3 = FinAbGroup::cyclic(3);
        let z4 = FinAbGroup::cyclic(4);
        assert_eq!(z2.direct_sum(&z3), FinAbGroup::cyclic(6));
        assert_eq!(tors(&z2.direct_sum(&z4)), vec![2, 4]);
        let g = FinAbGroup::free(1).direct_sum(&FinAbGroup::cyclic(5));
        assert_eq!(g.free_rank(), 1);
        assert_eq!(tors(&g), vec![5]);
    }

    #[test]
    fn normal_form_of_mixed_orders() {
        // Z/4 + Z/6 + Z/10 = Z/2 + Z/2 + Z/60
        let g = FinAbGroup::from_cyclic_orders([4, 6, 10].map(BigInt::from));
        assert_eq!(tors(&g), vec![2, 2, 60]);
        assert_eq!(g.order(), Some(BigInt::from(240)));
        assert_eq!(g.exponent(), Some(BigInt::from(60)));
    }

    #[test]
    fn cyclic_edge_values() {
        assert_eq!(FinAbGroup::cyclic(0), FinAbGroup::free(1));
        assert!(FinAbGroup::cyclic(1).is_trivial());
        assert!(FinAbGroup::cyclic(-1).is_trivial());
        assert_eq!(FinAbGroup::cyclic(-6), FinAbGroup::cyclic(6));
    }

    #[test]
    fn tensor_and_torsion_with_modulus() {
        let m = Modulus::new(6).unwrap();
        let g = FinAbGroup::from_cyclic_orders([0, 4, 9].map(BigInt::from));
        assert_eq!(
            g.tensor_mod(&m),
            FinAbGroup::from_cyclic_orders([6, 2, 3].map(BigInt::from))
        );
        assert_eq!(g.torsion_mod(&m), FinAbGroup::cyclic(6));
    }

    #[test]
    fn render_and_parse() {
        let g = FinAbGroup::from_cyclic_orders([0, 2, 4].map(BigInt::from));
        assert_eq!(g.to_string(), "Z (+) Z/2 (+) Z/4");
        assert_eq!(g.to_string().parse::<FinAbGroup>().unwrap(), g);
        assert_eq!("0".parse::<FinAbGroup>().unwrap(), FinAbGroup::trivial());
        assert!("Z/4 (+) Z/2".parse::<FinAbGroup>().is_err());
        assert!("Z/1".parse::<FinAbGroup>().is_err());
    }
}
