//! Exhaustive-enumeration kernel/cokernel of a matrix over `Z/m`.
//!
//! Shares nothing with the Smith normal form path: the domain is enumerated element by
//! element, and groups are identified from their `p^k`-torsion counts.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{FinAbGroup, IntMatrix, LinalgError, Modulus};

/// Largest domain or codomain size the oracle will enumerate.
pub const ORACLE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub kernel: FinAbGroup,
    pub cokernel: FinAbGroup,
    /// Size of the image subgroup.
    pub image_order: u64,
}

pub fn brute_force_mod_oracle(
    m: &IntMatrix,
    modulus: &Modulus,
) -> Result<OracleResult, LinalgError> {
    let md = modulus.value();
    let too_big = || LinalgError::OracleTooLarge {
        modulus: md,
        rows: m.rows(),
        cols: m.cols(),
    };
    let domain = modulus
        .checked_power(m.cols())
        .filter(|&n| n <= ORACLE_LIMIT)
        .ok_or_else(too_big)?;
    let codomain = modulus
        .checked_power(m.rows())
        .filter(|&n| n <= ORACLE_LIMIT)
        .ok_or_else(too_big)?;

    let big_m = BigInt::from(md);
    let entries: Vec<u64> = m
        .entries()
        .iter()
        .map(|x| {
            let r = ((x % &big_m) + &big_m) % &big_m;
            r.to_u64().expect("residue fits in u64")
        })
        .collect();

    let rows = m.rows();
    let cols = m.cols();
    let apply = |x: &[u64]| -> Vec<u64> {
        (0..rows)
            .map(|i| (0..cols).fold(0u64, |acc, j| (acc + entries[i * cols + j] * x[j]) % md))
            .collect()
    };

    let mut kernel = Vec::new();
    let mut image: HashSet<u64> = HashSet::new();
    let mut x = vec![0u64; cols];
    for _ in 0..domain {
        let y = apply(&x);
        if y.iter().all(|&c| c == 0) {
            kernel.push(x.clone());
        }
        image.insert(encode(&y, md));
        increment(&mut x, md);
    }

    let kernel_group = classify(modulus, |d| {
        kernel
            .iter()
            .filter(|x| x.iter().all(|&c| (c * d) % md == 0))
            .count() as u64
    });

    let image_order = image.len() as u64;
    let cokernel_group = classify(modulus, |d| {
        let mut y = vec![0u64; rows];
        let mut hits = 0u64;
        for _ in 0..codomain {
            let dy: Vec<u64> = y.iter().map(|&c| (c * d) % md).collect();
            if image.contains(&encode(&dy, md)) {
                hits += 1;
            }
            increment(&mut y, md);
        }
        hits / image_order
    });

    Ok(OracleResult {
        kernel: kernel_group,
        cokernel: cokernel_group,
        image_order,
    })
}

fn encode(v: &[u64], base: u64) -> u64 {
    v.iter().fold(0, |acc, &c| acc * base + c)
}

fn increment(x: &mut [u64], base: u64) {
    for c in x.iter_mut() {
        *c += 1;
        if *c < base {
            return;
        }
        *c = 0;
    }
}

/// Recovers a group of exponent dividing `m` from `count(d) = #{g : d g = 0}`, evaluated at
/// prime powers `d = p^k` dividing `m`. For a `p`-group of type `(p^l1, p^l2, ...)`,
/// `#{g : p^k g = 0} = p^(sum_i min(l_i, k))`.
fn classify(modulus: &Modulus, count: impl Fn(u64) -> u64) -> FinAbGroup {
    let mut orders = Vec::new();
    for &(p, e) in modulus.factors() {
        let mut s = vec![0u32];
        for k in 1..=e {
            s.push(log_exact(count(p.pow(k)), p));
        }
        // parts_at_least[k] = number of cyclic factors of order >= p^k
        let parts_at_least: Vec<u32> = (1..=e as usize).map(|k| s[k] - s[k - 1]).collect();
        for k in 1..=e as usize {
            let next = parts_at_least.get(k).copied().unwrap_or(0);
            let exact = parts_at_least[k - 1] - next;
            for _ in 0..exact {
                orders.push(BigInt::from(p.pow(k as u32)));
            }
        }
    }
    FinAbGroup::from_cyclic_orders(orders)
}

fn log_exact(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p, 0, "torsion count must be a power of p");
        n /= p;
        k += 1;
    }
    k
}
