use super::{mod_l_ktheory_of, DegreeWindow, KGroupTable, KTheoryError};
use crate::linalg::{factorize, Modulus};
use crate::quiver::Quiver;

/// Degreewise comparison of `K_*(L_n; Z/m)` with `(+)_i K_*(L_{l_i^v_i}; Z/m)` over the prime
/// power factors of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreSplitting {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
    pub whole: KGroupTable,
    pub split: KGroupTable,
    pub equal: bool,
}

/// `L_n` is the rose with `n + 1` petals.
pub fn moore_splitting_check(
    n: u64,
    modulus: &Modulus,
    window: DegreeWindow,
) -> Result<MooreSplitting, KTheoryError> {
    if n < 2 {
        return Err(KTheoryError::MooreOrder(n));
    }
    let petals = |k: u64| usize::try_from(k + 1).expect("petal count fits in usize");
    let whole = mod_l_ktheory_of(&Quiver::rose(petals(n)), modulus, window)?;
    let factors = factorize(n);
    let mut split: Option<KGroupTable> = None;
    for &(p, e) in &factors {
        let t = mod_l_ktheory_of(&Quiver::rose(petals(p.pow(e))), modulus, window)?;
        split = Some(match split {
            None => t,
            Some(acc) => acc.direct_sum(&t),
        });
    }
    let split = split.expect("n >= 2 has a prime factor");
    let equal = whole == split;
    Ok(MooreSplitting {
        n,
        factors,
        whole,
        split,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FinAbGroup;

    fn md(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    #[test]
    fn six_mod_four() {
        let s = moore_splitting_check(6, &md(4), DegreeWindow::default()).unwrap();
        assert!(s.equal);
        assert_eq!(s.factors, vec![(2, 1), (3, 1)]);
        assert_eq!(s.whole.group(0), Some(&FinAbGroup::cyclic(2)));
        assert_eq!(s.whole.group(-1), Some(&FinAbGroup::trivial()));
    }

    #[test]
    fn single_prime_power() {
        let s = moore_splitting_check(8, &md(8), DegreeWindow::default()).unwrap();
        assert!(s.equal);
        assert_eq!(s.whole.group(3), Some(&FinAbGroup::cyclic(8)));
    }

    #[test]
    fn coprime_modulus_gives_zero() {
        let s = moore_splitting_check(15, &md(8), DegreeWindow::default()).unwrap();
        assert!(s.equal);
        assert!(s.whole.all_trivial() && s.split.all_trivial());
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(
            moore_splitting_check(1, &md(2), DegreeWindow::default()),
            Err(KTheoryError::MooreOrder(1))
        );
    }
}
