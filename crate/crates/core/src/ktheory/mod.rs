//! Mod-`m` K-theory of Leavitt path algebras and the surrounding long exact sequence
//! machinery.
//!
//! For a finite quiver without sources, ordered sinks first with `v` vertices and `v'`
//! sinks, everything is governed by the `v x (v - v')` integer matrix
//! `(0; id) - I_Q^t`. Over `Z/m` with `m = l^v` a prime power (and `k` algebraically closed,
//! `l != char k`), `K_n(L_Q; Z/m)` is its cokernel for even `n >= 0`, its kernel for odd
//! `n >= 0`, and zero for `n < 0`.

mod divisibility;
mod les;
mod splitting;

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{cokernel_mod, kernel_mod, FinAbGroup, IntMatrix, LinalgError, Modulus};
use crate::quiver::{OrderedQuiver, Quiver, QuiverError};

pub use divisibility::{
    divisibility_report, uct_order_check, Conclusion, DeterminantInfo, DivisibilityReport,
    PrimeReport,
};
pub use les::{corner_les, CoefficientDegree, CoefficientTheory, LesEntry, Presentation};
pub use splitting::{moore_splitting_check, MooreSplitting};

/// Printed with every table: the computation is only claimed under these hypotheses.
pub const FIELD_HYPOTHESIS: &str = "k algebraically closed, l != char(k)";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KTheoryError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Modulus(#[from] LinalgError),
    #[error("empty degree window: from {from} > to {to}")]
    EmptyWindow { from: i64, to: i64 },
    #[error("degree {degree}: {message}")]
    DimensionMismatch { degree: i64, message: String },
    #[error("Moore splitting needs n >= 2, got {0}")]
    MooreOrder(u64),
}

/// Closed range of degrees `from..=to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeWindow {
    pub from: i64,
    pub to: i64,
}

impl DegreeWindow {
    pub fn new(from: i64, to: i64) -> Result<Self, KTheoryError> {
        if from > to {
            return Err(KTheoryError::EmptyWindow { from, to });
        }
        Ok(DegreeWindow { from, to })
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.from..=self.to
    }
}

impl Default for DegreeWindow {
    fn default() -> Self {
        DegreeWindow { from: -2, to: 7 }
    }
}

/// Where a table entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Cokernel,
    Kernel,
    ZeroNegative,
}

impl Provenance {
    pub fn for_degree(n: i64) -> Self {
        match n {
            n if n < 0 => Provenance::ZeroNegative,
            n if n % 2 == 0 => Provenance::Cokernel,
            _ => Provenance::Kernel,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Cokernel => "cokernel",
            Provenance::Kernel => "kernel",
            Provenance::ZeroNegative => "zero-negative",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub group: FinAbGroup,
    pub provenance: Provenance,
}

/// `K_n(L_Q; Z/m)` for `n` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroupTable {
    modulus: Modulus,
    entries: BTreeMap<i64, TableEntry>,
}

impl KGroupTable {
    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// Results for composite moduli are only a formal CRT extension of the prime-power case.
    pub fn is_formal(&self) -> bool {
        !self.modulus.is_prime_power()
    }

    pub fn warning(&self) -> Option<String> {
        self.is_formal().then(|| {
            format!(
                "modulus {} is not a prime power; table is a formal extension by CRT",
                self.modulus
            )
        })
    }

    pub fn get(&self, degree: i64) -> Option<&TableEntry> {
        self.entries.get(&degree)
    }

    pub fn group(&self, degree: i64) -> Option<&FinAbGroup> {
        self.get(degree).map(|e| &e.group)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &TableEntry)> {
        self.entries.iter().map(|(&n, e)| (n, e))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn all_trivial(&self) -> bool {
        self.entries.values().all(|e| e.group.is_trivial())
    }

    /// Degreewise direct sum of two tables over the same degrees.
    pub fn direct_sum(&self, other: &KGroupTable) -> KGroupTable {
        let entries = self
            .entries
            .iter()
            .map(|(&n, e)| {
                let rhs = other.group(n).cloned().unwrap_or_default();
                (
                    n,
                    TableEntry {
                        group: e.group.direct_sum(&rhs),
                        provenance: e.provenance,
                    },
                )
            })
            .collect();
        KGroupTable {
            modulus: self.modulus.clone(),
            entries,
        }
    }

    fn from_entries(modulus: Modulus, entries: BTreeMap<i64, TableEntry>) -> Self {
        KGroupTable { modulus, entries }
    }
}

/// `(0; id) - I_Q^t`, a `v x (v - v')` matrix. Requires a quiver without sources.
pub fn leavitt_matrix(q: &OrderedQuiver) -> Result<IntMatrix, KTheoryError> {
    q.require_no_sources()?;
    let reduced_t = q.reduced_incidence()?.transpose();
    let embed = IntMatrix::bottom_identity(q.num_vertices(), q.num_non_sinks());
    Ok(&embed - &reduced_t)
}

/// `K_n(L_Q; Z/m)` for `n` in `window`.
pub fn mod_l_ktheory(
    q: &OrderedQuiver,
    modulus: &Modulus,
    window: DegreeWindow,
) -> Result<KGroupTable, KTheoryError> {
    let window = DegreeWindow::new(window.from, window.to)?;
    let m = leavitt_matrix(q)?;
    let coker = cokernel_mod(&m, modulus);
    let ker = kernel_mod(&m, modulus);
    let entries = window
        .degrees()
        .map(|n| {
            let provenance = Provenance::for_degree(n);
            let group = match provenance {
                Provenance::Cokernel => coker.clone(),
                Provenance::Kernel => ker.clone(),
                Provenance::ZeroNegative => FinAbGroup::trivial(),
            };
            (n, TableEntry { group, provenance })
        })
        .collect();
    Ok(KGroupTable::from_entries(modulus.clone(), entries))
}

/// Convenience: orders `q` sinks first and computes its table.
pub fn mod_l_ktheory_of(
    q: &Quiver,
    modulus: &Modulus,
    window: DegreeWindow,
) -> Result<KGroupTable, KTheoryError> {
    mod_l_ktheory(&q.order_sinks_first(), modulus, window)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    #[test]
    fn leavitt_matrix_examples() {
        for n in 0..4 {
            let o = Quiver::jacobson(n).order_sinks_first();
            let n = n as i64;
            assert_eq!(
                leavitt_matrix(&o).unwrap(),
                IntMatrix::from_rows(&[[-(n + 1)], [-n]])
            );
        }
        for petals in 1..6 {
            let o = Quiver::rose(petals).order_sinks_first();
            assert_eq!(
                leavitt_matrix(&o).unwrap(),
                IntMatrix::from_rows(&[[1 - petals as i64]])
            );
        }
    }

    #[test]
    fn sources_rejected() {
        let o = Quiver::parse("vertices a b\narrow x a b\narrow y b b")
            .unwrap()
            .order_sinks_first();
        assert!(
            matches!(leavitt_matrix(&o), Err(KTheoryError::Quiver(QuiverError::HasSources(v))) if v == ["a"])
        );
        let w = DegreeWindow::default();
        assert!(mod_l_ktheory(&o, &md(2), w).is_err());
    }

    #[test]
    fn window_validation() {
        assert_eq!(
            DegreeWindow::new(3, 1),
            Err(KTheoryError::EmptyWindow { from: 3, to: 1 })
        );
        let bad = DegreeWindow { from: 3, to: 1 };
        assert!(mod_l_ktheory_of(&Quiver::rose(2), &md(2), bad).is_err());
    }

    #[test]
    fn rose_tables() {
        let l1 =
            mod_l_ktheory_of(&Quiver::rose(2), &md(8), DegreeWindow::new(-2, 5).unwrap()).unwrap();
        assert!(l1.all_trivial());

        let l0 = mod_l_ktheory_of(&Quiver::rose(1), &md(9), DegreeWindow::default()).unwrap();
        for (n, e) in l0.iter() {
            let expected = if n >= 0 {
                FinAbGroup::cyclic(9)
            } else {
                FinAbGroup::trivial()
            };
            assert_eq!(e.group, expected, "degree {n}");
            assert_eq!(e.provenance, Provenance::for_degree(n));
        }

        // l^v + 1 petals at modulus l^v: Z/l^v in every degree >= 0
        for m in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let t = mod_l_ktheory_of(
                &Quiver::rose(m as usize + 1),
                &md(m),
                DegreeWindow::default(),
            )
            .unwrap();
            for (n, e) in t.iter().filter(|(n, _)| *n >= 0) {
                assert_eq!(e.group, FinAbGroup::cyclic(m), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn jacobson_collapse() {
        let t = mod_l_ktheory_of(&Quiver::jacobson(1), &md(5), DegreeWindow::default()).unwrap();
        for (n, e) in t.iter() {
            let expected = if n >= 0 && n % 2 == 0 {
                FinAbGroup::cyclic(5)
            } else {
                FinAbGroup::trivial()
            };
            assert_eq!(e.group, expected);
        }
        assert!(!t.is_formal());
    }

    #[test]
    fn composite_modulus_is_flagged() {
        let t = mod_l_ktheory_of(&Quiver::rose(3), &md(6), DegreeWindow::default()).unwrap();
        assert!(t.is_formal());
        assert!(t.warning().unwrap().contains("CRT"));
        assert_eq!(t.group(0), Some(&FinAbGroup::cyclic(2)));
    }

    #[test]
    fn provenance_by_degree() {
        assert_eq!(Provenance::for_degree(-1), Provenance::ZeroNegative);
        assert_eq!(Provenance::for_degree(0), Provenance::Cokernel);
        assert_eq!(Provenance::for_degree(7), Provenance::Kernel);
    }
}
