//! Homotopy-group level resolution of a triangle
//! `E(A) --(iota - phi_*)--> E(B) --> E(C) --> Sigma E(A)`.
//!
//! Each degree yields a short exact sequence
//! `0 -> coker(f_n) -> E_n(C) -> ker(f_{n-1}) -> 0`, where `f_n = iota - phi_*` in degree `n`.
//! `iota` is the identity for square data and the embedding `(0; id)` otherwise, which is
//! exactly the shape of the Leavitt path algebra triangle.
//!
//! Extensions are resolved only when forced by the orders involved; everything else is
//! reported as an unresolved `(sub, quotient)` pair.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::One;

use super::{DegreeWindow, KTheoryError};
use crate::linalg::{
    cokernel_int, cokernel_mod, kernel_int, kernel_mod, FinAbGroup, IntMatrix, Modulus,
};
use crate::quiver::OrderedQuiver;

/// A presentation of one homotopy group as `Z^rank` or `(Z/m)^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Free(usize),
    Cyclic { modulus: Modulus, rank: usize },
}

impl Presentation {
    pub fn zero() -> Self {
        Presentation::Free(0)
    }

    pub fn rank(&self) -> usize {
        match self {
            Presentation::Free(r) | Presentation::Cyclic { rank: r, .. } => *r,
        }
    }

    pub fn modulus(&self) -> Option<&Modulus> {
        match self {
            Presentation::Free(_) => None,
            Presentation::Cyclic { modulus, .. } => Some(modulus),
        }
    }

    pub fn group(&self) -> FinAbGroup {
        match self {
            Presentation::Free(r) => FinAbGroup::free(*r),
            Presentation::Cyclic { modulus, rank } => {
                FinAbGroup::from_cyclic_orders(std::iter::repeat_n(modulus.as_bigint(), *rank))
            }
        }
    }
}

/// Data for one degree: presentations of source and target and the matrix of `phi_*`
/// (`target.rank() x source.rank()`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientDegree {
    pub source: Presentation,
    pub target: Presentation,
    pub phi_star: IntMatrix,
}

impl CoefficientDegree {
    pub fn zero() -> Self {
        CoefficientDegree {
            source: Presentation::zero(),
            target: Presentation::zero(),
            phi_star: IntMatrix::zeros(0, 0),
        }
    }

    /// Endomorphism data: `E_n(A)` presented by `p`, acted on by the square `phi_star`.
    pub fn endomorphism(p: Presentation, phi_star: IntMatrix) -> Self {
        CoefficientDegree {
            source: p.clone(),
            target: p,
            phi_star,
        }
    }
}

/// Coefficient groups and induced maps over a range of degrees.
///
/// With `period = Some(p)` the entries are keyed by residues `0..p` and degree `n` reads
/// entry `n mod p`; otherwise entries are keyed by degree and missing degrees are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTheory {
    entries: BTreeMap<i64, CoefficientDegree>,
    period: Option<u32>,
}

impl CoefficientTheory {
    pub fn explicit(entries: BTreeMap<i64, CoefficientDegree>) -> Self {
        CoefficientTheory {
            entries,
            period: None,
        }
    }

    pub fn periodic(entries: Vec<CoefficientDegree>) -> Self {
        let period = u32::try_from(entries.len()).expect("period fits in u32");
        assert!(period > 0, "periodic theory needs at least one degree");
        let entries = entries
            .into_iter()
            .enumerate()
            .map(|(i, d)| (i as i64, d))
            .collect();
        CoefficientTheory {
            entries,
            period: Some(period),
        }
    }

    /// `E = K(-; Z/m)` of an algebraically closed field (`Z/m` in even degrees `>= 0`, zero
    /// otherwise) tensored with the Leavitt path algebra data of `q`: `phi_* = I_Q^t`
    /// from `(Z/m)^(v - v')` to `(Z/m)^v`.
    pub fn suslin_for_quiver(
        q: &OrderedQuiver,
        modulus: &Modulus,
        window: DegreeWindow,
    ) -> Result<Self, KTheoryError> {
        q.require_no_sources()?;
        let phi = q.reduced_incidence()?.transpose();
        let mut entries = BTreeMap::new();
        for n in window.from - 1..=window.to {
            if n >= 0 && n % 2 == 0 {
                let source = Presentation::Cyclic {
                    modulus: modulus.clone(),
                    rank: q.num_non_sinks(),
                };
                let target = Presentation::Cyclic {
                    modulus: modulus.clone(),
                    rank: q.num_vertices(),
                };
                entries.insert(
                    n,
                    CoefficientDegree {
                        source,
                        target,
                        phi_star: phi.clone(),
                    },
                );
            }
        }
        Ok(Self::explicit(entries))
    }

    pub fn period(&self) -> Option<u32> {
        self.period
    }

    pub fn degree(&self, n: i64) -> CoefficientDegree {
        let key = match self.period {
            Some(p) => n.rem_euclid(i64::from(p)),
            None => n,
        };
        self.entries
            .get(&key)
            .cloned()
            .unwrap_or_else(CoefficientDegree::zero)
    }
}

/// `E_n(C)` as an extension `0 -> sub -> E_n(C) -> quotient -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesEntry {
    pub degree: i64,
    pub sub: FinAbGroup,
    pub quotient: FinAbGroup,
    pub resolved: Option<FinAbGroup>,
}

impl LesEntry {
    fn new(degree: i64, sub: FinAbGroup, quotient: FinAbGroup) -> Self {
        let resolved = resolve_extension(&sub, &quotient);
        LesEntry {
            degree,
            sub,
            quotient,
            resolved,
        }
    }
}

/// The extension is forced when one side vanishes or both are finite cyclic of coprime order.
fn resolve_extension(sub: &FinAbGroup, quotient: &FinAbGroup) -> Option<FinAbGroup> {
    if sub.is_trivial() {
        return Some(quotient.clone());
    }
    if quotient.is_trivial() {
        return Some(sub.clone());
    }
    if sub.is_cyclic() && quotient.is_cyclic() {
        if let (Some(a), Some(b)) = (sub.order(), quotient.order()) {
            if a.gcd(&b).is_one() {
                return Some(FinAbGroup::cyclic(a * b));
            }
        }
    }
    None
}

/// The map `f_n = iota - phi_*` with its kernel and cokernel.
fn degree_map(
    theory: &CoefficientTheory,
    n: i64,
) -> Result<(FinAbGroup, FinAbGroup), KTheoryError> {
    let d = theory.degree(n);
    let mismatch = |message: String| KTheoryError::DimensionMismatch { degree: n, message };
    let (rows, cols) = (d.target.rank(), d.source.rank());
    if d.phi_star.shape() != (rows, cols) {
        return Err(mismatch(format!(
            "phi_* is {}x{}, presentations need {rows}x{cols}",
            d.phi_star.rows(),
            d.phi_star.cols()
        )));
    }
    if rows < cols {
        return Err(mismatch(format!(
            "target rank {rows} is smaller than source rank {cols}"
        )));
    }
    let modulus = match (d.source.modulus(), d.target.modulus()) {
        (Some(a), Some(b)) if a != b => return Err(mismatch(format!("moduli {a} and {b} differ"))),
        (Some(a), _) | (None, Some(a)) => {
            let other_free = matches!(d.source, Presentation::Free(r) if r > 0)
                || matches!(d.target, Presentation::Free(r) if r > 0);
            if other_free {
                return Err(mismatch("mixed free and cyclic presentations".into()));
            }
            Some(a.clone())
        }
        (None, None) => None,
    };
    let f = &IntMatrix::bottom_identity(rows, cols) - &d.phi_star;
    Ok(match modulus {
        Some(m) => (kernel_mod(&f, &m), cokernel_mod(&f, &m)),
        None => (kernel_int(&f), cokernel_int(&f)),
    })
}

/// Resolves the long exact sequence degree by degree over `window`.
pub fn corner_les(
    theory: &CoefficientTheory,
    window: DegreeWindow,
) -> Result<Vec<LesEntry>, KTheoryError> {
    let window = DegreeWindow::new(window.from, window.to)?;
    let mut out = Vec::new();
    let (mut prev_kernel, _) = degree_map(theory, window.from - 1)?;
    for n in window.degrees() {
        let (kernel, cokernel) = degree_map(theory, n)?;
        out.push(LesEntry::new(n, cokernel, prev_kernel));
        prev_kernel = kernel;
    }
    Ok(out)
}
