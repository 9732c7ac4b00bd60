//! Symbolic Leavitt path algebras over exact scalars.
//!
//! Elements live in the basis of monomials `σ τ*` (`σ`, `τ` paths with `r(σ) = r(τ)`)
//! that do not end in `γ γ*` for the special arrow `γ` of a non-sink vertex. Products
//! are formed with the relation `α* β = δ_{αβ} e_{r(α)}` and then brought to normal form by
//! rewriting each `γ γ*` junction as `e_v - Σ_{s(α)=v, α≠γ} α α*`.
//!
//! The special arrow of a non-sink vertex is its outgoing arrow with the lexicographically
//! smallest id.

mod basis;
mod corner;
mod element;
mod parse;
mod path;
mod rewrite;
mod scalar;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::quiver::Quiver;

pub use basis::{enumerate_basis, DEFAULT_BASIS_LIMIT};
pub use corner::{CornerData, CornerReport};
pub use element::Element;
pub use parse::{parse_expr, Expr};
pub use path::{paths_of_length, Monomial, Path};
pub use rewrite::{Letter, RawTerm, Strategy};
pub use scalar::{PrimeField, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements belong to different quivers")]
    QuiverMismatch,
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("scalar {0} is not representable in the coefficient field")]
    Scalar(String),
    #[error("rewriting did not terminate within {0} steps")]
    RewriteLimit(usize),
    #[error("basis enumeration would produce more than {limit} monomials")]
    BasisTooLarge { limit: usize },
    #[error("quiver has sources: {}", .0.join(", "))]
    HasSources(Vec<String>),
}

/// The Leavitt path algebra of a fixed quiver. Cheap to clone; the rewrite tables are
/// built once and shared.
#[derive(Clone, Debug)]
pub struct LeavittPathAlgebra {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    quiver: Quiver,
    special: Vec<Option<usize>>,
}

impl LeavittPathAlgebra {
    pub fn new(quiver: Quiver) -> Self {
        let special = (0..quiver.num_vertices())
            .map(|v| {
                quiver
                    .outgoing(v)
                    .min_by(|&a, &b| quiver.arrow(a).id.cmp(&quiver.arrow(b).id))
            })
            .collect();
        LeavittPathAlgebra {
            inner: Arc::new(Inner { quiver, special }),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.inner.quiver
    }

    /// The arrow eliminated by the CK2 rewrite at `v`; `None` at sinks.
    pub fn special_arrow(&self, v: usize) -> Option<usize> {
        self.inner.special[v]
    }

    pub fn is_special(&self, arrow: usize) -> bool {
        let source = self.quiver().arrow(arrow).source;
        self.special_arrow(source) == Some(arrow)
    }

    /// Whether `σ τ*` is a basis monomial.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        match (m.sigma().last(), m.tau().last()) {
            (Some(a), Some(b)) => !(a == b && self.is_special(a)),
            _ => true,
        }
    }

    /// `(σ1 τ1*)(σ2 τ2*)` before CK2 normalization, or `None` when it vanishes by CK1.
    pub(crate) fn monomial_product(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        let q = self.quiver();
        let (s1, t1) = (a.sigma(), a.tau());
        let (s2, t2) = (b.sigma(), b.tau());
        if t1.is_prefix_of(s2) {
            let rest = s2.suffix_after(q, t1.len());
            Monomial::new(s1.concat(&rest), t2.clone())
        } else if s2.is_prefix_of(t1) {
            let rest = t1.suffix_after(q, s2.len());
            Monomial::new(s1.clone(), t2.concat(&rest))
        } else {
            None
        }
    }

    /// Adds `c * m` to `terms`, rewriting special junctions until only basis monomials remain.
    pub(crate) fn normalize_into<S: Scalar>(
        &self,
        m: Monomial,
        c: S,
        terms: &mut BTreeMap<Monomial, S>,
    ) {
        let q = self.quiver();
        let mut current = m;
        let coeff = c;
        loop {
            if self.is_normal(&current) {
                element::accumulate(terms, current, coeff);
                return;
            }
            let gamma = current.sigma().last().expect("non-normal has arrows");
            let v = q.arrow(gamma).source;
            let sigma = current.sigma().pop(q).expect("nonempty");
            let tau = current.tau().pop(q).expect("nonempty");
            for alpha in q.outgoing(v).filter(|&a| a != gamma) {
                let m =
                    Monomial::new(sigma.push(q, alpha), tau.push(q, alpha)).expect("ranges agree");
                element::accumulate(terms, m, -coeff.clone());
            }
            current = Monomial::new(sigma, tau).expect("ranges agree");
        }
    }

    /// `Σ_{s(α)=v} α α* - e_v`, which must normalize to zero at every non-sink `v`.
    pub fn ck2_defect<S: Scalar>(&self, v: usize) -> Element<S> {
        let mut acc = -&self.vertex::<S>(v);
        for a in self.quiver().outgoing(v).collect::<Vec<_>>() {
            let x = self.arrow::<S>(a);
            acc = &acc + &(&x * &x.star());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    type Q = Rational;

    fn l1() -> LeavittPathAlgebra {
        LeavittPathAlgebra::new(Quiver::rose(2))
    }

    #[test]
    fn ck1_relations() {
        let alg = l1();
        let x = alg.arrow_by_id::<Q>("x").unwrap();
        let y = alg.arrow_by_id::<Q>("y").unwrap();
        assert_eq!(&x.star() * &x, alg.one());
        assert!((&y.star() * &x).is_zero());
    }

    #[test]
    fn ck2_relation() {
        let alg = l1();
        let x = alg.arrow_by_id::<Q>("x").unwrap();
        let y = alg.arrow_by_id::<Q>("y").unwrap();
        let lhs = &x * &x.star();
        let rhs = &alg.one() - &(&y * &y.star());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "1 - y y*");
        assert!(alg.ck2_defect::<Q>(0).is_zero());
    }

    #[test]
    fn double_rewrite() {
        // x x x* x* = x (1 - y y*) x* = 1 - y y* - x y y* x*
        let alg = l1();
        let x = alg.arrow_by_id::<Q>("x").unwrap();
        let xx = &x * &x;
        let got = &xx * &xx.star();
        assert_eq!(got.to_string(), "1 - y y* - x y y* x*");
    }

    #[test]
    fn toeplitz_corner_relation() {
        let alg = LeavittPathAlgebra::new(Quiver::toeplitz());
        let a = alg.arrow_by_id::<Q>("a").unwrap();
        let b = alg.arrow_by_id::<Q>("b").unwrap();
        let t = &a + &b;
        assert_eq!(&t.star() * &t, alg.one());
        assert_eq!((&t.star() * &t).to_string(), "1");
    }

    #[test]
    fn orthogonal_idempotents() {
        let alg = LeavittPathAlgebra::new(Quiver::toeplitz());
        let e1 = alg.vertex::<Q>(0);
        let e2 = alg.vertex::<Q>(1);
        assert!((&e1 * &e2).is_zero());
        assert_eq!(&e1 * &e1, e1);
        assert_eq!(e1.to_string(), "e(1)");
    }

    #[test]
    fn grading() {
        let alg = l1();
        let x = alg.arrow_by_id::<Q>("x").unwrap();
        let y = alg.arrow_by_id::<Q>("y").unwrap();
        let xy = &x * &y.star();
        assert_eq!(
            xy.grading_components().keys().copied().collect::<Vec<_>>(),
            vec![0]
        );
        let s = &x + &y.star();
        let comps = s.grading_components();
        assert_eq!(comps[&1], x);
        assert_eq!(comps[&-1], y.star());
        assert_eq!(s.homogeneous_degree(), None);
    }

    #[test]
    fn quiver_mismatch() {
        let a = l1().one::<Q>();
        let b = LeavittPathAlgebra::new(Quiver::toeplitz()).one::<Q>();
        assert_eq!(a.multiply(&b), Err(AlgebraError::QuiverMismatch));
    }

    #[test]
    fn scalars_and_display() {
        let alg = LeavittPathAlgebra::new(Quiver::toeplitz());
        let half = Q::new(1.into(), 2.into());
        let e = alg.scalar(half.clone());
        assert_eq!(e.to_string(), "1/2");
        let minus = alg.vertex::<Q>(0).scale(&-Q::one());
        assert_eq!(minus.to_string(), "-e(1)");
        assert_eq!(alg.zero::<Q>().to_string(), "0");
        assert!(alg.scalar(Q::zero()).is_zero());
    }
}
