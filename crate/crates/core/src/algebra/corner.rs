//! The corner skew Laurent structure of `L_Q`: `t₊ = Σ_i α_i` over one arrow `α_i` into
//! each vertex `i`, `t₋ = t₊*`, `e = t₊ t₋` and the corner map `φ(a) = t₊ a t₋`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{paths_of_length, AlgebraError, Element, LeavittPathAlgebra, Monomial, Path, Scalar};

#[derive(Clone, Debug)]
pub struct CornerData<S: Scalar> {
    pub t_plus: Element<S>,
    pub t_minus: Element<S>,
    pub e: Element<S>,
    /// `designated[i]` is the arrow `α_i` with range `i`.
    pub designated: Vec<usize>,
}

/// Outcome of [`CornerData::verify_axioms`]; `failures` is empty when everything holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CornerReport {
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CornerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

impl<S: Scalar> CornerData<S> {
    /// Picks `α_i` as the lexicographically smallest arrow id with range `i`.
    pub fn new(alg: &LeavittPathAlgebra) -> Result<Self, AlgebraError> {
        let q = alg.quiver();
        let sources = q.sources();
        if !sources.is_empty() {
            return Err(AlgebraError::HasSources(sources));
        }
        let designated: Vec<usize> = (0..q.num_vertices())
            .map(|i| {
                q.incoming(i)
                    .min_by(|&a, &b| q.arrow(a).id.cmp(&q.arrow(b).id))
                    .expect("no sources")
            })
            .collect();
        let mut t_plus = alg.zero();
        for &a in &designated {
            t_plus = &t_plus + &alg.arrow(a);
        }
        let t_minus = t_plus.star();
        let e = &t_plus * &t_minus;
        Ok(CornerData {
            t_plus,
            t_minus,
            e,
            designated,
        })
    }

    /// `t₊ a t₋`.
    pub fn phi(&self, a: &Element<S>) -> Element<S> {
        &(&self.t_plus * a) * &self.t_minus
    }

    /// `φ(a)` together with whether `a` was homogeneous of degree 0, the domain of the corner map.
    pub fn phi_checked(&self, a: &Element<S>) -> (Element<S>, bool) {
        (self.phi(a), a.homogeneous_degree() == Some(0))
    }

    /// Checks `t₋t₊ = 1`, `e² = e`, `φ(1) = e` and, on `samples` random degree-0 elements,
    /// `a t₋ = t₋ φ(a)`, `t₊ a = φ(a) t₊`, `φ(a)φ(b) = φ(ab)` and that `φ` preserves degree 0.
    pub fn verify_axioms(&self, samples: usize, seed: u64) -> CornerReport {
        let alg = self.t_plus.algebra().clone();
        let one = alg.one::<S>();
        let mut report = CornerReport {
            samples,
            ..Default::default()
        };
        report.check(&self.t_minus * &self.t_plus == one, || {
            format!("t- t+ = {}", &self.t_minus * &self.t_plus)
        });
        report.check(&self.e * &self.e == self.e, || "e is not idempotent".into());
        report.check(self.phi(&one) == self.e, || "phi(1) != e".into());
        report.check(self.t_plus.homogeneous_degree() == Some(1), || {
            "t+ is not of degree 1".into()
        });

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elems: Vec<Element<S>> = (0..samples)
            .map(|_| random_degree_zero(&alg, &mut rng, 2, 3))
            .collect();
        for (i, a) in elems.iter().enumerate() {
            let fa = self.phi(a);
            report.check(fa.homogeneous_degree() == Some(0), || {
                format!("phi({a}) is not of degree 0")
            });
            report.check(a * &self.t_minus == &self.t_minus * &fa, || {
                format!("a t- != t- phi(a) for a = {a}")
            });
            report.check(&self.t_plus * a == &fa * &self.t_plus, || {
                format!("t+ a != phi(a) t+ for a = {a}")
            });
            let b = &elems[(i + 1) % elems.len()];
            report.check(&fa * &self.phi(b) == self.phi(&(a * b)), || {
                format!("phi(a)phi(b) != phi(ab) for a = {a}, b = {b}")
            });
        }
        report
    }
}

/// A random combination of up to `max_terms` monomials `σ τ*` with `|σ| = |τ| ≤ max_len`
/// and small integer coefficients.
pub(crate) fn random_degree_zero<S: Scalar>(
    alg: &LeavittPathAlgebra,
    rng: &mut impl Rng,
    max_len: usize,
    max_terms: usize,
) -> Element<S> {
    let q = alg.quiver();
    let by_len: Vec<Vec<Path>> = (0..=max_len).map(|k| paths_of_length(q, k)).collect();
    let n = rng.gen_range(1..=max_terms);
    let mut items = Vec::with_capacity(n);
    for _ in 0..n {
        let k = rng.gen_range(0..=max_len);
        let Some(sigma) = by_len[k].choose(rng) else {
            continue;
        };
        let same_end: Vec<&Path> = by_len[k]
            .iter()
            .filter(|p| p.end() == sigma.end())
            .collect();
        let tau = (*same_end.choose(rng).expect("sigma itself qualifies")).clone();
        let c = rng.gen_range(-3i64..=3);
        items.push((
            Monomial::new(sigma.clone(), tau).expect("same range"),
            S::from_i64(c),
        ));
    }
    alg.combination(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::quiver::Quiver;

    type Q = Rational;

    fn corner(q: Quiver) -> CornerData<Q> {
        CornerData::new(&LeavittPathAlgebra::new(q)).unwrap()
    }

    #[test]
    fn rose_with_two_petals() {
        let c = corner(Quiver::rose(2));
        assert_eq!(c.t_plus.to_string(), "x");
        assert_eq!(c.e.to_string(), "1 - y y*");
        assert!(c.verify_axioms(10, 1).passed());
    }

    #[test]
    fn laurent_case_has_unit_corner() {
        let c = corner(Quiver::rose(1));
        assert_eq!(c.e, c.t_plus.algebra().one());
    }

    #[test]
    fn toeplitz() {
        let c = corner(Quiver::toeplitz());
        assert_eq!(c.t_plus.to_string(), "a + b");
        assert_eq!(c.t_minus.to_string(), "a* + b*");
        let alg = c.t_plus.algebra().clone();
        let (img, homogeneous) = c.phi_checked(&alg.vertex(0));
        assert!(homogeneous);
        assert_eq!(img, alg.eval("a a*").unwrap());
        assert_eq!(img.to_string(), "e(1) - b b*");
        assert!(c.verify_axioms(10, 2).passed());
    }

    #[test]
    fn sources_rejected() {
        let q = Quiver::parse("vertices u v\narrow a u v\narrow b v v").unwrap();
        let err = CornerData::<Q>::new(&LeavittPathAlgebra::new(q)).unwrap_err();
        assert_eq!(err, AlgebraError::HasSources(vec!["u".into()]));
    }
}
