//! Word rewriting for raw expressions in the generators `e_v`, `α`, `α*`.
//!
//! Rules on adjacent letters `X Y`:
//!
//! * `X Y -> 0` when the right vertex of `X` differs from the left vertex of `Y`;
//! * `e_v Y -> Y`, `X e_v -> X`;
//! * `α* β -> δ_{αβ} e_{r(α)}`;
//! * `γ γ* -> e_v - Σ_{s(α)=v, α≠γ} α α*` for the special arrow `γ` at `v`.
//!
//! Every rule shortens the word or replaces a special junction by non-special ones, so
//! reduction terminates; the resulting normal words are exactly the basis monomials.
//! The redex is chosen by a [`Strategy`], which lets tests compare reduction orders.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{element, AlgebraError, Element, LeavittPathAlgebra, Monomial, Path, Scalar};

const STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Vertex(usize),
    Arrow(usize),
    Ghost(usize),
}

/// `coefficient * letters`; an empty word stands for the unit `Σ_v e_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct RawTerm<S> {
    pub coefficient: S,
    pub letters: Vec<Letter>,
}

/// Which redex to contract first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly random redex, reproducible from the seed.
    Random(u64),
}

enum Step<S> {
    Zero,
    Replace(Vec<(S, Vec<Letter>)>),
}

impl LeavittPathAlgebra {
    fn left_vertex(&self, l: Letter) -> usize {
        match l {
            Letter::Vertex(v) => v,
            Letter::Arrow(a) => self.quiver().arrow(a).source,
            Letter::Ghost(a) => self.quiver().arrow(a).target,
        }
    }

    fn right_vertex(&self, l: Letter) -> usize {
        match l {
            Letter::Vertex(v) => v,
            Letter::Arrow(a) => self.quiver().arrow(a).target,
            Letter::Ghost(a) => self.quiver().arrow(a).source,
        }
    }

    /// The rewrite for the pair at `i, i + 1`, if it is a redex.
    fn redex_at<S: Scalar>(&self, w: &[Letter], i: usize) -> Option<Step<S>> {
        let (x, y) = (w[i], w[i + 1]);
        let splice = |mid: Vec<Letter>| -> Vec<Letter> {
            let mut out = w[..i].to_vec();
            out.extend(mid);
            out.extend_from_slice(&w[i + 2..]);
            out
        };
        if self.right_vertex(x) != self.left_vertex(y) {
            return Some(Step::Zero);
        }
        match (x, y) {
            (Letter::Vertex(_), _) => Some(Step::Replace(vec![(S::one(), splice(vec![y]))])),
            (_, Letter::Vertex(_)) => Some(Step::Replace(vec![(S::one(), splice(vec![x]))])),
            (Letter::Ghost(a), Letter::Arrow(b)) => {
                if a == b {
                    let v = self.quiver().arrow(a).target;
                    Some(Step::Replace(vec![(
                        S::one(),
                        splice(vec![Letter::Vertex(v)]),
                    )]))
                } else {
                    Some(Step::Zero)
                }
            }
            (Letter::Arrow(g), Letter::Ghost(h)) if g == h && self.is_special(g) => {
                let v = self.quiver().arrow(g).source;
                let mut out = vec![(S::one(), splice(vec![Letter::Vertex(v)]))];
                for a in self.quiver().outgoing(v).filter(|&a| a != g) {
                    out.push((-S::one(), splice(vec![Letter::Arrow(a), Letter::Ghost(a)])));
                }
                Some(Step::Replace(out))
            }
            _ => None,
        }
    }

    fn redexes(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len().saturating_sub(1))
            .filter(|&i| self.redex_at::<super::Rational>(w, i).is_some())
            .collect()
    }

    /// Normal word -> basis monomial.
    fn word_to_monomial(&self, w: &[Letter]) -> Monomial {
        if let [Letter::Vertex(v)] = w {
            return Monomial::vertex(*v);
        }
        let q = self.quiver();
        let split = w
            .iter()
            .position(|l| matches!(l, Letter::Ghost(_)))
            .unwrap_or(w.len());
        let arrows: Vec<usize> = w[..split]
            .iter()
            .map(|l| match l {
                Letter::Arrow(a) => *a,
                _ => unreachable!("normal word"),
            })
            .collect();
        let ghosts: Vec<usize> = w[split..]
            .iter()
            .rev()
            .map(|l| match l {
                Letter::Ghost(a) => *a,
                _ => unreachable!("normal word"),
            })
            .collect();
        let sigma = Path::from_arrows(q, arrows);
        let tau = Path::from_arrows(q, ghosts);
        let (sigma, tau) = match (sigma, tau) {
            (Some(s), Some(t)) => (s, t),
            (Some(s), None) => {
                let e = Path::empty(s.end());
                (s, e)
            }
            (None, Some(t)) => (Path::empty(t.end()), t),
            (None, None) => unreachable!("nonempty word"),
        };
        Monomial::new(sigma, tau).expect("normal word has matching ranges")
    }

    /// Reduces a linear combination of raw words to normal form with the given strategy.
    pub fn reduce_words<S: Scalar>(
        &self,
        terms: &[RawTerm<S>],
        strategy: Strategy,
    ) -> Result<Element<S>, AlgebraError> {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut stack: Vec<(S, Vec<Letter>)> = Vec::new();
        for t in terms {
            if t.coefficient.is_zero() {
                continue;
            }
            if t.letters.is_empty() {
                for v in 0..self.quiver().num_vertices() {
                    stack.push((t.coefficient.clone(), vec![Letter::Vertex(v)]));
                }
            } else {
                stack.push((t.coefficient.clone(), t.letters.clone()));
            }
        }
        let mut out = BTreeMap::new();
        let mut steps = 0;
        while let Some((c, w)) = stack.pop() {
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(AlgebraError::RewriteLimit(STEP_LIMIT));
            }
            let positions = self.redexes(&w);
            let Some(&first) = positions.first() else {
                element::accumulate(&mut out, self.word_to_monomial(&w), c);
                continue;
            };
            let i = match (strategy, rng.as_mut()) {
                (Strategy::Leftmost, _) => first,
                (Strategy::Rightmost, _) => *positions.last().expect("nonempty"),
                (Strategy::Random(_), Some(r)) => positions[r.gen_range(0..positions.len())],
                (Strategy::Random(_), None) => unreachable!("rng seeded"),
            };
            match self.redex_at::<S>(&w, i).expect("position is a redex") {
                Step::Zero => {}
                Step::Replace(parts) => {
                    for (k, word) in parts {
                        stack.push((c.clone() * k, word));
                    }
                }
            }
        }
        Ok(Element::from_terms(self.clone(), out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::quiver::Quiver;

    type Q = Rational;

    fn term(letters: Vec<Letter>) -> RawTerm<Q> {
        RawTerm {
            coefficient: Q::from_i64(1),
            letters,
        }
    }

    #[test]
    fn single_ck2_step() {
        // vertex v with arrows g (special), a, b
        let q = Quiver::parse("vertices v w\narrow g v w\narrow h v w\narrow k v w\narrow l w v")
            .unwrap();
        let alg = LeavittPathAlgebra::new(q);
        let g = alg.quiver().arrow_index("g").unwrap();
        let got = alg
            .reduce_words(
                &[term(vec![Letter::Arrow(g), Letter::Ghost(g)])],
                Strategy::Leftmost,
            )
            .unwrap();
        assert_eq!(got.to_string(), "e(v) - h h* - k k*");
    }

    #[test]
    fn orthogonality_and_unit() {
        let alg = LeavittPathAlgebra::new(Quiver::toeplitz());
        let z = alg
            .reduce_words(
                &[term(vec![Letter::Vertex(0), Letter::Vertex(1)])],
                Strategy::Rightmost,
            )
            .unwrap();
        assert!(z.is_zero());
        let one = alg
            .reduce_words(&[term(vec![])], Strategy::Leftmost)
            .unwrap();
        assert_eq!(one, alg.one());
    }

    #[test]
    fn strategies_agree_on_nested_word() {
        let alg = LeavittPathAlgebra::new(Quiver::rose(2));
        let x = alg.quiver().arrow_index("x").unwrap();
        let y = alg.quiver().arrow_index("y").unwrap();
        let w = vec![
            Letter::Arrow(x),
            Letter::Arrow(x),
            Letter::Ghost(x),
            Letter::Ghost(x),
            Letter::Ghost(y),
            Letter::Arrow(y),
        ];
        let a = alg
            .reduce_words(&[term(w.clone())], Strategy::Leftmost)
            .unwrap();
        let b = alg
            .reduce_words(&[term(w.clone())], Strategy::Rightmost)
            .unwrap();
        let c = alg.reduce_words(&[term(w)], Strategy::Random(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "1 - y y* - x y y* x*");
    }
}
