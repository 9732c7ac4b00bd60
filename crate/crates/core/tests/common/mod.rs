#![allow(dead_code)]

use leavitt_kmod::algebra::{paths_of_length, Letter, Monomial, Rational, RawTerm, Scalar};
use leavitt_kmod::{Element, LeavittPathAlgebra, Quiver};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random quiver in which every vertex receives an arrow. With `allow_sinks = false`
/// every vertex also emits one.
pub fn random_quiver(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_arrows: usize,
    allow_sinks: bool,
) -> Quiver {
    let v = rng.gen_range(1..=max_vertices);
    let mut arrows: Vec<(usize, usize)> = (0..v).map(|t| (rng.gen_range(0..v), t)).collect();
    if !allow_sinks {
        for s in 0..v {
            if !arrows.iter().any(|&(a, _)| a == s) {
                arrows.push((s, rng.gen_range(0..v)));
            }
        }
    }
    while arrows.len() < max_arrows && rng.gen_bool(0.5) {
        arrows.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    let vertices: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
    let named = arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| (format!("a{k}"), vertices[s].clone(), vertices[t].clone()));
    Quiver::new(vertices.clone(), named).expect("generated quiver is well formed")
}

/// Toeplitz, Jacobson `J_0..J_2` and roses with 1 to 4 petals.
pub fn test_quivers() -> Vec<(String, Quiver)> {
    let mut out = vec![("toeplitz".to_string(), Quiver::toeplitz())];
    for n in 0..=2 {
        out.push((format!("jacobson{n}"), Quiver::jacobson(n)));
    }
    for p in 1..=4 {
        out.push((format!("rose{p}"), Quiver::rose(p)));
    }
    out
}

/// Up to `max_terms` monomials `σ τ*` with `|σ|, |τ| <= max_len` and coefficients in `-3..=3`.
pub fn random_element(
    alg: &LeavittPathAlgebra,
    rng: &mut impl Rng,
    max_len: usize,
    max_terms: usize,
) -> Element<Rational> {
    let q = alg.quiver();
    let paths: Vec<_> = (0..=max_len).flat_map(|k| paths_of_length(q, k)).collect();
    let n = rng.gen_range(1..=max_terms);
    let items: Vec<(Monomial, Rational)> = (0..n)
        .map(|_| {
            let s = paths.choose(rng).unwrap();
            let ends: Vec<_> = paths.iter().filter(|p| p.end() == s.end()).collect();
            let t = (*ends.choose(rng).unwrap()).clone();
            (
                Monomial::new(s.clone(), t).unwrap(),
                Rational::from_i64(rng.gen_range(-3..=3)),
            )
        })
        .collect();
    alg.combination(items)
}

/// A sum of up to three random raw words of length up to `max_len`.
pub fn random_words(
    alg: &LeavittPathAlgebra,
    rng: &mut impl Rng,
    max_len: usize,
) -> Vec<RawTerm<Rational>> {
    let q = alg.quiver();
    let na = q.arrows().len();
    let nv = q.num_vertices();
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let letters = (0..rng.gen_range(0..=max_len))
                .map(|_| match rng.gen_range(0..5) {
                    0 => Letter::Vertex(rng.gen_range(0..nv)),
                    1 | 2 if na > 0 => Letter::Arrow(rng.gen_range(0..na)),
                    _ if na > 0 => Letter::Ghost(rng.gen_range(0..na)),
                    _ => Letter::Vertex(rng.gen_range(0..nv)),
                })
                .collect();
            RawTerm {
                coefficient: Rational::from_i64(rng.gen_range(-2..=2)),
                letters,
            }
        })
        .collect()
}

/// Evaluates raw words by multiplying generators one at a time.
pub fn words_by_multiplication(
    alg: &LeavittPathAlgebra,
    terms: &[RawTerm<Rational>],
) -> Element<Rational> {
    let mut acc = alg.zero();
    for t in terms {
        let mut x = alg.scalar(t.coefficient.clone());
        for l in &t.letters {
            let g = match *l {
                Letter::Vertex(v) => alg.vertex(v),
                Letter::Arrow(a) => alg.arrow(a),
                Letter::Ghost(a) => alg.ghost(a),
            };
            x = &x * &g;
        }
        acc = &acc + &x;
    }
    acc
}
