use std::cmp::Ordering;

use crate::quiver::Quiver;

/// A path in the quiver, read left to right: `a1 a2` is composable when `r(a1) = s(a2)`.
/// The empty path at `v` is the idempotent `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn empty(vertex: usize) -> Self {
        Path {
            start: vertex,
            end: vertex,
            arrows: Vec::new(),
        }
    }

    /// `None` if consecutive arrows are not composable.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return None;
            }
        }
        let last = *arrows.last().expect("nonempty");
        Some(Path {
            start: q.arrow(first).source,
            end: q.arrow(last).target,
            arrows,
        })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.arrows.last().copied()
    }

    /// `self` is an initial segment of `other` (same start vertex).
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start && other.arrows.starts_with(&self.arrows)
    }

    /// Drops the first `k` arrows; the result starts where the dropped part ended.
    pub fn suffix_after(&self, q: &Quiver, k: usize) -> Path {
        if k == 0 {
            return self.clone();
        }
        let start = q.arrow(self.arrows[k - 1]).target;
        Path {
            start,
            end: self.end,
            arrows: self.arrows[k..].to_vec(),
        }
    }

    /// Concatenation; the caller guarantees `self.end() == other.start()`.
    pub fn concat(&self, other: &Path) -> Path {
        debug_assert_eq!(self.end, other.start, "concatenating non-composable paths");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path {
            start: self.start,
            end: other.end,
            arrows,
        }
    }

    pub fn push(&self, q: &Quiver, arrow: usize) -> Path {
        debug_assert_eq!(self.end, q.arrow(arrow).source);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            start: self.start,
            end: q.arrow(arrow).target,
            arrows,
        }
    }

    /// Removes the last arrow; `None` for empty paths.
    pub fn pop(&self, q: &Quiver) -> Option<Path> {
        let last = self.last()?;
        let mut arrows = self.arrows.clone();
        arrows.pop();
        Some(Path {
            start: self.start,
            end: q.arrow(last).source,
            arrows,
        })
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_empty() {
            return format!("e({})", q.vertices()[self.start]);
        }
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then(self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths of exactly `len` arrows, ordered by arrow indices.
pub fn paths_of_length(q: &Quiver, len: usize) -> Vec<Path> {
    let mut current: Vec<Path> = (0..q.num_vertices()).map(Path::empty).collect();
    for _ in 0..len {
        current = current
            .iter()
            .flat_map(|p| q.outgoing(p.end()).map(move |a| p.push(q, a)))
            .collect();
    }
    current.sort();
    current
}

/// `σ τ*` with `r(σ) = r(τ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    sigma: Path,
    tau: Path,
}

impl Monomial {
    pub fn new(sigma: Path, tau: Path) -> Option<Self> {
        (sigma.end == tau.end).then_some(Monomial { sigma, tau })
    }

    pub fn vertex(v: usize) -> Self {
        Monomial {
            sigma: Path::empty(v),
            tau: Path::empty(v),
        }
    }

    pub fn sigma(&self) -> &Path {
        &self.sigma
    }

    pub fn tau(&self) -> &Path {
        &self.tau
    }

    pub fn degree(&self) -> i64 {
        self.sigma.len() as i64 - self.tau.len() as i64
    }

    pub fn is_vertex(&self) -> bool {
        self.sigma.is_empty() && self.tau.is_empty()
    }

    pub fn star(&self) -> Monomial {
        Monomial {
            sigma: self.tau.clone(),
            tau: self.sigma.clone(),
        }
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_vertex() {
            return format!("e({})", q.vertices()[self.sigma.start]);
        }
        let mut parts: Vec<String> = self
            .sigma
            .arrows
            .iter()
            .map(|&a| q.arrow(a).id.clone())
            .collect();
        parts.extend(
            self.tau
                .arrows
                .iter()
                .rev()
                .map(|&a| format!("{}*", q.arrow(a).id)),
        );
        parts.join(" ")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let total = |m: &Monomial| m.sigma.len() + m.tau.len();
        total(self)
            .cmp(&total(other))
            .then_with(|| self.sigma.arrows.cmp(&other.sigma.arrows))
            .then_with(|| self.tau.arrows.cmp(&other.tau.arrows))
            .then(self.sigma.end.cmp(&other.sigma.end))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
