//! Finite quivers, the sinks-first vertex ordering, and incidence matrices.
//!
//! Text format, one directive per line, `#` starting a comment:
//!
//! ```text
//! vertices v1 v2
//! arrow a v1 v1
//! arrow b v1 v2
//! ```
//!
//! `vertices` may appear on several lines; declaration order is significant.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: duplicate arrow `{id}`")]
    DuplicateArrow { line: usize, id: String },
    #[error("line {line}: undeclared endpoint `{id}`")]
    UndeclaredEndpoint { line: usize, id: String },
    #[error("line {line}: empty vertex set")]
    EmptyVertexSet { line: usize },
    #[error("quiver has sources: {}", .0.join(", "))]
    HasSources(Vec<String>),
    #[error("reduced incidence matrix: row of sink `{0}` is nonzero")]
    NonzeroSinkRow(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are referenced internally by their index in
/// declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from ids. Fails on duplicate ids or undeclared endpoints (reported
    /// with line 0).
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut b = Builder::default();
        for v in vertices {
            b.vertex(v.into(), 0)?;
        }
        for (id, s, t) in arrows {
            b.arrow(id, s, t, 0);
        }
        b.finish(0)
    }

    /// One vertex `w` with petals `x1..xN`; for `N = 2` the petals are named `x`, `y`.
    pub fn rose(petals: usize) -> Self {
        let names: Vec<String> = match petals {
            2 => vec!["x".into(), "y".into()],
            _ => (1..=petals).map(|i| format!("x{i}")).collect(),
        };
        let arrows = names
            .into_iter()
            .map(|a| (a, "w".to_string(), "w".to_string()));
        Quiver::new(["w"], arrows).expect("rose is well formed")
    }

    /// The Jacobson quiver for `J_n`: vertices `1, 2`, `n+1` loops at `1` and `n+1` arrows `1 -> 2`.
    pub fn jacobson(n: usize) -> Self {
        let loops = (1..=n + 1).map(|i| (format!("a{i}"), "1".to_string(), "1".to_string()));
        let edges = (1..=n + 1).map(|i| (format!("b{i}"), "1".to_string(), "2".to_string()));
        Quiver::new(["1", "2"], loops.chain(edges)).expect("jacobson quiver is well formed")
    }

    /// The Toeplitz quiver (`J_0`): loop `a` at `1` and one arrow `b: 1 -> 2`.
    pub fn toeplitz() -> Self {
        let arrows = [("a", "1", "1"), ("b", "1", "2")]
            .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()));
        Quiver::new(["1", "2"], arrows).expect("toeplitz quiver is well formed")
    }

    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let mut b = Builder::default();
        let mut last_line = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = content.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            match head {
                "vertices" => {
                    let ids: Vec<&str> = tokens.collect();
                    if ids.is_empty() {
                        return Err(QuiverError::Syntax {
                            line,
                            message: "`vertices` needs at least one id".into(),
                        });
                    }
                    for id in ids {
                        b.vertex(id.to_string(), line)?;
                    }
                }
                "arrow" => {
                    let parts: Vec<&str> = tokens.collect();
                    let [id, s, t] = parts[..] else {
                        return Err(QuiverError::Syntax {
                            line,
                            message: format!(
                                "`arrow` takes <id> <source> <target>, got {} tokens",
                                parts.len()
                            ),
                        });
                    };
                    b.arrow(id.to_string(), s.to_string(), t.to_string(), line);
                }
                other => {
                    return Err(QuiverError::Syntax {
                        line,
                        message: format!("unknown directive `{other}`"),
                    });
                }
            }
        }
        b.finish(last_line)
    }

    /// Canonical text form; `Quiver::parse(&q.render()) == Ok(q)`.
    pub fn render(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertices.join(" "));
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.id, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        out
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    /// Arrow indices with the given source, in declaration order.
    pub fn outgoing(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == vertex)
            .map(|(i, _)| i)
    }

    pub fn incoming(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == vertex)
            .map(|(i, _)| i)
    }

    pub fn is_sink(&self, vertex: usize) -> bool {
        self.outgoing(vertex).next().is_none()
    }

    pub fn is_source(&self, vertex: usize) -> bool {
        self.incoming(vertex).next().is_none()
    }

    pub fn num_sinks(&self) -> usize {
        (0..self.num_vertices())
            .filter(|&v| self.is_sink(v))
            .count()
    }

    /// Vertices without incoming arrows, in declaration order.
    pub fn sources(&self) -> Vec<String> {
        (0..self.num_vertices())
            .filter(|&v| self.is_source(v))
            .map(|v| self.vertices[v].clone())
            .collect()
    }

    /// `(true, [])` iff every vertex has an incoming arrow; otherwise lists the offenders.
    pub fn check_no_sources(&self) -> (bool, Vec<String>) {
        let offenders = self.sources();
        (offenders.is_empty(), offenders)
    }

    /// Fails with [`QuiverError::HasSources`] if some vertex has no incoming arrow.
    pub fn require_no_sources(&self) -> Result<(), QuiverError> {
        match self.check_no_sources() {
            (true, _) => Ok(()),
            (false, offenders) => Err(QuiverError::HasSources(offenders)),
        }
    }

    /// Stable partition of the vertices with sinks first.
    pub fn order_sinks_first(&self) -> OrderedQuiver {
        let (sinks, others): (Vec<usize>, Vec<usize>) =
            (0..self.num_vertices()).partition(|&v| self.is_sink(v));
        let num_sinks = sinks.len();
        let order: Vec<usize> = sinks.into_iter().chain(others).collect();
        let mut position = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let vertices = order.iter().map(|&v| self.vertices[v].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                source: position[a.source],
                target: position[a.target],
            })
            .collect();
        let quiver = Quiver::from_parts(vertices, arrows);
        OrderedQuiver { quiver, num_sinks }
    }

    fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let arrow_index = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), i))
            .collect();
        Quiver {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
        }
    }

    /// Same quiver with vertex and arrow ids renamed; structure is untouched.
    pub fn relabel(
        &self,
        vertex_name: impl Fn(&str) -> String,
        arrow_name: impl Fn(&str) -> String,
    ) -> Self {
        let vertices = self.vertices.iter().map(|v| vertex_name(v)).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: arrow_name(&a.id),
                source: a.source,
                target: a.target,
            })
            .collect();
        Quiver::from_parts(vertices, arrows)
    }

    /// `(i, j)` entry = number of arrows from vertex `i` to vertex `j` (declaration order).
    pub fn incidence_matrix(&self) -> IntMatrix {
        let n = self.num_vertices();
        let mut m = IntMatrix::zeros(n, n);
        for a in &self.arrows {
            let v = m.get(a.source, a.target) + BigInt::one();
            m.set(a.source, a.target, v);
        }
        m
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Default)]
struct Builder {
    vertices: Vec<String>,
    vertex_index: BTreeMap<String, usize>,
    pending: Vec<(String, String, String, usize)>,
}

impl Builder {
    fn vertex(&mut self, id: String, line: usize) -> Result<(), QuiverError> {
        if self.vertex_index.contains_key(&id) {
            return Err(QuiverError::DuplicateVertex { line, id });
        }
        self.vertex_index.insert(id.clone(), self.vertices.len());
        self.vertices.push(id);
        Ok(())
    }

    fn arrow(&mut self, id: String, source: String, target: String, line: usize) {
        self.pending.push((id, source, target, line));
    }

    fn finish(self, last_line: usize) -> Result<Quiver, QuiverError> {
        let mut arrows = Vec::with_capacity(self.pending.len());
        let mut seen = BTreeMap::new();
        for (id, s, t, line) in self.pending {
            if seen.insert(id.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow { line, id });
            }
            let lookup = |v: &String| {
                self.vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| QuiverError::UndeclaredEndpoint {
                        line,
                        id: v.clone(),
                    })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            arrows.push(Arrow { id, source, target });
        }
        if self.vertices.is_empty() {
            return Err(QuiverError::EmptyVertexSet { line: last_line });
        }
        Ok(Quiver::from_parts(self.vertices, arrows))
    }
}

/// A quiver whose vertex list is stably partitioned so that the sinks come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedQuiver {
    quiver: Quiver,
    num_sinks: usize,
}

impl OrderedQuiver {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// `v`, the number of vertices.
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// `v'`, the number of sinks; vertices `0..v'` are exactly the sinks.
    pub fn num_sinks(&self) -> usize {
        self.num_sinks
    }

    pub fn num_non_sinks(&self) -> usize {
        self.num_vertices() - self.num_sinks
    }

    pub fn is_sink(&self, vertex: usize) -> bool {
        vertex < self.num_sinks
    }

    pub fn vertex_ids(&self) -> &[String] {
        self.quiver.vertices()
    }

    pub fn require_no_sources(&self) -> Result<(), QuiverError> {
        self.quiver.require_no_sources()
    }

    /// The `v x v` incidence matrix `I'_Q` in sinks-first order; sink rows are zero.
    pub fn incidence_matrix(&self) -> IntMatrix {
        self.quiver.incidence_matrix()
    }

    /// `I_Q`: the incidence matrix with the (zero) sink rows removed, `(v - v') x v`.
    pub fn reduced_incidence(&self) -> Result<IntMatrix, QuiverError> {
        let full = self.incidence_matrix();
        if let Some(s) = (0..self.num_sinks).find(|&i| !full.is_row_zero(i)) {
            return Err(QuiverError::NonzeroSinkRow(self.vertex_ids()[s].clone()));
        }
        Ok(full.drop_leading_rows(self.num_sinks))
    }

    /// Entry `(i, j)` counts paths of length `len` from vertex `i` to vertex `j`.
    pub fn path_count_matrix(&self, len: u32) -> IntMatrix {
        self.incidence_matrix().pow(len)
    }
}
