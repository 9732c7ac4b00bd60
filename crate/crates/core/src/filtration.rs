//! The length filtration `L_{0,0} ⊂ L_{0,1} ⊂ …` of the degree-zero part of `L_Q`.
//!
//! `L_{0,n}` is spanned by the monomials `σ τ*` with `r(σ) = r(τ)`, `|σ| = |τ| = m ≤ n`, where
//! `m < n` is only allowed when the common range is a sink (such monomials cannot be
//! lengthened by the CK2 relation). It is a product of matrix algebras, one block for every
//! label `(m, w)`: a sink `w` at a level `m ≤ n`, or a non-sink `w` at level `n`. The block
//! `(m, w)` has size `p(m, w)`, the number of paths of length `m` ending at `w`.
//!
//! Blocks of level `n` are ordered as `(0, sinks), (1, sinks), …, (n, sinks), (n, non-sinks)`,
//! with vertices in sinks-first order, so that the `K₀` matrices of the inclusion and of the
//! corner map take the block forms `diag(id, I_Q^t)` and `(0; id)`.
//!
//! Everything here is computed through the symbolic engine: idempotents are multiplied out,
//! rewritten in level-`(n + 1)` matrix units and their traces read off per block.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    paths_of_length, AlgebraError, CornerData, Element, LeavittPathAlgebra, Monomial, Path,
    Rational,
};
use crate::ktheory::{leavitt_matrix, KTheoryError};
use crate::linalg::{cokernel_int, kernel_rank_int, IntMatrix};
use crate::quiver::{OrderedQuiver, QuiverError};

/// Upper bound on the size of the spanning set handled by [`filtration_span_dim`].
pub const DEFAULT_SPAN_LIMIT: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiltrationError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    KTheory(#[from] KTheoryError),
    #[error("spanning set of level {level} has more than {limit} monomials")]
    TooLarge { level: usize, limit: usize },
    #[error("image of block {block} does not lie in the next filtration level: {detail}")]
    OutsideLevel { block: String, detail: String },
    #[error("trace {trace} of the image of block {block} is not a non-negative integer")]
    NonIntegralTrace { block: String, trace: String },
}

/// A block label `(m, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub level: usize,
    pub vertex: usize,
}

impl Block {
    pub fn render(&self, q: &OrderedQuiver) -> String {
        format!("({},{})", self.level, q.vertex_ids()[self.vertex])
    }
}

/// Block labels of `L_{0,n}` in canonical order.
pub fn blocks(q: &OrderedQuiver, n: usize) -> Vec<Block> {
    let vs = q.num_sinks();
    let mut out: Vec<Block> = (0..=n)
        .flat_map(|m| {
            (0..vs).map(move |w| Block {
                level: m,
                vertex: w,
            })
        })
        .collect();
    out.extend((vs..q.num_vertices()).map(|w| Block {
        level: n,
        vertex: w,
    }));
    out
}

fn block_index(q: &OrderedQuiver, n: usize, b: Block) -> usize {
    let vs = q.num_sinks();
    if q.is_sink(b.vertex) {
        b.level * vs + b.vertex
    } else {
        (n + 1) * vs + b.vertex - vs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub level: usize,
    /// Labels with their sizes `p(m, w)`.
    pub blocks: Vec<(Block, usize)>,
}

impl BlockProfile {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `Σ p(m, w)²`, the dimension of the product of matrix algebras.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|(_, s)| s * s).sum()
    }
}

/// `(n + 1) v' + (v - v')`.
pub fn expected_block_count(q: &OrderedQuiver, n: usize) -> usize {
    (n + 1) * q.num_sinks() + q.num_non_sinks()
}

pub fn block_profile(q: &OrderedQuiver, n: usize) -> Result<BlockProfile, FiltrationError> {
    q.require_no_sources()?;
    let mut counts: BTreeMap<usize, IntMatrix> = BTreeMap::new();
    let blocks = blocks(q, n)
        .into_iter()
        .map(|b| {
            let pc = counts
                .entry(b.level)
                .or_insert_with(|| q.path_count_matrix(b.level as u32));
            let size: BigInt = (0..q.num_vertices())
                .map(|i| pc.get(i, b.vertex).clone())
                .sum();
            (b, usize::try_from(size).expect("block size fits in usize"))
        })
        .collect();
    Ok(BlockProfile { level: n, blocks })
}

fn algebra_of(q: &OrderedQuiver) -> Result<LeavittPathAlgebra, FiltrationError> {
    q.require_no_sources()?;
    Ok(LeavittPathAlgebra::new(q.quiver().clone()))
}

/// Dimension of `L_{0,n}` computed as the rank of the normalized spanning monomials.
pub fn filtration_span_dim(
    q: &OrderedQuiver,
    n: usize,
    limit: usize,
) -> Result<usize, FiltrationError> {
    let alg = algebra_of(q)?;
    let quiver = q.quiver();
    let mut spanning = Vec::new();
    for m in 0..=n {
        let mut by_end: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
        for p in paths_of_length(quiver, m) {
            if m == n || q.is_sink(p.end()) {
                by_end.entry(p.end()).or_default().push(p);
            }
        }
        for ps in by_end.values() {
            if spanning.len() + ps.len() * ps.len() > limit {
                return Err(FiltrationError::TooLarge { level: n, limit });
            }
            for s in ps {
                for t in ps {
                    spanning.push(Monomial::new(s.clone(), t.clone()).expect("same range"));
                }
            }
        }
    }
    let mut basis = EchelonBasis::default();
    for m in spanning {
        basis.insert(alg.monomial::<Rational>(m));
    }
    Ok(basis.rank())
}

/// Incremental row echelon form over `ℚ`, pivoting on the largest monomial of each vector.
#[derive(Default)]
struct EchelonBasis {
    pivots: BTreeMap<Monomial, BTreeMap<Monomial, Rational>>,
}

impl EchelonBasis {
    fn insert(&mut self, e: Element<Rational>) {
        let mut v: BTreeMap<Monomial, Rational> =
            e.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((lead, c)) = v.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(row) = self.pivots.get(&lead) else {
                let inv = Rational::one() / c;
                let normalized = v.into_iter().map(|(m, x)| (m, x * inv.clone())).collect();
                self.pivots.insert(lead, normalized);
                return;
            };
            for (m, x) in row {
                let entry = v.entry(m.clone()).or_insert_with(Rational::zero);
                *entry = entry.clone() - c.clone() * x.clone();
                if entry.is_zero() {
                    v.remove(m);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Minimal idempotent `σσ*` of block `(m, w)`, with `σ` the smallest length-`m` path ending at `w`.
fn minimal_idempotent(alg: &LeavittPathAlgebra, b: Block) -> Element<Rational> {
    let sigma = paths_of_length(alg.quiver(), b.level)
        .into_iter()
        .find(|p| p.end() == b.vertex)
        .expect("quivers without sources have paths of every length into every vertex");
    alg.monomial(Monomial::new(sigma.clone(), sigma).expect("same range"))
}

/// Writes a degree-zero element of `L_{0,n+1}` in level-`(n + 1)` matrix units and returns
/// the trace of each block, indexed like [`blocks`]`(q, n + 1)`.
fn block_traces(
    q: &OrderedQuiver,
    n: usize,
    x: &Element<Rational>,
    label: &str,
) -> Result<Vec<Rational>, FiltrationError> {
    let quiver = q.quiver();
    let top = n + 1;
    let mut traces = vec![Rational::zero(); expected_block_count(q, top)];
    let mut stack: Vec<(Path, Path, Rational)> = x
        .terms()
        .map(|(m, c)| (m.sigma().clone(), m.tau().clone(), c.clone()))
        .collect();
    while let Some((s, t, c)) = stack.pop() {
        let outside = |detail: String| FiltrationError::OutsideLevel {
            block: label.to_string(),
            detail,
        };
        if s.len() != t.len() {
            return Err(outside(format!(
                "term of degree {}",
                s.len() as i64 - t.len() as i64
            )));
        }
        let k = s.len();
        let r = s.end();
        if k > top {
            return Err(outside(format!("term of length {k}")));
        }
        if !q.is_sink(r) && k < top {
            for a in quiver.outgoing(r) {
                stack.push((s.push(quiver, a), t.push(quiver, a), c.clone()));
            }
            continue;
        }
        if s == t {
            let idx = block_index(
                q,
                top,
                Block {
                    level: k,
                    vertex: r,
                },
            );
            traces[idx] = traces[idx].clone() + c;
        }
    }
    Ok(traces)
}

fn traces_to_column(traces: Vec<Rational>, label: &str) -> Result<Vec<BigInt>, FiltrationError> {
    traces
        .into_iter()
        .map(|t| {
            if t.is_integer() && !t.is_negative() {
                Ok(t.to_integer())
            } else {
                Err(FiltrationError::NonIntegralTrace {
                    block: label.to_string(),
                    trace: t.to_string(),
                })
            }
        })
        .collect()
}

fn k0_matrix(
    q: &OrderedQuiver,
    n: usize,
    image: impl Fn(&Element<Rational>) -> Element<Rational>,
) -> Result<IntMatrix, FiltrationError> {
    let alg = algebra_of(q)?;
    let source = blocks(q, n);
    let rows = expected_block_count(q, n + 1);
    let mut out = IntMatrix::zeros(rows, source.len());
    for (j, b) in source.iter().enumerate() {
        let label = b.render(q);
        let x = image(&minimal_idempotent(&alg, *b));
        let column = traces_to_column(block_traces(q, n, &x, &label)?, &label)?;
        for (i, v) in column.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// `K₀` of the inclusion `L_{0,n} ⊂ L_{0,n+1}`, from the multiplicities of minimal idempotents.
pub fn inclusion_k0_matrix(q: &OrderedQuiver, n: usize) -> Result<IntMatrix, FiltrationError> {
    k0_matrix(q, n, |u| u.clone())
}

/// `K₀` of the corner map `u ↦ t₊ u t₋` from `L_{0,n}` to `L_{0,n+1}`.
pub fn phi_k0_matrix(q: &OrderedQuiver, n: usize) -> Result<IntMatrix, FiltrationError> {
    let corner = CornerData::<Rational>::new(&algebra_of(q)?)?;
    k0_matrix(q, n, |u| corner.phi(u))
}

/// `diag(id_{(n+1)v'}, I_Q^t)`, built directly from the incidence data.
pub fn expected_inclusion_matrix(
    q: &OrderedQuiver,
    n: usize,
) -> Result<IntMatrix, FiltrationError> {
    let reduced_t = q.reduced_incidence()?.transpose();
    Ok(IntMatrix::identity((n + 1) * q.num_sinks()).direct_sum(&reduced_t))
}

/// `(0; id)` with `v'` zero rows, the block form of the corner map.
pub fn expected_phi_matrix(q: &OrderedQuiver, n: usize) -> IntMatrix {
    IntMatrix::bottom_identity(expected_block_count(q, n + 1), expected_block_count(q, n))
}

/// Compares `φ - ι` at level `n` with the Leavitt matrix `(0; id) - I_Q^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub difference: IntMatrix,
    /// The top-level rows and non-sink columns of the difference equal the Leavitt matrix.
    pub block_matches: bool,
    /// Integral cokernels agree.
    pub cokernel_matches: bool,
    /// Integral kernel ranks agree.
    pub kernel_matches: bool,
}

impl Stabilization {
    pub fn holds(&self) -> bool {
        self.block_matches && self.cokernel_matches && self.kernel_matches
    }
}

pub fn stabilization_check(
    q: &OrderedQuiver,
    n: usize,
    phi: &IntMatrix,
    inclusion: &IntMatrix,
) -> Result<Stabilization, FiltrationError> {
    let leavitt = leavitt_matrix(q)?;
    let difference = phi - inclusion;
    let vs = q.num_sinks();
    let rows: Vec<usize> = ((n + 1) * vs..difference.rows()).collect();
    let cols: Vec<usize> = ((n + 1) * vs..difference.cols()).collect();
    let block_matches = difference.submatrix(&rows, &cols) == leavitt;
    let cokernel_matches = cokernel_int(&difference) == cokernel_int(&leavitt);
    let kernel_matches = kernel_rank_int(&difference) == kernel_rank_int(&leavitt);
    Ok(Stabilization {
        difference,
        block_matches,
        cokernel_matches,
        kernel_matches,
    })
}

/// All filtration checks at one level.
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub quiver: OrderedQuiver,
    pub profile: BlockProfile,
    pub span_dim: usize,
    pub inclusion: IntMatrix,
    pub inclusion_expected: IntMatrix,
    pub phi: IntMatrix,
    pub phi_expected: IntMatrix,
    pub stabilization: Stabilization,
}

impl FiltrationReport {
    pub fn dimension_matches(&self) -> bool {
        self.span_dim == self.profile.dimension()
    }

    pub fn block_count_matches(&self) -> bool {
        self.profile.num_blocks() == expected_block_count(&self.quiver, self.profile.level)
    }

    pub fn inclusion_matches(&self) -> bool {
        self.inclusion == self.inclusion_expected
    }

    pub fn phi_matches(&self) -> bool {
        self.phi == self.phi_expected
    }

    pub fn all_verified(&self) -> bool {
        self.dimension_matches()
            && self.block_count_matches()
            && self.inclusion_matches()
            && self.phi_matches()
            && self.stabilization.holds()
    }
}

pub fn filtration_report(q: &OrderedQuiver, n: usize) -> Result<FiltrationReport, FiltrationError> {
    let profile = block_profile(q, n)?;
    let span_dim = filtration_span_dim(q, n, DEFAULT_SPAN_LIMIT)?;
    let inclusion = inclusion_k0_matrix(q, n)?;
    let phi = phi_k0_matrix(q, n)?;
    let stabilization = stabilization_check(q, n, &phi, &inclusion)?;
    Ok(FiltrationReport {
        quiver: q.clone(),
        profile,
        span_dim,
        inclusion_expected: expected_inclusion_matrix(q, n)?,
        phi_expected: expected_phi_matrix(q, n),
        inclusion,
        phi,
        stabilization,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "MISMATCH"
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.profile.level;
        writeln!(
            f,
            "level {n}: {} blocks (expected {})",
            self.profile.num_blocks(),
            expected_block_count(&self.quiver, n)
        )?;
        for (b, size) in &self.profile.blocks {
            writeln!(f, "  block {} size {size}", b.render(&self.quiver))?;
        }
        writeln!(
            f,
            "dimension: sum of squares {} = symbolic {} ({})",
            self.profile.dimension(),
            self.span_dim,
            verdict(self.dimension_matches())
        )?;
        writeln!(
            f,
            "inclusion K0 matrix: {} ({})",
            self.inclusion,
            verdict(self.inclusion_matches())
        )?;
        writeln!(
            f,
            "corner map K0 matrix: {} ({})",
            self.phi,
            verdict(self.phi_matches())
        )?;
        write!(
            f,
            "difference reduces to the Leavitt matrix: {}",
            verdict(self.stabilization.holds())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn ordered(q: Quiver) -> OrderedQuiver {
        q.order_sinks_first()
    }

    #[test]
    fn toeplitz_profile() {
        let q = ordered(Quiver::toeplitz());
        let p = block_profile(&q, 2).unwrap();
        assert_eq!(p.num_blocks(), 4);
        assert!(p.blocks.iter().all(|(_, s)| *s == 1));
        assert_eq!(p.dimension(), 4);
        assert_eq!(filtration_span_dim(&q, 2, DEFAULT_SPAN_LIMIT).unwrap(), 4);
    }

    #[test]
    fn rose_profile() {
        let q = ordered(Quiver::rose(3));
        let p = block_profile(&q, 1).unwrap();
        assert_eq!(
            p.blocks,
            vec![(
                Block {
                    level: 1,
                    vertex: 0
                },
                3
            )]
        );
        assert_eq!(filtration_span_dim(&q, 1, DEFAULT_SPAN_LIMIT).unwrap(), 9);
        assert_eq!(
            filtration_span_dim(&ordered(Quiver::rose(2)), 1, DEFAULT_SPAN_LIMIT).unwrap(),
            4
        );
    }

    #[test]
    fn level_zero_is_the_vertex_algebra() {
        for q in [Quiver::toeplitz(), Quiver::jacobson(1), Quiver::rose(2)] {
            let q = ordered(q);
            let p = block_profile(&q, 0).unwrap();
            assert_eq!(p.num_blocks(), q.num_vertices());
            assert_eq!(
                filtration_span_dim(&q, 0, DEFAULT_SPAN_LIMIT).unwrap(),
                q.num_vertices()
            );
        }
    }

    #[test]
    fn toeplitz_matrices() {
        let q = ordered(Quiver::toeplitz());
        let incl = inclusion_k0_matrix(&q, 1).unwrap();
        assert_eq!(
            incl,
            IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 1]])
        );
        let phi = phi_k0_matrix(&q, 1).unwrap();
        assert_eq!(phi, IntMatrix::bottom_identity(4, 3));
        // the level-0 sink idempotent lands in the level-1 sink block
        let phi0 = phi_k0_matrix(&q, 0).unwrap();
        assert_eq!(phi0.row(1), [BigInt::one(), BigInt::zero()]);
    }

    #[test]
    fn rose_matrices() {
        let q = ordered(Quiver::rose(4));
        for n in 0..3 {
            assert_eq!(
                inclusion_k0_matrix(&q, n).unwrap(),
                IntMatrix::from_rows(&[[4]])
            );
            assert_eq!(phi_k0_matrix(&q, n).unwrap(), IntMatrix::identity(1));
        }
    }

    #[test]
    fn report_for_jacobson() {
        let r = filtration_report(&ordered(Quiver::jacobson(1)), 2).unwrap();
        assert!(r.all_verified(), "{r}");
    }

    #[test]
    fn sources_rejected() {
        let q = ordered(Quiver::parse("vertices u v\narrow a u v\narrow b v v").unwrap());
        assert!(matches!(
            block_profile(&q, 1),
            Err(FiltrationError::Quiver(QuiverError::HasSources(_)))
        ));
    }
}
