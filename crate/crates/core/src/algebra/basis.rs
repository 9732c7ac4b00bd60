use super::{paths_of_length, AlgebraError, LeavittPathAlgebra, Monomial, Path};
use crate::quiver::Quiver;

pub const DEFAULT_BASIS_LIMIT: usize = 200_000;

/// All normal-form monomials `σ τ*` with `|σ|, |τ| ≤ max_len`, in monomial order.
pub fn enumerate_basis(
    q: &Quiver,
    max_len: usize,
    limit: usize,
) -> Result<Vec<Monomial>, AlgebraError> {
    let alg = LeavittPathAlgebra::new(q.clone());
    let mut by_end: Vec<Vec<Path>> = vec![Vec::new(); q.num_vertices()];
    let mut total = 0usize;
    for k in 0..=max_len {
        let layer = paths_of_length(q, k);
        total = total.saturating_add(layer.len());
        if total > limit {
            return Err(AlgebraError::BasisTooLarge { limit });
        }
        for p in layer {
            by_end[p.end()].push(p);
        }
    }
    let pairs = by_end.iter().fold(0usize, |acc, ps| {
        acc.saturating_add(ps.len().saturating_mul(ps.len()))
    });
    if pairs > limit.saturating_mul(4) {
        return Err(AlgebraError::BasisTooLarge { limit });
    }
    let mut out = Vec::new();
    for ps in &by_end {
        for s in ps {
            for t in ps {
                let m = Monomial::new(s.clone(), t.clone()).expect("same range");
                if alg.is_normal(&m) {
                    out.push(m);
                }
            }
        }
    }
    if out.len() > limit {
        return Err(AlgebraError::BasisTooLarge { limit });
    }
    out.sort();
    Ok(out)
}
