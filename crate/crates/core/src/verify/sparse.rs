//! Orderings that make Gram–Schmidt output sparse.

use crate::error::{FrameError, Result};
use crate::frames::Frame;
use crate::numerics::{gram_schmidt, inner, norm, orthogonalize, ToleranceConfig, Vector};

/// Largest `K` accepted by [`SearchMode::Exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Branch and bound over all `K!` orderings.
    Exhaustive,
    /// Take the vector whose orthonormalized residual is sparsest next;
    /// ties go to the lowest index.
    Greedy,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsityResult {
    /// 0-based input indices in the order they are orthonormalized.
    pub ordering: Vec<usize>,
    /// `Σ ‖e_i‖_0` measured in the reference basis.
    pub total_nonzeros: usize,
    /// Gram–Schmidt output for `ordering`.
    pub basis: Vec<Vector>,
}

/// Coordinates of `v` in `reference` that exceed `eq_tol * ‖v‖` in modulus.
fn nonzeros(v: &[crate::numerics::C64], reference: &[Vector], tol: &ToleranceConfig) -> usize {
    let threshold = tol.eq_tol * norm(v);
    reference.iter().filter(|g| inner(v, g).norm() > threshold).count()
}

fn next_vector(v: &Vector, basis: &[Vector], tol: &ToleranceConfig) -> Option<Vector> {
    let mut r = v.clone();
    orthogonalize(&mut r, basis);
    let rn = norm(&r);
    (rn > tol.rank_tol * norm(v) && rn > 0.0).then(|| r.into_iter().map(|z| z / rn).collect())
}

struct Search<'a> {
    vectors: &'a [Vector],
    reference: &'a [Vector],
    tol: &'a ToleranceConfig,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, basis: &mut Vec<Vector>, order: &mut Vec<usize>, count: usize) {
        let k = self.vectors.len();
        if order.len() == k {
            if self.best.as_ref().is_none_or(|(b, _)| count < *b) {
                self.best = Some((count, order.clone()));
            }
            return;
        }
        // Every remaining vector contributes at least one nonzero.
        if let Some((b, _)) = &self.best {
            if count + (k - order.len()) >= *b {
                return;
            }
        }
        for i in 0..k {
            if order.contains(&i) {
                continue;
            }
            let Some(e) = next_vector(&self.vectors[i], basis, self.tol) else { continue };
            let c = nonzeros(&e, self.reference, self.tol);
            basis.push(e);
            order.push(i);
            self.descend(basis, order, count + c);
            order.pop();
            basis.pop();
        }
    }
}

fn greedy(vectors: &[Vector], reference: &[Vector], tol: &ToleranceConfig) -> Vec<usize> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut order = Vec::new();
    while order.len() < vectors.len() {
        let pick = (0..vectors.len())
            .filter(|i| !order.contains(i))
            .filter_map(|i| next_vector(&vectors[i], &basis, tol).map(|e| (nonzeros(&e, reference, tol), i, e)))
            .min_by_key(|(c, i, _)| (*c, *i));
        let Some((_, i, e)) = pick else { break };
        basis.push(e);
        order.push(i);
    }
    order
}

fn check_reference(reference: &[Vector], dim: usize, tol: &ToleranceConfig) -> Result<()> {
    if reference.len() != dim {
        return Err(FrameError::DimMismatch { expected: dim, found: reference.len() });
    }
    if let Some(g) = reference.iter().find(|g| g.len() != dim) {
        return Err(FrameError::DimMismatch { expected: dim, found: g.len() });
    }
    let mut deviation = 0.0f64;
    for (i, a) in reference.iter().enumerate() {
        for (j, b) in reference.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            deviation = deviation.max((inner(a, b) - want).norm());
        }
    }
    if deviation > tol.eq_tol {
        return Err(FrameError::NotOrthonormalInput { deviation });
    }
    Ok(())
}

/// Searches for the ordering of the (independent) frame vectors whose
/// Gram–Schmidt output has the fewest nonzero coordinates in the
/// orthonormal `reference` basis.
pub fn sparse_gs_search(
    f: &Frame,
    reference: &[Vector],
    mode: SearchMode,
    tol: &ToleranceConfig,
) -> Result<SparsityResult> {
    check_reference(reference, f.dim(), tol)?;
    gram_schmidt(f.vectors(), tol)?;
    let k = f.len();
    let ordering = match mode {
        SearchMode::Exhaustive => {
            if k > EXHAUSTIVE_LIMIT {
                return Err(FrameError::TooManyPermutations { count: k, limit: EXHAUSTIVE_LIMIT });
            }
            let mut search = Search { vectors: f.vectors(), reference, tol, best: None };
            search.descend(&mut Vec::new(), &mut Vec::new(), 0);
            search.best.map(|(_, o)| o).unwrap_or_else(|| (0..k).collect())
        }
        SearchMode::Greedy => greedy(f.vectors(), reference, tol),
    };
    if ordering.len() != k {
        return Err(FrameError::DependentInput { index: k - 1 });
    }
    let basis = gram_schmidt(f.permuted(&ordering).vectors(), tol)?;
    let total_nonzeros = basis.iter().map(|e| nonzeros(e, reference, tol)).sum();
    Ok(SparsityResult { ordering, total_nonzeros, basis })
}
