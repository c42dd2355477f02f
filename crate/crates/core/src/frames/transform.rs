//! Frames pushed through operators: `FΦ`, orthogonal projections, and
//! the Naimark dilation of a Parseval frame.

use super::{parseval_deviation, synthesis_matrix, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{inner, orthonormal_basis, trace, unitary_complete, DenseMatrix, ToleranceConfig, Vector, C64};

/// `{F φ_i}` for a square `N x N` operator `F`. Its frame operator is
/// `F S F*` and its analysis operator is `T F*`.
pub fn apply_operator(f: &Frame, op: &DenseMatrix) -> Result<Frame> {
    if op.rows() != f.dim() || op.cols() != f.dim() {
        let found = if op.rows() != f.dim() { op.rows() } else { op.cols() };
        return Err(FrameError::DimMismatch { expected: f.dim(), found });
    }
    let vectors = f.vectors().iter().map(|v| op.mul_vec(v)).collect();
    Frame::new(f.dim(), vectors, f.field().join(op.field()))
}

/// `{P φ_i}` for the orthogonal projection `P` onto `span(subspace)`,
/// written in coordinates of an orthonormal basis of that span. The
/// output dimension is `dim span(subspace)`.
pub fn project_frame(f: &Frame, subspace: &[Vector], tol: &ToleranceConfig) -> Result<Frame> {
    if let Some(v) = subspace.iter().find(|v| v.len() != f.dim()) {
        return Err(FrameError::DimMismatch { expected: f.dim(), found: v.len() });
    }
    let basis = orthonormal_basis(subspace, tol)?;
    if basis.is_empty() {
        return Err(FrameError::BadParams("subspace is {0}".into()));
    }
    let vectors: Vec<Vector> = f.vectors().iter().map(|phi| basis.iter().map(|u| inner(phi, u)).collect()).collect();
    let field = basis.iter().fold(f.field(), |acc, u| acc.join(crate::numerics::Field::of(u)));
    Frame::new(basis.len(), vectors, field)
}

/// Unitary `M x M` matrix `U` whose first `N` rows are the rows of the
/// synthesis matrix of a Parseval frame: the standard basis of `H^M`
/// projected onto the first `N` coordinates recovers the frame.
pub fn naimark_complete(f: &Frame, tol: &ToleranceConfig) -> Result<DenseMatrix> {
    let deviation = parseval_deviation(f, tol)?;
    if deviation > tol.eq_tol {
        return Err(FrameError::NotParseval { deviation });
    }
    let t = synthesis_matrix(f);
    unitary_complete(&t.row_vectors(), f.len(), tol)
}

/// Both sides of `Tr F = Σ <F φ_i, φ_i>` for a Parseval frame.
pub fn trace_formula_check(f: &Frame, op: &DenseMatrix, tol: &ToleranceConfig) -> Result<(C64, C64)> {
    if op.rows() != f.dim() || op.cols() != f.dim() {
        return Err(FrameError::DimMismatch { expected: f.dim(), found: op.rows() });
    }
    let deviation = parseval_deviation(f, tol)?;
    if deviation > tol.eq_tol {
        return Err(FrameError::NotParseval { deviation });
    }
    let lhs = trace(op)?;
    let rhs = f.vectors().iter().map(|phi| inner(&op.mul_vec(phi), phi)).sum();
    Ok((lhs, rhs))
}
