//! Canonical and alternate duals, canonical Parseval frames and
//! minimal-norm coefficients.

use super::{analysis, frame_operator, require_frame, synthesis_matrix, CoefficientVector, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{matrix_power, operator_norm, DenseMatrix, ToleranceConfig, C64};

fn transformed(f: &Frame, op: &DenseMatrix) -> Result<Frame> {
    let vectors = f.vectors().iter().map(|v| op.mul_vec(v)).collect();
    Frame::new(f.dim(), vectors, f.field().join(op.field()))
}

fn frame_operator_power(f: &Frame, power: f64, tol: &ToleranceConfig) -> Result<DenseMatrix> {
    let bounds = require_frame(f, tol)?;
    matrix_power(&frame_operator(f), power, tol).map_err(|e| match e {
        FrameError::SingularForNegativePower { .. } | FrameError::NotPsd { .. } => {
            FrameError::NotAFrame { lower: bounds.lower, upper: bounds.upper }
        }
        other => other,
    })
}

/// `{S^{-1} φ_i}`
pub fn canonical_dual(f: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    let inv = frame_operator_power(f, -1.0, tol)?;
    transformed(f, &inv)
}

/// `{S^{-1/2} φ_i}`, a Parseval frame isomorphic to `f`.
pub fn canonical_parseval(f: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    let inv_sqrt = frame_operator_power(f, -0.5, tol)?;
    transformed(f, &inv_sqrt)
}

fn same_shape(f: &Frame, g: &Frame) -> Result<()> {
    if f.dim() != g.dim() {
        return Err(FrameError::DimMismatch { expected: f.dim(), found: g.dim() });
    }
    if f.len() != g.len() {
        return Err(FrameError::DimMismatch { expected: f.len(), found: g.len() });
    }
    Ok(())
}

/// `T_f* T_g = Σ φ_i ψ_i*`: the map `x ↦ Σ <x, ψ_i> φ_i`.
fn cross_operator(f: &Frame, g: &Frame) -> DenseMatrix {
    &synthesis_matrix(f) * &synthesis_matrix(g).adjoint()
}

/// True iff `x = Σ <x, ψ_i> φ_i` for all `x`, i.e. `T_f* T_g = Id`, to
/// within `eq_tol * max(1, ‖T_f‖ ‖T_g‖)` in Frobenius norm.
pub fn is_dual_pair(f: &Frame, g: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    same_shape(f, g)?;
    let product = cross_operator(f, g);
    let scale = operator_norm(&synthesis_matrix(f)) * operator_norm(&synthesis_matrix(g));
    let defect = product.distance(&DenseMatrix::identity(f.dim(), product.field()));
    Ok(defect <= tol.eq_tol * scale.max(1.0))
}

/// The dual `{S^{-1} φ_i + ψ_i}` for a perturbation `ψ` whose analysis
/// range is orthogonal to that of `f` (`T_f* T_ψ = 0`).
pub fn make_alternate_dual(f: &Frame, perturbation: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    same_shape(f, perturbation)?;
    let cross = cross_operator(f, perturbation);
    let deviation = cross.frobenius_norm();
    let scale = operator_norm(&synthesis_matrix(f)) * operator_norm(&synthesis_matrix(perturbation));
    if deviation > tol.eq_tol * scale {
        return Err(FrameError::NotOrthogonalRanges { deviation });
    }
    let canonical = canonical_dual(f, tol)?;
    let vectors = canonical
        .vectors()
        .iter()
        .zip(perturbation.vectors())
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
        .collect();
    Frame::new(f.dim(), vectors, canonical.field().join(perturbation.field()))
}

/// The minimal-ℓ2 representation `(<S^{-1}x, φ_i>)_i` of `x`.
pub fn minimal_coefficients(f: &Frame, x: &[C64], tol: &ToleranceConfig) -> Result<CoefficientVector> {
    if x.len() != f.dim() {
        return Err(FrameError::DimMismatch { expected: f.dim(), found: x.len() });
    }
    let inv = frame_operator_power(f, -1.0, tol)?;
    analysis(f, &inv.mul_vec(x))
}
