//! The [`Frame`] type and frame-level operators.
//!
//! Conventions: for a frame `{φ_i}` of `M` vectors in `H^N`,
//!
//! * the synthesis matrix `T*` is `N x M` with `φ_i` as column `i`;
//! * the analysis operator is `T x = (<x, φ_i>)_i`;
//! * the frame operator is `S = T* T = Σ φ_i φ_i*`;
//! * the Gramian is `G = T T* = [<φ_j, φ_i>]_{i,j}`.

mod dual;
mod nearest;
mod transform;

pub use dual::{canonical_dual, canonical_parseval, is_dual_pair, make_alternate_dual, minimal_coefficients};
pub use nearest::{frame_distance, nearest_equal_norm, nearest_parseval};
pub use transform::{apply_operator, naimark_complete, project_frame, trace_formula_check};

use crate::error::{FrameError, Result};
use crate::numerics::{hermitian_eig, inner, norm, DenseMatrix, Field, HermitianEigen, ToleranceConfig, Vector, C64};

/// An ordered family of `M >= 1` vectors in `H^N`.
///
/// Spanning is not required; use [`is_frame`] to test it.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    dim: usize,
    vectors: Vec<Vector>,
    field: Field,
}

impl Frame {
    /// The field is widened to `Complex` if any coordinate is non-real.
    pub fn new(dim: usize, vectors: Vec<Vector>, field: Field) -> Result<Self> {
        if vectors.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(FrameError::DimMismatch { expected: dim, found: v.len() });
        }
        let field = vectors.iter().fold(field, |f, v| f.join(Field::of(v)));
        Ok(Frame { dim, vectors, field })
    }

    pub fn real(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        let vectors = vectors.into_iter().map(|v| v.into_iter().map(|x| C64::new(x, 0.0)).collect()).collect();
        Self::new(dim, vectors, Field::Real)
    }

    /// Frame whose vectors are the columns of an `N x M` synthesis matrix.
    pub fn from_synthesis(t: &DenseMatrix) -> Result<Self> {
        Self::new(t.rows(), t.column_vectors(), t.field())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `M`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &Vector {
        &self.vectors[i]
    }

    pub fn into_vectors(self) -> Vec<Vector> {
        self.vectors
    }

    pub fn norms(&self) -> Vec<f64> {
        self.vectors.iter().map(|v| norm(v)).collect()
    }

    /// Same frame without vector `i`, or `None` if that would leave it empty.
    pub fn without(&self, i: usize) -> Option<Frame> {
        if self.len() <= 1 {
            return None;
        }
        let mut vectors = self.vectors.clone();
        vectors.remove(i);
        Some(Frame { dim: self.dim, vectors, field: self.field })
    }

    /// Sub-family indexed by `indices`, or `None` if `indices` is empty.
    pub fn subset(&self, indices: &[usize]) -> Option<Frame> {
        if indices.is_empty() {
            return None;
        }
        let vectors = indices.iter().map(|&i| self.vectors[i].clone()).collect();
        Some(Frame { dim: self.dim, vectors, field: self.field })
    }

    /// Frame `{φ_σ(i)}` for a permutation `σ` given as an index list.
    pub fn permuted(&self, order: &[usize]) -> Frame {
        let vectors = order.iter().map(|&i| self.vectors[i].clone()).collect();
        Frame { dim: self.dim, vectors, field: self.field }
    }
}

/// Frame coefficients `(c_i)_{i=1..M}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector(pub Vec<C64>);

impl CoefficientVector {
    pub fn entries(&self) -> &[C64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm_sq(&self) -> f64 {
        crate::numerics::norm_sq(&self.0)
    }
}

/// Optimal frame bounds `A = λ_N(S)`, `B = λ_1(S)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

/// `N x M` matrix with `φ_i` as its `i`-th column.
pub fn synthesis_matrix(f: &Frame) -> DenseMatrix {
    DenseMatrix::from_columns(&f.vectors, f.dim, f.field)
}

/// `T x = (<x, φ_i>)_i`
pub fn analysis(f: &Frame, x: &[C64]) -> Result<CoefficientVector> {
    if x.len() != f.dim {
        return Err(FrameError::DimMismatch { expected: f.dim, found: x.len() });
    }
    Ok(CoefficientVector(f.vectors.iter().map(|phi| inner(x, phi)).collect()))
}

/// `T* c = Σ c_i φ_i`
pub fn synthesize(f: &Frame, coefficients: &[C64]) -> Result<Vector> {
    if coefficients.len() != f.len() {
        return Err(FrameError::DimMismatch { expected: f.len(), found: coefficients.len() });
    }
    let mut out = vec![C64::new(0.0, 0.0); f.dim];
    for (c, phi) in coefficients.iter().zip(&f.vectors) {
        crate::numerics::add_scaled(&mut out, *c, phi);
    }
    Ok(out)
}

/// `S = T* T`, an `N x N` positive semidefinite Hermitian matrix.
pub fn frame_operator(f: &Frame) -> DenseMatrix {
    let t = synthesis_matrix(f);
    &t * &t.adjoint()
}

/// `G = T T*` with entries `G_ij = <φ_j, φ_i>`.
pub fn gramian(f: &Frame) -> DenseMatrix {
    let t = synthesis_matrix(f);
    &t.adjoint() * &t
}

/// Eigen-decomposition of the frame operator.
pub fn frame_spectrum(f: &Frame, tol: &ToleranceConfig) -> Result<HermitianEigen> {
    hermitian_eig(&frame_operator(f), tol)
}

/// Extreme eigenvalues of `S`; rounding noise below zero is clamped.
pub fn frame_bounds(f: &Frame, tol: &ToleranceConfig) -> Result<FrameBounds> {
    let eig = frame_spectrum(f, tol)?;
    Ok(bounds_from_spectrum(&eig))
}

pub(crate) fn bounds_from_spectrum(eig: &HermitianEigen) -> FrameBounds {
    let upper = eig.max_value().max(0.0);
    let lower = eig.min_value().max(0.0).min(upper);
    FrameBounds { lower, upper }
}

pub(crate) fn spans(bounds: &FrameBounds, tol: &ToleranceConfig) -> bool {
    bounds.upper > 0.0 && bounds.lower > tol.rank_tol * bounds.upper
}

/// `λ_N(S) > rank_tol * λ_1(S)`, i.e. the vectors span `H^N`.
pub fn is_frame(f: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    Ok(spans(&frame_bounds(f, tol)?, tol))
}

/// Fails with [`FrameError::NotAFrame`] unless `f` spans.
pub(crate) fn require_frame(f: &Frame, tol: &ToleranceConfig) -> Result<FrameBounds> {
    let b = frame_bounds(f, tol)?;
    if spans(&b, tol) {
        Ok(b)
    } else {
        Err(FrameError::NotAFrame { lower: b.lower, upper: b.upper })
    }
}

/// `‖S - Id‖` in operator norm.
pub fn parseval_deviation(f: &Frame, tol: &ToleranceConfig) -> Result<f64> {
    let eig = frame_spectrum(f, tol)?;
    Ok((eig.max_value() - 1.0).abs().max((eig.min_value() - 1.0).abs()))
}
