//! Field-generic dense linear algebra.
//!
//! Scalars are stored as [`C64`] in both fields; a [`Field::Real`] object
//! keeps every imaginary part at exactly zero, and every kernel here
//! preserves that (real inputs produce real outputs).

mod eigen;
mod functions;
mod matrix;
mod ortho;
mod scalar;
mod tolerance;

pub(crate) use eigen::eigenvalues_lenient;
pub use eigen::{hermitian_eig, HermitianEigen, MAX_SWEEPS};
pub use functions::{matrix_power, operator_norm, trace};
pub use matrix::DenseMatrix;
pub(crate) use ortho::orthogonalize;
pub use ortho::{gram_schmidt, orthonormal_basis, projection_onto_span, unitary_complete};
pub use scalar::{
    add_scaled, dot, inner, norm, norm_sq, normalize_phase, outer, scale, standard_basis, sub, Field, Vector, C64,
};
pub use tolerance::ToleranceConfig;
