use super::eigen::{eigenvalues_lenient, hermitian_eig};
use super::matrix::DenseMatrix;
use super::scalar::C64;
use super::tolerance::ToleranceConfig;
use crate::error::{FrameError, Result};

/// `A^a = Σ λ_j^a v_j v_j*` for a positive semidefinite Hermitian `A`.
///
/// Eigenvalues within `rank_tol * λ_max` of zero are treated as zero
/// (so slightly negative rounding noise is accepted); `0^0 = 1`. Negative
/// powers require `λ_min > rank_tol * λ_max`.
pub fn matrix_power(a: &DenseMatrix, power: f64, tol: &ToleranceConfig) -> Result<DenseMatrix> {
    let eig = hermitian_eig(a, tol)?;
    let top = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = tol.rank_tol * top;
    let bottom = eig.min_value();
    if bottom < -floor {
        return Err(FrameError::NotPsd { min_eigenvalue: bottom });
    }
    if power < 0.0 && (bottom <= floor || top == 0.0) {
        return Err(FrameError::SingularForNegativePower { min_eigenvalue: bottom });
    }
    Ok(eig.reconstruct_with(|l| {
        let l = if l.abs() <= floor { 0.0 } else { l };
        if power == 0.0 {
            1.0
        } else if power == 1.0 {
            l
        } else {
            l.powf(power)
        }
    }))
}

/// Operator 2-norm `sqrt(λ_max(A* A))`.
pub fn operator_norm(a: &DenseMatrix) -> f64 {
    if a.rows() == 0 || a.cols() == 0 {
        return 0.0;
    }
    let adj = a.adjoint();
    let gram = if a.rows() < a.cols() { a * &adj } else { &adj * a };
    let top = eigenvalues_lenient(&gram, 1e-14).first().copied().unwrap_or(0.0);
    top.max(0.0).sqrt()
}

/// Sum of the diagonal entries.
pub fn trace(a: &DenseMatrix) -> Result<C64> {
    if !a.is_square() {
        return Err(FrameError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok((0..a.rows()).map(|i| a[(i, i)]).sum())
}
