//! Seeded and regular constructions.
//!
//! Random draws use `ChaCha8Rng::seed_from_u64(seed)` and
//! `rand_distr::StandardNormal`, which are portable across platforms, so a
//! seed pins the output exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{FrameError, Result};
use crate::frames::{project_frame, Frame};
use crate::numerics::{gram_schmidt, norm, scale, standard_basis, DenseMatrix, Field, ToleranceConfig, Vector, C64};

fn gaussian_rows(field: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Vec<Vector> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| match field {
                    Field::Real => C64::new(rng.sample(StandardNormal), 0.0),
                    Field::Complex => C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)),
                })
                .collect()
        })
        .collect()
}

/// `count` vectors in dimension `dim` with independent standard normal
/// entries (real and imaginary parts drawn separately for complex).
pub fn gaussian_frame(field: Field, dim: usize, count: usize, seed: u64) -> Result<Frame> {
    if dim == 0 || count == 0 {
        return Err(FrameError::BadParams("dimension and count must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors = gaussian_rows(field, count, dim, &mut rng);
    Frame::new(dim, vectors, field)
}

/// Parseval frame from the first `dim` rows of a random `count x count`
/// orthogonal matrix: a Gaussian matrix is drawn row by row and its first
/// `dim` rows are orthonormalized; the columns are the frame vectors.
pub fn random_parseval(dim: usize, count: usize, seed: u64, tol: &ToleranceConfig) -> Result<Frame> {
    if dim == 0 || count < dim {
        return Err(FrameError::BadParams(format!("need 1 <= dim <= count, got dim {dim}, count {count}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Gram-Schmidt never looks past the current row, so the remaining
    // count - dim rows of the square matrix need not be drawn.
    let rows = gram_schmidt(&gaussian_rows(Field::Real, dim, count, &mut rng), tol)?;
    Frame::from_synthesis(&DenseMatrix::from_rows(&rows, count, Field::Real))
}

/// Regular simplex: the standard basis of `R^{N+1}` projected onto the
/// orthogonal complement of `(1, ..., 1)`, written in `N` coordinates and
/// normalized. Unit-norm, equiangular with `|<φ_i, φ_j>| = 1/N`, tight with
/// bound `(N+1)/N`.
pub fn simplex_frame(dim: usize, tol: &ToleranceConfig) -> Result<Frame> {
    if dim == 0 {
        return Err(FrameError::BadParams("dimension must be at least 1".into()));
    }
    let n1 = dim + 1;
    let subspace: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut v = vec![C64::new(0.0, 0.0); n1];
            v[i] = C64::new(1.0, 0.0);
            v[i + 1] = C64::new(-1.0, 0.0);
            v
        })
        .collect();
    let onb = Frame::new(n1, standard_basis(n1), Field::Real)?;
    let projected = project_frame(&onb, &subspace, tol)?;
    let vectors = projected.vectors().iter().map(|v| scale(v, C64::new(1.0 / norm(v), 0.0))).collect();
    Frame::new(dim, vectors, Field::Real)
}
