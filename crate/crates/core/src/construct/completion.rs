use crate::error::Result;
use crate::frames::{frame_spectrum, require_frame, Frame};
use crate::numerics::{ToleranceConfig, C64};

/// Appends `ψ_j = sqrt(λ_1 - λ_j) e_j` for every eigenpair of `S` with
/// `λ_j < λ_1`, giving a `λ_1`-tight frame with at most `N - 1` extra
/// vectors. Gaps within `eq_tol * λ_1` count as zero.
pub fn tight_completion(f: &Frame, tol: &ToleranceConfig) -> Result<Frame> {
    require_frame(f, tol)?;
    let eig = frame_spectrum(f, tol)?;
    let top = eig.max_value();
    let mut vectors = f.vectors().to_vec();
    for (lambda, e) in eig.values.iter().zip(&eig.vectors).skip(1) {
        let gap = top - lambda;
        if gap > tol.eq_tol * top {
            let s = C64::new(gap.sqrt(), 0.0);
            vectors.push(e.iter().map(|z| z * s).collect());
        }
    }
    Frame::new(f.dim(), vectors, f.field().join(eig.field))
}
