use super::{canonical_parseval, Frame};
use crate::error::{FrameError, Result};
use crate::numerics::{norm, sub, ToleranceConfig, C64};

/// `d(Φ, Ψ) = Σ ‖φ_i - ψ_i‖²` (squared, so not a metric).
pub fn frame_distance(f: &Frame, g: &Frame) -> Result<f64> {
    if f.dim() != g.dim() {
        return Err(FrameError::DimMismatch { expected: f.dim(), found: g.dim() });
    }
    if f.len() != g.len() {
        return Err(FrameError::DimMismatch { expected: f.len(), found: g.len() });
    }
    Ok(f.vectors().iter().zip(g.vectors()).map(|(a, b)| crate::numerics::norm_sq(&sub(a, b))).sum())
}

/// `{C φ_i / ‖φ_i‖}` with `C = Σ ‖φ_i‖ / M`.
pub fn nearest_equal_norm(f: &Frame) -> Result<Frame> {
    let norms = f.norms();
    if let Some(index) = norms.iter().position(|&n| n == 0.0) {
        return Err(FrameError::ZeroVector { index });
    }
    let c = norms.iter().sum::<f64>() / f.len() as f64;
    let vectors = f
        .vectors()
        .iter()
        .map(|v| {
            let s = C64::new(c / norm(v), 0.0);
            v.iter().map(|z| z * s).collect()
        })
        .collect();
    Frame::new(f.dim(), vectors, f.field())
}

/// The closest Parseval frame (the canonical Parseval frame) and its
/// distance from `f`.
pub fn nearest_parseval(f: &Frame, tol: &ToleranceConfig) -> Result<(Frame, f64)> {
    let p = canonical_parseval(f, tol)?;
    let d = frame_distance(f, &p)?;
    Ok((p, d))
}
