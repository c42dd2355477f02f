use crate::error::Result;
use crate::frames::{bounds_from_spectrum, frame_spectrum, require_frame, spans, Frame, FrameBounds};
use crate::numerics::{inner, norm, Field, ToleranceConfig};

/// Summary diagnostics of a frame. Every flag uses `eq_tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameReport {
    pub dim: usize,
    pub count: usize,
    pub field: Field,
    /// Optimal bounds `(λ_N, λ_1)` of the frame operator.
    pub bounds: FrameBounds,
    /// Frame operator eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    pub norms: Vec<f64>,
    pub is_frame: bool,
    pub is_tight: bool,
    pub is_parseval: bool,
    pub is_equal_norm: bool,
    pub is_unit_norm: bool,
    /// Equal norms, `M ≥ 2`, and a constant `|<φ_i, φ_j>|` for `i ≠ j`.
    pub is_equiangular: bool,
    /// The normalized vectors have constant `|<φ̂_i, φ̂_j>|`, whatever the
    /// norms.
    pub equiangular_lines: bool,
    /// `max_{i≠j} |<φ_i, φ_j>| / (‖φ_i‖‖φ_j‖)` over nonzero vectors.
    pub coherence: f64,
    /// `M / N`.
    pub redundancy: f64,
}

fn normalized_overlaps(f: &Frame) -> Option<Vec<f64>> {
    let norms = f.norms();
    if norms.iter().any(|n| *n == 0.0) {
        return None;
    }
    let mut out = Vec::new();
    for i in 0..f.len() {
        for j in 0..i {
            out.push(inner(f.vector(i), f.vector(j)).norm() / (norms[i] * norms[j]));
        }
    }
    Some(out)
}

/// Largest normalized overlap between distinct nonzero vectors; zero
/// vectors are ignored and fewer than two vectors give 0.
pub fn coherence(f: &Frame) -> f64 {
    let idx: Vec<usize> = (0..f.len()).filter(|&i| norm(f.vector(i)) > 0.0).collect();
    let mut c = 0.0f64;
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[..a] {
            let v = inner(f.vector(i), f.vector(j)).norm() / (norm(f.vector(i)) * norm(f.vector(j)));
            c = c.max(v);
        }
    }
    c
}

pub fn frame_report(f: &Frame, tol: &ToleranceConfig) -> Result<FrameReport> {
    let eig = frame_spectrum(f, tol)?;
    let bounds = bounds_from_spectrum(&eig);
    let norms = f.norms();
    let is_frame = spans(&bounds, tol);
    let is_tight = is_frame && tol.approx_eq(bounds.lower, bounds.upper);
    let is_parseval = is_frame && (bounds.lower - 1.0).abs() <= tol.eq_tol && (bounds.upper - 1.0).abs() <= tol.eq_tol;
    let top = norms.iter().copied().fold(0.0, f64::max);
    let is_equal_norm = norms.iter().all(|n| (n - norms[0]).abs() <= tol.eq_tol * top.max(1.0));
    let is_unit_norm = norms.iter().all(|n| (n - 1.0).abs() <= tol.eq_tol);
    let equiangular_lines = f.len() >= 2
        && normalized_overlaps(f).is_some_and(|o| {
            let lo = o.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = o.iter().copied().fold(0.0, f64::max);
            hi - lo <= tol.eq_tol
        });
    Ok(FrameReport {
        dim: f.dim(),
        count: f.len(),
        field: f.field(),
        bounds,
        eigenvalues: eig.values.clone(),
        norms,
        is_frame,
        is_tight,
        is_parseval,
        is_equal_norm,
        is_unit_norm,
        is_equiangular: equiangular_lines && is_equal_norm,
        equiangular_lines,
        coherence: coherence(f),
        redundancy: f.len() as f64 / f.dim() as f64,
    })
}

/// True iff removing any single vector leaves a set that no longer spans.
pub fn is_exact(f: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    require_frame(f, tol)?;
    if f.len() > f.dim() {
        return Ok(false);
    }
    for i in 0..f.len() {
        if let Some(g) = f.without(i) {
            if spans(&bounds_from_spectrum(&frame_spectrum(&g, tol)?), tol) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One checked identity between frame constants.
#[derive(Clone, Debug, PartialEq)]
pub struct AuditEntry {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub passed: bool,
}

/// Checks the trace identities that apply to `f`: always
/// `Σ λ_j = Σ ‖φ_i‖²`, plus the equal-norm, tight and Parseval forms when
/// the corresponding flags hold.
pub fn constants_audit(f: &Frame, tol: &ToleranceConfig) -> Result<Vec<AuditEntry>> {
    let r = frame_report(f, tol)?;
    let sum_eig: f64 = r.eigenvalues.iter().sum();
    let sum_norms: f64 = r.norms.iter().map(|a| a * a).sum();
    let n = f.dim() as f64;
    let m = f.len() as f64;
    let c2 = r.norms[0] * r.norms[0];
    let a = r.bounds.upper;
    let mut out = Vec::new();
    let mut push = |name, lhs: f64, rhs: f64| {
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        out.push(AuditEntry { name, lhs, rhs, passed: (lhs - rhs).abs() <= tol.eq_tol * scale });
    };
    push("sum of eigenvalues = sum of squared norms", sum_eig, sum_norms);
    if r.is_equal_norm {
        push("sum of squared norms = M c^2", sum_norms, m * c2);
    }
    if r.is_tight {
        push("N A = sum of eigenvalues", n * a, sum_eig);
        push("N A = sum of squared norms", n * a, sum_norms);
    }
    if r.is_parseval {
        push("N = sum of eigenvalues", n, sum_eig);
        push("N = sum of squared norms", n, sum_norms);
    }
    if r.is_tight && r.is_equal_norm {
        push("A = M c^2 / N", a, m * c2 / n);
    }
    if r.is_parseval && r.is_equal_norm {
        push("N = M c^2", n, m * c2);
    }
    Ok(out)
}
