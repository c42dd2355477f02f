use crate::error::{FrameError, Result};

/// Relative tolerances used for every numerical decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Equality of derived quantities (flags, identities, duality).
    pub eq_tol: f64,
    /// Jacobi stopping threshold on the off-diagonal Frobenius mass.
    pub eig_offdiag_tol: f64,
    /// Rank decisions, relative to the largest eigen/singular value.
    pub rank_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig { eq_tol: 1e-9, eig_offdiag_tol: 1e-12, rank_tol: 1e-10 }
    }
}

impl ToleranceConfig {
    pub fn new(eq_tol: f64, eig_offdiag_tol: f64, rank_tol: f64) -> Result<Self> {
        let ok = |t: f64| t.is_finite() && t > 0.0;
        if ok(eq_tol) && ok(eig_offdiag_tol) && ok(rank_tol) {
            Ok(ToleranceConfig { eq_tol, eig_offdiag_tol, rank_tol })
        } else {
            Err(FrameError::InvalidTolerance)
        }
    }

    /// Same configuration with a different `eq_tol`.
    pub fn with_eq_tol(self, eq_tol: f64) -> Result<Self> {
        Self::new(eq_tol, self.eig_offdiag_tol, self.rank_tol)
    }

    /// `|a - b| <= eq_tol * max(1, |a|, |b|)`
    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.eq_tol * 1f64.max(a.abs()).max(b.abs())
    }
}
