//! Frames with prescribed frame operator spectrum and vector norms.
//!
//! A frame with spectrum `λ` and squared norms `a²` exists exactly when
//! `a²` is majorized by `λ` (padded with zeros). We build the Gramian: an
//! `M x M` Hermitian matrix with eigenvalues `(λ, 0, ..., 0)` and diagonal
//! `a²`, obtained from `diag(λ, 0, ..., 0)` by plane rotations, and then
//! factor it.

use crate::error::{FrameError, Result};
use crate::frames::Frame;
use crate::numerics::{hermitian_eig, DenseMatrix, ToleranceConfig};

fn sorted_positive(mut values: Vec<f64>, what: &str) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(FrameError::BadParams(format!("{what} must not be empty")));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite() || **v <= 0.0) {
        return Err(FrameError::BadParams(format!("{what} must be positive and finite, got {v}")));
    }
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Squared vector norms `a_1² ≥ ... ≥ a_M² > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormSpec {
    norms_squared: Vec<f64>,
}

impl NormSpec {
    /// Sorts the values descending; rejects empty, zero, negative or
    /// non-finite input.
    pub fn from_squared(values: Vec<f64>) -> Result<Self> {
        Ok(Self { norms_squared: sorted_positive(values, "squared norms")? })
    }

    pub fn from_norms(norms: &[f64]) -> Result<Self> {
        Self::from_squared(norms.iter().map(|a| a * a).collect())
    }

    pub fn norms_squared(&self) -> &[f64] {
        &self.norms_squared
    }

    pub fn len(&self) -> usize {
        self.norms_squared.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norms_squared.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.norms_squared.iter().sum()
    }
}

/// Frame operator eigenvalues `λ_1 ≥ ... ≥ λ_N > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSpec {
    eigenvalues: Vec<f64>,
}

impl SpectrumSpec {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        Ok(Self { eigenvalues: sorted_positive(values, "eigenvalues")? })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn total(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Partial sums of `a²` never exceed those of `λ` and the totals agree.
/// Comparisons allow `eq_tol` relative to the total. False when `M < N`.
pub fn majorization_feasible(spec: &SpectrumSpec, norms: &NormSpec, tol: &ToleranceConfig) -> bool {
    if norms.len() < spec.dim() {
        return false;
    }
    let slack = tol.eq_tol * spec.total().max(norms.total()).max(1.0);
    let (mut sa, mut sl) = (0.0, 0.0);
    for (a, l) in norms.norms_squared().iter().zip(spec.eigenvalues()) {
        sa += a;
        sl += l;
        if sa > sl + slack {
            return false;
        }
    }
    (norms.total() - spec.total()).abs() <= slack
}

/// The three numerical conditions for a tight frame with given norms to
/// exist in dimension `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TightSpecConditions {
    /// `a_n² ≤ (Σ_{i>n} a_i²) / (N - n)` for every `n < N`.
    pub tail_average: bool,
    /// `Σ a_i² ≥ N a_1²`.
    pub total_vs_largest: bool,
    /// `λ a_i ≤ 1` for all `i`, where `λ = sqrt(N / Σ a_i²)`.
    pub normalized_bound: bool,
}

pub fn tight_spec_conditions(norms: &NormSpec, dim: usize, tol: &ToleranceConfig) -> TightSpecConditions {
    let a2 = norms.norms_squared();
    let total = norms.total();
    let slack = tol.eq_tol * total.max(1.0);
    let m = a2.len();
    let tail_average = m >= dim
        && (1..dim).all(|n| {
            let tail: f64 = a2[n..].iter().sum();
            a2[n - 1] * (dim - n) as f64 <= tail + slack * (dim - n) as f64
        });
    let total_vs_largest = m >= dim && total + slack >= dim as f64 * a2[0];
    let lambda = (dim as f64 / total).sqrt();
    let normalized_bound = m >= dim && a2.iter().all(|a| lambda * a.sqrt() <= 1.0 + tol.eq_tol);
    TightSpecConditions { tail_average, total_vs_largest, normalized_bound }
}

/// A tight frame for `H^N` with norms `a_i` exists iff `Σ a_i² ≥ N a_1²`.
pub fn tight_spec_feasible(norms: &NormSpec, dim: usize, tol: &ToleranceConfig) -> bool {
    tight_spec_conditions(norms, dim, tol).total_vs_largest
}

/// Real symmetric matrix with eigenvalues `eigenvalues` and diagonal
/// `diagonal` (both of the same length, matched after sorting descending).
///
/// Starts at `diag(eigenvalues)` and applies plane rotations. Each step
/// takes the first index `p` whose entry still exceeds its target and the
/// first later index `q` that falls short, and rotates by the angle that
/// lands one of them exactly on target. That index is then frozen, so the
/// unfrozen block stays diagonal and at most `M - 1` rotations are used.
pub fn hermitian_with_spectrum_and_diagonal(
    eigenvalues: &[f64],
    diagonal: &[f64],
    tol: &ToleranceConfig,
) -> Result<DenseMatrix> {
    let m = eigenvalues.len();
    if diagonal.len() != m {
        return Err(FrameError::DimMismatch { expected: m, found: diagonal.len() });
    }
    let mut lam = eigenvalues.to_vec();
    lam.sort_by(|a, b| b.total_cmp(a));
    let mut target = diagonal.to_vec();
    target.sort_by(|a, b| b.total_cmp(a));

    let scale = lam.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let slack = tol.eq_tol * scale * m as f64;
    let mut prefix = 0.0;
    for (l, t) in lam.iter().zip(&target) {
        prefix += l - t;
        if prefix < -slack {
            return Err(FrameError::MajorizationFails);
        }
    }
    if prefix.abs() > slack {
        return Err(FrameError::MajorizationFails);
    }

    let eps = 64.0 * f64::EPSILON * scale;
    let mut g = vec![vec![0.0f64; m]; m];
    for (i, l) in lam.iter().enumerate() {
        g[i][i] = *l;
    }
    let mut frozen = vec![false; m];
    for _ in 0..m {
        let diff = |g: &Vec<Vec<f64>>, i: usize| g[i][i] - target[i];
        let Some(p) = (0..m).find(|&i| !frozen[i] && diff(&g, i) > eps) else { break };
        let q = ((p + 1)..m).chain(0..p).find(|&i| !frozen[i] && diff(&g, i) < -eps);
        let Some(q) = q else { break };
        let (dp, dq) = (g[p][p], g[q][q]);
        let over = dp - target[p];
        let under = target[q] - dq;
        let delta = over.min(under);
        let s2 = (delta / (dp - dq)).clamp(0.0, 1.0);
        let (s, c) = (s2.sqrt(), (1.0 - s2).sqrt());
        // G <- R^T G R with R = [[c, -s], [s, c]] in the (p, q) plane.
        for row in g.iter_mut() {
            let (a, b) = (row[p], row[q]);
            row[p] = c * a + s * b;
            row[q] = -s * a + c * b;
        }
        for k in 0..m {
            let (a, b) = (g[p][k], g[q][k]);
            g[p][k] = c * a + s * b;
            g[q][k] = -s * a + c * b;
        }
        if over <= under {
            g[p][p] = target[p];
            frozen[p] = true;
        }
        if under <= over {
            g[q][q] = target[q];
            frozen[q] = true;
        }
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let v = 0.5 * (g[i][j] + g[j][i]);
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    Ok(DenseMatrix::from_real_rows(&g))
}

/// Vectors `φ_i[k] = sqrt(λ_k) conj(u_k[i])` built from the top `N`
/// eigenpairs of a rank-`N` PSD matrix `F`; their Gramian is `F`.
pub fn gramian_factor_frame(gram: &DenseMatrix, dim: usize, tol: &ToleranceConfig) -> Result<Frame> {
    let eig = hermitian_eig(gram, tol)?;
    let top = eig.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let floor = tol.rank_tol * top;
    let min = eig.min_value();
    if min < -floor.max(tol.eq_tol * top) {
        return Err(FrameError::NotPsd { min_eigenvalue: min });
    }
    let rank = eig.values.iter().filter(|v| **v > floor).count();
    if rank != dim || dim == 0 {
        return Err(FrameError::WrongRank { expected: dim, found: rank });
    }
    let m = gram.rows();
    let vectors = (0..m).map(|i| (0..dim).map(|k| eig.vectors[k][i].conj() * eig.values[k].sqrt()).collect()).collect();
    Frame::new(dim, vectors, gram.field())
}

/// Frame with frame operator spectrum `spec` and squared norms `norms`
/// (vector `i` has the `i`-th largest norm).
pub fn frame_with_spectrum_and_norms(spec: &SpectrumSpec, norms: &NormSpec, tol: &ToleranceConfig) -> Result<Frame> {
    if !majorization_feasible(spec, norms, tol) {
        return Err(FrameError::MajorizationFails);
    }
    let m = norms.len();
    let mut eigenvalues = spec.eigenvalues().to_vec();
    eigenvalues.resize(m, 0.0);
    let gram = hermitian_with_spectrum_and_diagonal(&eigenvalues, norms.norms_squared(), tol)?;
    gramian_factor_frame(&gram, spec.dim(), tol)
}

/// Equal-norm frame of `count` vectors whose frame operator has spectrum
/// `spec`; every vector has squared norm `Σ λ_j / M`.
pub fn equal_norm_with_operator(spec: &SpectrumSpec, count: usize, tol: &ToleranceConfig) -> Result<Frame> {
    if count < spec.dim() {
        return Err(FrameError::BadParams(format!("need at least {} vectors, got {count}", spec.dim())));
    }
    let a2 = spec.total() / count as f64;
    let norms = NormSpec::from_squared(vec![a2; count])?;
    frame_with_spectrum_and_norms(spec, &norms, tol)
}
