//! Cyclic Jacobi diagonalization of Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair `(p, q)`. For a complex
//! entry `a_pq = r e^{iθ}` the plane rotation is conjugated by the phase,
//!
//! ```text
//! V = [  c          s e^{iθ} ]
//!     [ -s e^{-iθ}  c        ]
//! ```
//!
//! so real symmetric input only ever sees real rotations. Sweeps continue
//! until the off-diagonal Frobenius mass drops below
//! `eig_offdiag_tol * ‖A‖_F`.

use super::matrix::DenseMatrix;
use super::scalar::{inner, normalize_phase, Field, Vector, C64};
use super::tolerance::ToleranceConfig;
use crate::error::{FrameError, Result};

/// Sweep budget for [`hermitian_eig`].
pub const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `A = Σ λ_j v_j v_j*` of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    /// Eigenvalues, sorted descending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, `vectors[j]` belongs to `values[j]`.
    pub vectors: Vec<Vector>,
    pub field: Field,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `Σ f(λ_j) v_j v_j*`
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        let n = self.dim();
        let mut out = DenseMatrix::zeros(n, n, self.field);
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            let w = f(*lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = v[i] * w;
                for j in 0..n {
                    out[(i, j)] += vi * v[j].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        self.reconstruct_with(|l| l)
    }

    pub fn max_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn min_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Diagonalizes a Hermitian matrix by cyclic Jacobi rotations.
///
/// Eigenvalues come back in descending order. Within a numerically
/// degenerate cluster (gap `<= eq_tol * max|λ|`) the eigenvectors are
/// replaced by a canonical orthonormal basis of the cluster's eigenspace,
/// built by pivoted Gram–Schmidt over the projected standard basis and
/// ordered by pivot index. Every eigenvector is phase-normalized so that
/// its first non-negligible component is real and positive.
pub fn hermitian_eig(a: &DenseMatrix, tol: &ToleranceConfig) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(FrameError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let scale = a.frobenius_norm();
    let defect = a.hermitian_defect();
    if defect > tol.eq_tol * scale {
        return Err(FrameError::NotHermitian { deviation: defect });
    }
    let (raw_values, raw_vectors, converged) = jacobi(a, tol.eig_offdiag_tol);
    if !converged {
        return Err(FrameError::NoConvergence { sweeps: MAX_SWEEPS });
    }
    Ok(canonicalize(raw_values, raw_vectors, a.field(), tol))
}

/// Eigenvalues of a Hermitian matrix without the convergence error path;
/// used where the caller only needs an estimate (operator norms).
pub(crate) fn eigenvalues_lenient(a: &DenseMatrix, offdiag_tol: f64) -> Vec<f64> {
    let (mut values, _, _) = jacobi(a, offdiag_tol);
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

/// Returns (diagonal, eigenvector columns, converged).
fn jacobi(a: &DenseMatrix, offdiag_tol: f64) -> (Vec<f64>, Vec<Vector>, bool) {
    let n = a.rows();
    // Symmetrize: work on (A + A*)/2 so tiny asymmetries never accumulate.
    let mut m = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
        }
        m[i * n + i].im = 0.0;
    }
    let mut q = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        q[i * n + i] = C64::new(1.0, 0.0);
    }
    let target = offdiag_tol * a.frobenius_norm();
    let off = |m: &[C64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off(&m) <= target;
    let mut sweep = 0;
    while !converged && sweep < MAX_SWEEPS {
        for p in 0..n {
            for qq in (p + 1)..n {
                rotate(&mut m, &mut q, n, p, qq);
            }
        }
        sweep += 1;
        converged = off(&m) <= target;
    }

    let values = (0..n).map(|i| m[i * n + i].re).collect();
    let vectors = (0..n).map(|j| (0..n).map(|i| q[i * n + j]).collect()).collect();
    (values, vectors, converged)
}

fn rotate(m: &mut [C64], q: &mut [C64], n: usize, p: usize, r: usize) {
    let b = m[p * n + r];
    let mag = b.norm();
    if mag == 0.0 {
        return;
    }
    let app = m[p * n + p].re;
    let arr = m[r * n + r].re;
    let phase = b / mag;
    let theta = (arr - app) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // V_pp = c, V_pr = s e^{iθ}, V_rp = -s e^{-iθ}, V_rr = c
    let v_pp = C64::new(c, 0.0);
    let v_pr = phase * s;
    let v_rp = -phase.conj() * s;
    let v_rr = C64::new(c, 0.0);

    // M <- M V (columns p, r)
    for i in 0..n {
        let mp = m[i * n + p];
        let mr = m[i * n + r];
        m[i * n + p] = mp * v_pp + mr * v_rp;
        m[i * n + r] = mp * v_pr + mr * v_rr;
    }
    // M <- V* M (rows p, r)
    for j in 0..n {
        let mp = m[p * n + j];
        let mr = m[r * n + j];
        m[p * n + j] = v_pp.conj() * mp + v_rp.conj() * mr;
        m[r * n + j] = v_pr.conj() * mp + v_rr.conj() * mr;
    }
    m[p * n + r] = C64::new(0.0, 0.0);
    m[r * n + p] = C64::new(0.0, 0.0);
    m[p * n + p].im = 0.0;
    m[r * n + r].im = 0.0;
    // Q <- Q V
    for i in 0..n {
        let qp = q[i * n + p];
        let qr = q[i * n + r];
        q[i * n + p] = qp * v_pp + qr * v_rp;
        q[i * n + r] = qp * v_pr + qr * v_rr;
    }
}

/// Sorts descending, canonicalizes degenerate clusters, fixes phases.
fn canonicalize(values: Vec<f64>, vectors: Vec<Vector>, field: Field, tol: &ToleranceConfig) -> HermitianEigen {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut vectors: Vec<Vector> = order.iter().map(|&i| vectors[i].clone()).collect();

    let spread = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let gap = tol.eq_tol * spread;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end - 1] - values[end] <= gap {
            end += 1;
        }
        if end - start > 1 {
            let basis = canonical_cluster_basis(&vectors[start..end], n);
            for (slot, v) in vectors[start..end].iter_mut().zip(basis) {
                *slot = v;
            }
        }
        start = end;
    }

    let phase_threshold = 1e-8 / (n.max(1) as f64).sqrt();
    for v in vectors.iter_mut() {
        normalize_phase(v, phase_threshold);
        if field == Field::Real {
            for z in v.iter_mut() {
                z.im = 0.0;
            }
        }
    }
    HermitianEigen { values, vectors, field }
}

/// Orthonormal basis of span(cluster) obtained by projecting standard
/// basis vectors and picking, at each step, the candidate with the largest
/// residual (lowest index on ties). Output ordered by pivot index.
fn canonical_cluster_basis(cluster: &[Vector], n: usize) -> Vec<Vector> {
    let k = cluster.len();
    let mut chosen: Vec<(usize, Vector)> = Vec::with_capacity(k);
    let mut used = vec![false; n];
    for _ in 0..k {
        let mut best: Option<(usize, Vector, f64)> = None;
        for j in 0..n {
            if used[j] {
                continue;
            }
            // P e_j = Σ_c conj(c_j) c
            let mut r = vec![C64::new(0.0, 0.0); n];
            for c in cluster {
                let w = c[j].conj();
                for (ri, ci) in r.iter_mut().zip(c) {
                    *ri += w * ci;
                }
            }
            for _ in 0..2 {
                for (_, e) in &chosen {
                    let w = inner(&r, e);
                    for (ri, ei) in r.iter_mut().zip(e) {
                        *ri -= w * ei;
                    }
                }
            }
            let rn = r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let better = match &best {
                None => true,
                Some((_, _, bn)) => rn > bn * (1.0 + 1e-12),
            };
            if better {
                best = Some((j, r, rn));
            }
        }
        let (j, r, rn) = best.expect("cluster rank exceeds dimension");
        used[j] = true;
        chosen.push((j, r.into_iter().map(|z| z / rn).collect()));
    }
    chosen.sort_by_key(|(j, _)| *j);
    chosen.into_iter().map(|(_, v)| v).collect()
}
