//! Scaling a frame to a Parseval frame.
//!
//! Find `w_i = a_i² ≥ 0` with `Σ w_i φ_i φ_i* = Id`. Each Hermitian entry
//! `(j, k)` with `j ≤ k` gives one real equation (two when complex);
//! off-diagonal rows are weighted by `√2` so that the residual of the
//! linear system is the Frobenius norm of `Σ w_i φ_i φ_i* - Id`.
//!
//! A solution, when one exists, is usually not unique. Among the
//! solutions we pick the one closest to `w = 1`, so Parseval inputs come
//! back unscaled.

use crate::error::Result;
use crate::frames::Frame;
use crate::numerics::{hermitian_eig, DenseMatrix, Field, ToleranceConfig};

use super::nnls::nnls;

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingSolution {
    pub feasible: bool,
    /// `a_i = sqrt(w_i)`.
    pub scales: Vec<f64>,
    /// Frobenius norm of `Σ a_i² φ_i φ_i* - Id`.
    pub residual: f64,
}

fn linear_system(f: &Frame) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = f.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let r2 = std::f64::consts::SQRT_2;
    for j in 0..n {
        for k in j..n {
            let entries: Vec<_> = f.vectors().iter().map(|v| v[j] * v[k].conj()).collect();
            if j == k {
                rows.push(entries.iter().map(|z| z.re).collect());
                rhs.push(1.0);
            } else {
                rows.push(entries.iter().map(|z| r2 * z.re).collect());
                rhs.push(0.0);
                if f.field() == Field::Complex {
                    rows.push(entries.iter().map(|z| r2 * z.im).collect());
                    rhs.push(0.0);
                }
            }
        }
    }
    (rows, rhs)
}

fn residual_norm(a: &[Vec<f64>], b: &[f64], w: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(row, bi)| {
            let r = bi - row.iter().zip(w).map(|(p, q)| p * q).sum::<f64>();
            r * r
        })
        .sum::<f64>()
        .sqrt()
}

/// One least-norm correction `w_F += A_F⁺ r` on the support of `w`.
fn polish(a: &[Vec<f64>], b: &[f64], w: &mut [f64], tol: &ToleranceConfig) {
    let support: Vec<usize> = (0..w.len()).filter(|&i| w[i] > 0.0).collect();
    if support.is_empty() {
        return;
    }
    let r: Vec<f64> = a
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| bi - row.iter().zip(w.iter()).map(|(p, q)| p * q).sum::<f64>())
        .collect();
    let m = a.len();
    let aat =
        DenseMatrix::from_fn(m, m, Field::Real, |i, j| support.iter().map(|&c| a[i][c] * a[j][c]).sum::<f64>().into());
    let Ok(eig) = hermitian_eig(&aat, tol) else { return };
    let top = eig.max_value();
    let pinv = eig.reconstruct_with(|l| if l > 1e-12 * top { 1.0 / l } else { 0.0 });
    let y: Vec<f64> = (0..m).map(|i| (0..m).map(|j| pinv[(i, j)].re * r[j]).sum()).collect();
    for &c in &support {
        w[c] += (0..m).map(|i| a[i][c] * y[i]).sum::<f64>();
        w[c] = w[c].max(0.0);
    }
}

/// Nonnegative least-squares search for Parseval scalings. Zero vectors get
/// scale 0. Infeasibility is reported through `feasible` and `residual`.
pub fn scale_to_parseval(f: &Frame, tol: &ToleranceConfig) -> Result<ScalingSolution> {
    let (a, b) = linear_system(f);
    let (w, residual) = nnls(&a, &b);
    if residual > tol.eq_tol {
        return Ok(ScalingSolution { feasible: false, scales: w.iter().map(|v| v.sqrt()).collect(), residual });
    }

    // Penalized problem: equations weighted heavily, plus ‖w - 1‖.
    let m = f.len();
    let weight = 1e5;
    let mut pa: Vec<Vec<f64>> = a.iter().map(|row| row.iter().map(|v| weight * v).collect()).collect();
    let mut pb: Vec<f64> = b.iter().map(|v| weight * v).collect();
    for i in 0..m {
        let mut row = vec![0.0; m];
        row[i] = 1.0;
        pa.push(row);
        pb.push(if f.vector(i).iter().all(|z| *z == 0.0.into()) { 0.0 } else { 1.0 });
    }
    let (mut near, _) = nnls(&pa, &pb);
    for _ in 0..2 {
        polish(&a, &b, &mut near, tol);
    }
    let near_residual = residual_norm(&a, &b, &near);
    let (w, residual) =
        if near_residual <= residual.max(tol.eq_tol * 1e-2) { (near, near_residual) } else { (w, residual) };
    Ok(ScalingSolution { feasible: true, scales: w.iter().map(|v| v.sqrt()).collect(), residual })
}
