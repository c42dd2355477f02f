use super::matrix::DenseMatrix;
use super::scalar::{inner, norm, Field, Vector, C64};
use super::tolerance::ToleranceConfig;
use crate::error::{FrameError, Result};

/// Removes the components of `r` along the orthonormal `basis`, twice
/// (classical Gram–Schmidt with one reorthogonalization pass).
pub(crate) fn orthogonalize(r: &mut [C64], basis: &[Vector]) {
    for _ in 0..2 {
        for e in basis {
            let w = inner(r, e);
            for (ri, ei) in r.iter_mut().zip(e) {
                *ri -= w * ei;
            }
        }
    }
}

fn check_lengths(vectors: &[Vector]) -> Result<usize> {
    let n = vectors.first().map_or(0, Vec::len);
    for v in vectors {
        if v.len() != n {
            return Err(FrameError::DimMismatch { expected: n, found: v.len() });
        }
    }
    Ok(n)
}

/// Orthonormalizes an ordered, linearly independent list so that the
/// first `j` outputs span the same space as the first `j` inputs.
///
/// A vector whose residual falls to `rank_tol` times its own norm (or a
/// zero vector) is rejected with [`FrameError::DependentInput`].
pub fn gram_schmidt(vectors: &[Vector], tol: &ToleranceConfig) -> Result<Vec<Vector>> {
    check_lengths(vectors)?;
    let mut out: Vec<Vector> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        let mut r = v.clone();
        orthogonalize(&mut r, &out);
        let rn = norm(&r);
        if rn <= tol.rank_tol * norm(v) || rn == 0.0 {
            return Err(FrameError::DependentInput { index });
        }
        out.push(r.into_iter().map(|z| z / rn).collect());
    }
    Ok(out)
}

/// Orthonormal basis of `span(vectors)`; dependent and zero vectors are
/// skipped. A residual counts as new direction when it exceeds
/// `rank_tol` times the largest input norm.
pub fn orthonormal_basis(vectors: &[Vector], tol: &ToleranceConfig) -> Result<Vec<Vector>> {
    check_lengths(vectors)?;
    let top = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
    let mut out: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        orthogonalize(&mut r, &out);
        let rn = norm(&r);
        if rn > tol.rank_tol * top && rn > 0.0 {
            out.push(r.into_iter().map(|z| z / rn).collect());
        }
    }
    Ok(out)
}

/// Orthogonal projection `P = Σ e_k e_k*` onto `span(vectors)` in `H^dim`.
pub fn projection_onto_span(vectors: &[Vector], dim: usize, tol: &ToleranceConfig) -> Result<DenseMatrix> {
    for v in vectors {
        if v.len() != dim {
            return Err(FrameError::DimMismatch { expected: dim, found: v.len() });
        }
    }
    let field = vectors.iter().fold(Field::Real, |f, v| f.join(Field::of(v)));
    let basis = orthonormal_basis(vectors, tol)?;
    let mut p = DenseMatrix::zeros(dim, dim, field);
    for e in &basis {
        for i in 0..dim {
            for j in 0..dim {
                p[(i, j)] += e[i] * e[j].conj();
            }
        }
    }
    Ok(p)
}

/// Extends `K` orthonormal rows of length `m` to an `m x m` unitary matrix.
///
/// The first `K` rows of the result are the input rows, copied verbatim.
/// Remaining rows come from Gram–Schmidt over the standard basis, taking
/// at each step the candidate with the largest residual (lowest index on
/// ties).
pub fn unitary_complete(rows: &[Vector], m: usize, tol: &ToleranceConfig) -> Result<DenseMatrix> {
    for r in rows {
        if r.len() != m {
            return Err(FrameError::DimMismatch { expected: m, found: r.len() });
        }
    }
    if rows.len() > m {
        return Err(FrameError::NotOrthonormalInput { deviation: f64::INFINITY });
    }
    let mut deviation = 0.0f64;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate().skip(i) {
            let target = if i == j { 1.0 } else { 0.0 };
            deviation = deviation.max((inner(a, b) - target).norm());
        }
    }
    if deviation > tol.eq_tol {
        return Err(FrameError::NotOrthonormalInput { deviation });
    }
    let field = rows.iter().fold(Field::Real, |f, v| f.join(Field::of(v)));
    let mut basis: Vec<Vector> = rows.to_vec();
    let mut used = vec![false; m];
    while basis.len() < m {
        let mut best: Option<(usize, Vector, f64)> = None;
        for j in (0..m).filter(|&j| !used[j]) {
            let mut r = vec![C64::new(0.0, 0.0); m];
            r[j] = C64::new(1.0, 0.0);
            orthogonalize(&mut r, &basis);
            let rn = norm(&r);
            if best.as_ref().is_none_or(|(_, _, bn)| rn > bn * (1.0 + 1e-12)) {
                best = Some((j, r, rn));
            }
        }
        let (j, r, rn) = best.expect("standard basis spans H^m");
        used[j] = true;
        basis.push(r.into_iter().map(|z| z / rn).collect());
    }
    Ok(DenseMatrix::from_rows(&basis, m, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn rv(x: &[f64]) -> Vector {
        x.iter().map(|&v| C64::new(v, 0.0)).collect()
    }

    fn close(a: &[C64], b: &[C64], eps: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).norm() < eps)
    }

    #[test]
    fn gram_schmidt_examples() {
        let out = gram_schmidt(&[rv(&[1.0, 0.0]), rv(&[1.0, 1.0])], &tol()).unwrap();
        assert!(close(&out[0], &rv(&[1.0, 0.0]), 1e-15));
        assert!(close(&out[1], &rv(&[0.0, 1.0]), 1e-15));
        let single = gram_schmidt(&[rv(&[2.0, 0.0])], &tol()).unwrap();
        assert!(close(&single[0], &rv(&[1.0, 0.0]), 1e-15));
        let s = 0.6;
        let onb = vec![rv(&[s, 0.8]), rv(&[-0.8, s])];
        let same = gram_schmidt(&onb, &tol()).unwrap();
        assert!(close(&same[0], &onb[0], 1e-15) && close(&same[1], &onb[1], 1e-15));
    }

    #[test]
    fn gram_schmidt_reports_first_dependent_index() {
        let err = gram_schmidt(&[rv(&[1.0, 0.0]), rv(&[0.0, 1.0]), rv(&[1.0, 1.0])], &tol());
        assert_eq!(err, Err(FrameError::DependentInput { index: 2 }));
        let zero = gram_schmidt(&[rv(&[0.0, 0.0])], &tol());
        assert_eq!(zero, Err(FrameError::DependentInput { index: 0 }));
    }

    #[test]
    fn projection_examples() {
        let p = projection_onto_span(&[rv(&[1.0, 0.0])], 2, &tol()).unwrap();
        assert_eq!(p, DenseMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 0.0]]));
        let q = projection_onto_span(&[rv(&[1.0, 1.0])], 2, &tol()).unwrap();
        assert!(q.distance(&DenseMatrix::from_real_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]])) < 1e-15);
        let full =
            projection_onto_span(&[rv(&[1.0, 2.0]), rv(&[0.0, 0.0]), rv(&[2.0, 4.0]), rv(&[3.0, -1.0])], 2, &tol())
                .unwrap();
        assert!(full.distance(&DenseMatrix::identity(2, Field::Real)) < 1e-14);
    }

    #[test]
    fn unitary_completion_examples() {
        let u = unitary_complete(&[rv(&[1.0, 0.0])], 2, &tol()).unwrap();
        assert_eq!(u, DenseMatrix::identity(2, Field::Real));
        let s = 1.0 / 2f64.sqrt();
        let u = unitary_complete(&[rv(&[s, s])], 2, &tol()).unwrap();
        let second = u.row(1);
        assert!(close(&second, &rv(&[s, -s]), 1e-15) || close(&second, &rv(&[-s, s]), 1e-15));
        let full = vec![rv(&[0.6, 0.8]), rv(&[-0.8, 0.6])];
        let same = unitary_complete(&full, 2, &tol()).unwrap();
        assert_eq!(same.row_vectors(), full);
        assert!(matches!(unitary_complete(&[rv(&[1.0, 1.0])], 2, &tol()), Err(FrameError::NotOrthonormalInput { .. })));
    }
}
