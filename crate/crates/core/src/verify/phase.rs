//! Complement property and real phase retrieval.

use rayon::prelude::*;

use crate::error::{FrameError, Result};
use crate::frames::Frame;
use crate::numerics::{eigenvalues_lenient, DenseMatrix, Field, ToleranceConfig, C64};

/// Default cap on `M` for the exhaustive subset search.
pub const SUBSET_SEARCH_LIMIT: usize = 22;

fn subset_spans(f: &Frame, mask: u64, include: bool, tol: &ToleranceConfig) -> bool {
    let n = f.dim();
    let members: Vec<usize> = (0..f.len()).filter(|&i| ((mask >> i) & 1 == 1) == include).collect();
    if members.len() < n {
        return false;
    }
    let mut s = DenseMatrix::zeros(n, n, f.field());
    for &i in &members {
        let v = f.vector(i);
        for r in 0..n {
            for c in 0..n {
                s[(r, c)] += v[r] * v[c].conj();
            }
        }
    }
    let eig = eigenvalues_lenient(&s, tol.eig_offdiag_tol);
    let (top, bottom) = (eig[0], eig[n - 1]);
    top > 0.0 && bottom > tol.rank_tol * top
}

fn indices(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| (mask >> i) & 1 == 1).collect()
}

/// First subset `I` (0-based, never containing the last index) such that
/// neither `{φ_i}_{i∈I}` nor its complement spans, or `None` when the
/// complement property holds. Subsets are scanned in increasing bitmask
/// order; the scan is split across threads.
pub fn complement_property_witness(f: &Frame, limit: usize, tol: &ToleranceConfig) -> Result<Option<Vec<usize>>> {
    let (n, m) = (f.dim(), f.len());
    if m + 2 <= 2 * n {
        // Too few vectors: the first N - 1 and the rest are both short.
        return Ok(Some((0..n.saturating_sub(1).min(m)).collect()));
    }
    if m > limit || m > 63 {
        return Err(FrameError::TooLarge { count: m, limit: limit.min(63) });
    }
    let half = 1u64 << (m - 1);
    let bad = (0..half)
        .into_par_iter()
        .find_first(|&mask| !subset_spans(f, mask, true, tol) && !subset_spans(f, mask, false, tol));
    Ok(bad.map(|mask| indices(mask, m)))
}

pub fn complement_property_with_limit(f: &Frame, limit: usize, tol: &ToleranceConfig) -> Result<bool> {
    Ok(complement_property_witness(f, limit, tol)?.is_none())
}

/// For every split `I ∪ I^c` of the indices, one side spans `H^N`.
pub fn complement_property(f: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    complement_property_with_limit(f, SUBSET_SEARCH_LIMIT, tol)
}

/// A real frame recovers every signal up to sign from the moduli of its
/// coefficients exactly when it has the complement property.
pub fn does_phase_retrieval_real(f: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    if f.field() == Field::Complex || f.vectors().iter().flatten().any(|z: &C64| z.im != 0.0) {
        return Err(FrameError::ComplexUnsupported);
    }
    complement_property(f, tol)
}
