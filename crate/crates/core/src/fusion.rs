//! Fusion frames: weighted families of subspaces.
//!
//! A subspace is stored through an orthonormal basis, obtained by
//! Gram–Schmidt on the vectors supplied at construction. An optional local
//! frame may be attached to each subspace.

use crate::error::{FrameError, Result};
use crate::frames::{bounds_from_spectrum, frame_bounds, frame_spectrum, spans, Frame, FrameBounds};
use crate::numerics::{gram_schmidt, hermitian_eig, inner, norm, DenseMatrix, Field, ToleranceConfig, Vector, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct FusionSubspace {
    /// Orthonormal basis of `W_i`.
    pub basis: Vec<Vector>,
    /// `v_i > 0`.
    pub weight: f64,
    /// Local frame `{φ_ij}` for `W_i`, if any.
    pub local: Option<Vec<Vector>>,
}

impl FusionSubspace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `P_{W_i} x`.
    pub fn project(&self, x: &[C64]) -> Vector {
        let mut out = vec![C64::new(0.0, 0.0); x.len()];
        for e in &self.basis {
            let c = inner(x, e);
            for (o, ei) in out.iter_mut().zip(e) {
                *o += c * ei;
            }
        }
        out
    }

    /// Coordinates of `x` in the stored basis.
    fn coordinates(&self, x: &[C64]) -> Vector {
        self.basis.iter().map(|e| inner(x, e)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FusionFrame {
    dim: usize,
    field: Field,
    subspaces: Vec<FusionSubspace>,
}

/// Optimal constants `C ≤ D` with `C Id ≤ S_W ≤ D Id`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FusionBounds {
    pub lower: f64,
    pub upper: f64,
}

fn check_dims(dim: usize, vectors: &[Vector]) -> Result<()> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(FrameError::DimMismatch { expected: dim, found: v.len() }),
        None => Ok(()),
    }
}

fn field_of(vectors: &[Vector]) -> Field {
    if vectors.iter().flatten().any(|z| z.im != 0.0) {
        Field::Complex
    } else {
        Field::Real
    }
}

impl FusionFrame {
    /// Each entry is a spanning set for `W_i` (linearly independent) and a
    /// weight. `field` is widened to complex if any entry is complex.
    pub fn new(dim: usize, field: Field, parts: Vec<(Vec<Vector>, f64)>, tol: &ToleranceConfig) -> Result<Self> {
        Self::build(dim, field, parts.into_iter().map(|(b, w)| (b, w, None)).collect(), tol)
    }

    /// As [`FusionFrame::new`], with a local frame for every subspace.
    pub fn with_local_frames(
        dim: usize,
        field: Field,
        parts: Vec<(Vec<Vector>, f64, Vec<Vector>)>,
        tol: &ToleranceConfig,
    ) -> Result<Self> {
        Self::build(dim, field, parts.into_iter().map(|(b, w, l)| (b, w, Some(l))).collect(), tol)
    }

    #[allow(clippy::type_complexity)]
    fn build(
        dim: usize,
        mut field: Field,
        parts: Vec<(Vec<Vector>, f64, Option<Vec<Vector>>)>,
        tol: &ToleranceConfig,
    ) -> Result<Self> {
        if parts.is_empty() || dim == 0 {
            return Err(FrameError::EmptyFrame);
        }
        let mut subspaces = Vec::with_capacity(parts.len());
        for (index, (spanning, weight, local)) in parts.into_iter().enumerate() {
            if !(weight.is_finite() && weight > 0.0) {
                return Err(FrameError::NonPositiveWeight { index });
            }
            if spanning.is_empty() {
                return Err(FrameError::BadParams(format!("subspace {index} has no spanning vectors")));
            }
            check_dims(dim, &spanning)?;
            field = field.join(field_of(&spanning));
            let basis = gram_schmidt(&spanning, tol)?;
            let sub = FusionSubspace { basis, weight, local: None };
            let local = match local {
                None => None,
                Some(vectors) => {
                    check_dims(dim, &vectors)?;
                    field = field.join(field_of(&vectors));
                    for (j, v) in vectors.iter().enumerate() {
                        let p = sub.project(v);
                        let off: f64 = v.iter().zip(&p).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
                        if off > tol.eq_tol * norm(v).max(1.0) {
                            return Err(FrameError::LocalOutsideSubspace { subspace: index, vector: j });
                        }
                    }
                    Some(vectors)
                }
            };
            subspaces.push(FusionSubspace { local, ..sub });
        }
        Ok(Self { dim, field, subspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn subspaces(&self) -> &[FusionSubspace] {
        &self.subspaces
    }

    pub fn has_local_frames(&self) -> bool {
        self.subspaces.iter().all(|s| s.local.is_some())
    }

    /// `{v_i e_ij}`: every stored basis vector scaled by its weight.
    pub fn weighted_basis_frame(&self) -> Result<Frame> {
        let vectors = self
            .subspaces
            .iter()
            .flat_map(|s| s.basis.iter().map(move |e| e.iter().map(|z| z * s.weight).collect()))
            .collect();
        Frame::new(self.dim, vectors, self.field)
    }

    /// `{v_i φ_ij}` over all local frames; `None` without local frames.
    pub fn flattened_local_frame(&self) -> Option<Result<Frame>> {
        if !self.has_local_frames() {
            return None;
        }
        let vectors = self
            .subspaces
            .iter()
            .flat_map(|s| s.local.iter().flatten().map(move |v| v.iter().map(|z| z * s.weight).collect()))
            .collect();
        Some(Frame::new(self.dim, vectors, self.field))
    }
}

/// `S_W = Σ v_i² P_{W_i}`.
pub fn fusion_operator(ff: &FusionFrame) -> DenseMatrix {
    let n = ff.dim;
    let mut s = DenseMatrix::zeros(n, n, ff.field);
    for sub in &ff.subspaces {
        let w2 = sub.weight * sub.weight;
        for e in &sub.basis {
            for r in 0..n {
                for c in 0..n {
                    s[(r, c)] += e[r] * e[c].conj() * w2;
                }
            }
        }
    }
    s
}

/// Extreme eigenvalues of `S_W`, clamped at zero.
pub fn fusion_bounds(ff: &FusionFrame, tol: &ToleranceConfig) -> Result<FusionBounds> {
    let eig = hermitian_eig(&fusion_operator(ff), tol)?;
    let b = bounds_from_spectrum(&eig);
    Ok(FusionBounds { lower: b.lower, upper: b.upper })
}

/// The lower fusion bound is positive (relative to `rank_tol`).
pub fn is_fusion_frame(ff: &FusionFrame, tol: &ToleranceConfig) -> Result<bool> {
    let b = fusion_bounds(ff, tol)?;
    Ok(spans(&FrameBounds { lower: b.lower, upper: b.upper }, tol))
}

/// `(Σ v_i² dim W_i) / N`, which equals the bound of a tight fusion frame.
pub fn tight_redundancy(ff: &FusionFrame, tol: &ToleranceConfig) -> Result<f64> {
    let b = fusion_bounds(ff, tol)?;
    if b.lower <= 0.0 || !tol.approx_eq(b.lower, b.upper) {
        return Err(FrameError::NotTight { lower: b.lower, upper: b.upper });
    }
    let total: f64 = ff.subspaces.iter().map(|s| s.weight * s.weight * s.rank() as f64).sum();
    Ok(total / ff.dim as f64)
}

/// `{v_i P_{W_i} x}`.
pub fn fusion_analysis(ff: &FusionFrame, x: &[C64]) -> Result<Vec<Vector>> {
    if x.len() != ff.dim {
        return Err(FrameError::DimMismatch { expected: ff.dim, found: x.len() });
    }
    Ok(ff.subspaces.iter().map(|s| s.project(x).into_iter().map(|z| z * s.weight).collect()).collect())
}

/// Bounds relating a fusion frame to the flattened family of its weighted
/// local frames.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalGlobalReport {
    /// `A = inf A_i`.
    pub local_lower: f64,
    /// `B = sup B_i`.
    pub local_upper: f64,
    /// `(C, D)`.
    pub fusion: FusionBounds,
    /// `(C', D')`, bounds of `{v_i φ_ij}`.
    pub flattened: FrameBounds,
    /// `A C ≤ C'`.
    pub lower_from_fusion: bool,
    /// `D' ≤ B D`.
    pub upper_from_fusion: bool,
    /// `C' / B ≤ C`.
    pub lower_from_flattened: bool,
    /// `D ≤ D' / A`.
    pub upper_from_flattened: bool,
}

impl LocalGlobalReport {
    pub fn all_hold(&self) -> bool {
        self.lower_from_fusion && self.upper_from_fusion && self.lower_from_flattened && self.upper_from_flattened
    }
}

fn le(a: f64, b: f64, tol: &ToleranceConfig) -> bool {
    a <= b + tol.eq_tol * a.abs().max(b.abs()).max(1.0)
}

/// Compares fusion bounds with the frame bounds of the flattened local
/// frames. Local bounds are computed in coordinates of each subspace.
pub fn local_global_check(ff: &FusionFrame, tol: &ToleranceConfig) -> Result<LocalGlobalReport> {
    let Some(flat) = ff.flattened_local_frame() else {
        return Err(FrameError::BadParams("every subspace needs a local frame".into()));
    };
    let flat = flat?;
    let (mut a, mut b) = (f64::INFINITY, 0.0f64);
    for (index, sub) in ff.subspaces.iter().enumerate() {
        let local = sub.local.as_deref().unwrap_or_default();
        if local.is_empty() {
            return Err(FrameError::LocalNotFrame { subspace: index });
        }
        let coords: Vec<Vector> = local.iter().map(|v| sub.coordinates(v)).collect();
        let lf = Frame::new(sub.rank(), coords, ff.field)?;
        let bounds = bounds_from_spectrum(&frame_spectrum(&lf, tol)?);
        if !spans(&bounds, tol) {
            return Err(FrameError::LocalNotFrame { subspace: index });
        }
        a = a.min(bounds.lower);
        b = b.max(bounds.upper);
    }
    let fusion = fusion_bounds(ff, tol)?;
    let flattened = frame_bounds(&flat, tol)?;
    Ok(LocalGlobalReport {
        local_lower: a,
        local_upper: b,
        fusion,
        flattened,
        lower_from_fusion: le(a * fusion.lower, flattened.lower, tol),
        upper_from_fusion: le(flattened.upper, b * fusion.upper, tol),
        lower_from_flattened: le(flattened.lower / b, fusion.lower, tol),
        upper_from_flattened: le(fusion.upper, flattened.upper / a, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::standard_basis;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn e(n: usize, i: usize) -> Vector {
        standard_basis(n)[i].clone()
    }

    fn overlapping() -> FusionFrame {
        FusionFrame::new(3, Field::Real, vec![(vec![e(3, 0), e(3, 1)], 1.0), (vec![e(3, 1), e(3, 2)], 1.0)], &tol())
            .unwrap()
    }

    #[test]
    fn operator_examples() {
        let t = tol();
        let basis = FusionFrame::new(3, Field::Real, (0..3).map(|i| (vec![e(3, i)], 1.0)).collect(), &t).unwrap();
        assert_eq!(fusion_operator(&basis), DenseMatrix::identity(3, Field::Real));
        assert_eq!(fusion_operator(&overlapping()), DenseMatrix::diagonal(&[1.0, 2.0, 1.0]));
        let twice =
            FusionFrame::new(2, Field::Real, vec![(standard_basis(2), 1.0), (standard_basis(2), 1.0)], &t).unwrap();
        assert_eq!(fusion_operator(&twice), DenseMatrix::diagonal(&[2.0, 2.0]));
        assert_eq!(tight_redundancy(&twice, &t).unwrap(), 2.0);
    }

    #[test]
    fn bounds_and_redundancy() {
        let t = tol();
        let b = fusion_bounds(&overlapping(), &t).unwrap();
        assert_eq!((b.lower, b.upper), (1.0, 2.0));
        assert!(matches!(tight_redundancy(&overlapping(), &t), Err(FrameError::NotTight { .. })));
        let single = FusionFrame::new(2, Field::Real, vec![(vec![e(2, 0)], 1.0)], &t).unwrap();
        assert_eq!(fusion_bounds(&single, &t).unwrap().lower, 0.0);
        assert!(!is_fusion_frame(&single, &t).unwrap());
        let r2 = 2f64.sqrt();
        let scaled = FusionFrame::new(2, Field::Real, vec![(vec![e(2, 0)], r2), (vec![e(2, 1)], r2)], &t).unwrap();
        assert!((tight_redundancy(&scaled, &t).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn analysis() {
        let t = tol();
        let basis = FusionFrame::new(2, Field::Real, vec![(vec![e(2, 0)], 1.0), (vec![e(2, 1)], 1.0)], &t).unwrap();
        let x = vec![C64::new(3.0, 0.0), C64::new(4.0, 0.0)];
        let parts = fusion_analysis(&basis, &x).unwrap();
        assert_eq!(parts[0], vec![C64::new(3.0, 0.0), C64::new(0.0, 0.0)]);
        assert_eq!(parts[1], vec![C64::new(0.0, 0.0), C64::new(4.0, 0.0)]);
        let parts = fusion_analysis(&overlapping(), &e(3, 1)).unwrap();
        assert_eq!(parts, vec![e(3, 1), e(3, 1)]);
        assert!(fusion_analysis(&overlapping(), &[C64::new(0.0, 0.0); 3])
            .unwrap()
            .iter()
            .flatten()
            .all(|z| z.norm() == 0.0));
        assert!(fusion_analysis(&overlapping(), &x).is_err());
    }

    #[test]
    fn construction_errors() {
        let t = tol();
        assert_eq!(
            FusionFrame::new(2, Field::Real, vec![(vec![e(2, 0)], 0.0)], &t),
            Err(FrameError::NonPositiveWeight { index: 0 })
        );
        assert_eq!(
            FusionFrame::with_local_frames(2, Field::Real, vec![(vec![e(2, 0)], 1.0, vec![e(2, 1)])], &t),
            Err(FrameError::LocalOutsideSubspace { subspace: 0, vector: 0 })
        );
        assert!(FusionFrame::new(2, Field::Real, vec![(vec![e(3, 0)], 1.0)], &t).is_err());
        assert!(FusionFrame::new(2, Field::Real, vec![], &t).is_err());
    }

    #[test]
    fn local_global() {
        let t = tol();
        let ff = FusionFrame::with_local_frames(
            3,
            Field::Real,
            vec![
                (vec![e(3, 0), e(3, 1)], 1.0, vec![e(3, 0), e(3, 0), e(3, 1), e(3, 1)]),
                (vec![e(3, 2)], 1.0, vec![e(3, 2)]),
            ],
            &t,
        )
        .unwrap();
        let r = local_global_check(&ff, &t).unwrap();
        assert_eq!((r.local_lower, r.local_upper), (1.0, 2.0));
        assert!(r.all_hold());

        let onb = FusionFrame::with_local_frames(
            3,
            Field::Real,
            vec![
                (vec![e(3, 0), e(3, 1)], 1.0, vec![e(3, 0), e(3, 1)]),
                (vec![e(3, 1), e(3, 2)], 1.0, vec![e(3, 1), e(3, 2)]),
            ],
            &t,
        )
        .unwrap();
        let r = local_global_check(&onb, &t).unwrap();
        assert_eq!((r.flattened.lower, r.flattened.upper), (r.fusion.lower, r.fusion.upper));

        let missing =
            FusionFrame::with_local_frames(2, Field::Real, vec![(vec![e(2, 0), e(2, 1)], 1.0, vec![e(2, 0)])], &t)
                .unwrap();
        assert_eq!(local_global_check(&missing, &t), Err(FrameError::LocalNotFrame { subspace: 0 }));
    }
}
