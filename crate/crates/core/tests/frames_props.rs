mod common;

use common::*;
use framekit::construct::random_parseval;
use framekit::frames::{
    analysis, canonical_dual, canonical_parseval, frame_bounds, frame_distance, frame_operator, frame_spectrum,
    gramian, is_dual_pair, is_frame, make_alternate_dual, minimal_coefficients, naimark_complete, nearest_equal_norm,
    nearest_parseval, synthesize,
};
use framekit::numerics::{hermitian_eig, norm_sq, Field, ToleranceConfig};
use framekit::Frame;
use proptest::prelude::*;

fn field(complex: bool) -> Field {
    if complex {
        Field::Complex
    } else {
        Field::Real
    }
}

/// Random frame with `m ≥ n`, retried until it spans comfortably.
fn spanning_frame(seed: u64, n: usize, extra: usize, complex: bool) -> Frame {
    let t = ToleranceConfig::default();
    let mut r = rng(seed);
    loop {
        let f = random_frame(&mut r, n, n + extra, field(complex));
        let b = frame_bounds(&f, &t).unwrap();
        if b.lower > 1e-4 * b.upper {
            return f;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frame_inequality_and_energy(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=6, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = spanning_frame(seed, n, extra, complex);
        let b = frame_bounds(&f, &t).unwrap();
        let s = frame_operator(&f);
        let mut r = rng(seed.wrapping_add(1));
        for _ in 0..50 {
            let x = random_vector(&mut r, n, f.field());
            let energy = analysis(&f, &x).unwrap().norm_sq();
            let sx = s.mul_vec(&x);
            prop_assert!((dot(&sx, &x).re - energy).abs() <= 1e-9 * energy.max(1.0));
            let xx = norm_sq(&x);
            prop_assert!(b.lower * xx <= energy + 1e-9 * energy.max(1.0));
            prop_assert!(energy <= b.upper * xx + 1e-9 * energy.max(1.0));
        }
        let eig = frame_spectrum(&f, &t).unwrap();
        let top = analysis(&f, &eig.vectors[0]).unwrap().norm_sq();
        let bottom = analysis(&f, &eig.vectors[n - 1]).unwrap().norm_sq();
        prop_assert!((top - b.upper).abs() <= 1e-9 * b.upper.max(1.0));
        prop_assert!((bottom - b.lower).abs() <= 1e-9 * b.upper.max(1.0));
    }

    #[test]
    fn reconstruction_both_ways(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=6, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = spanning_frame(seed, n, extra, complex);
        let dual = canonical_dual(&f, &t).unwrap();
        let x = random_vector(&mut rng(!seed), n, f.field());
        let a = analysis(&dual, &x).unwrap();
        let y = synthesize(&f, a.entries()).unwrap();
        let diff: Vec<_> = x.iter().zip(&y).map(|(p, q)| p - q).collect();
        prop_assert!(vnorm(&diff) <= 1e-8 * vnorm(&x).max(1.0));
        let b = analysis(&f, &x).unwrap();
        let y = synthesize(&dual, b.entries()).unwrap();
        let diff: Vec<_> = x.iter().zip(&y).map(|(p, q)| p - q).collect();
        prop_assert!(vnorm(&diff) <= 1e-8 * vnorm(&x).max(1.0));
        let m = minimal_coefficients(&f, &x, &t).unwrap();
        prop_assert!(m.entries().iter().zip(a.entries()).all(|(p, q)| (p - q).norm() <= 1e-9 * (1.0 + q.norm())));
    }

    #[test]
    fn trace_identity(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=6, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = spanning_frame(seed, n, extra, complex);
        let lambda: f64 = frame_spectrum(&f, &t).unwrap().values.iter().sum();
        let norms: f64 = f.vectors().iter().map(|v| norm_sq(v)).sum();
        prop_assert!((lambda - norms).abs() <= 1e-9 * norms.max(1.0));
    }

    #[test]
    fn parseval_gramian_is_projection(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=8) {
        let t = ToleranceConfig::default();
        let f = random_parseval(n, n + extra, seed, &t).unwrap();
        let total: f64 = f.vectors().iter().map(|v| norm_sq(v)).sum();
        prop_assert!((total - n as f64).abs() <= 1e-9);
        let g = gramian(&f);
        prop_assert!(frob_diff(&naive_mul(&g, &g), &to_rows(&g)) <= 1e-9);
        prop_assert!(g.hermitian_defect() <= 1e-12);
        let eig = hermitian_eig(&g, &t).unwrap();
        let invertible = eig.min_value() > t.rank_tol * eig.max_value();
        prop_assert_eq!(invertible, extra == 0);
    }

    #[test]
    fn parseval_removal(seed in any::<u64>(), n in 1usize..=5, extra in 0usize..=5) {
        let t = ToleranceConfig::default();
        let f = random_parseval(n, n + extra, seed, &t).unwrap();
        for i in 0..f.len() {
            let len2 = norm_sq(f.vector(i));
            let spans = f.without(i).map(|g| is_frame(&g, &t).unwrap()).unwrap_or(false);
            if len2 < 1.0 - 1e-6 {
                prop_assert!(spans, "vector {} has squared norm {}", i, len2);
            } else if len2 > 1.0 - 1e-12 {
                prop_assert!(!spans);
            }
        }
    }

    #[test]
    fn duality_survives_joint_permutation(seed in any::<u64>(), n in 1usize..=5, extra in 0usize..=5, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = spanning_frame(seed, n, extra, complex);
        let g = canonical_dual(&f, &t).unwrap();
        prop_assert!(is_dual_pair(&f, &g, &t).unwrap());
        let mut order: Vec<usize> = (0..f.len()).collect();
        order.reverse();
        order.rotate_left(seed as usize % f.len());
        prop_assert!(is_dual_pair(&f.permuted(&order), &g.permuted(&order), &t).unwrap());
    }

    #[test]
    fn naimark_rows(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=8) {
        let t = ToleranceConfig::default();
        let f = random_parseval(n, n + extra, seed, &t).unwrap();
        let u = naimark_complete(&f, &t).unwrap();
        let m = f.len();
        prop_assert!(frob_diff(&naive_mul(&u.adjoint(), &u), &identity_rows(m)) <= 1e-10);
        for (k, row) in (0..n).map(|k| (k, u.row(k))) {
            for i in 0..m {
                prop_assert_eq!(row[i], f.vector(i)[k]);
            }
        }
    }

    #[test]
    fn nearest_frames(seed in any::<u64>(), n in 1usize..=5, extra in 0usize..=5) {
        let t = ToleranceConfig::default();
        let f = spanning_frame(seed, n, extra, false);
        let (p, d) = nearest_parseval(&f, &t).unwrap();
        let b = frame_bounds(&p, &t).unwrap();
        prop_assert!((b.lower - 1.0).abs() < 1e-9 && (b.upper - 1.0).abs() < 1e-9);
        prop_assert!((frame_distance(&f, &p).unwrap() - d).abs() <= 1e-9 * d.max(1.0));
        // The canonical Parseval frame is at least as close as any seeded Parseval frame.
        let other = random_parseval(n, f.len(), seed, &t).unwrap();
        prop_assert!(d <= frame_distance(&f, &other).unwrap() + 1e-9);
        let q = canonical_parseval(&f, &t).unwrap();
        prop_assert!(frame_distance(&p, &q).unwrap() <= 1e-18);
        let e = nearest_equal_norm(&f).unwrap();
        let norms = e.norms();
        prop_assert!(norms.iter().all(|a| (a - norms[0]).abs() <= 1e-12 * norms[0].max(1.0)));
    }

    #[test]
    fn alternate_duals(seed in any::<u64>(), n in 1usize..=4, extra in 1usize..=5) {
        let t = ToleranceConfig::default();
        let f = random_parseval(n, n + extra, seed, &t).unwrap();
        let u = naimark_complete(&f, &t).unwrap();
        // Rows n.. of the completion are orthogonal to the synthesis rows; any
        // vectors whose synthesis rows lie there give an alternate dual.
        let psi = (0..f.len())
            .map(|i| {
                let mut w = vec![c(0.0, 0.0); n];
                w[0] = u[(n, i)];
                w
            })
            .collect();
        let psi = Frame::new(n, psi, Field::Real).unwrap();
        let g = make_alternate_dual(&f, &psi, &t).unwrap();
        prop_assert!(is_dual_pair(&f, &g, &t).unwrap());
    }
}
