mod common;

use common::*;
use framekit::numerics::{
    gram_schmidt, hermitian_eig, inner, matrix_power, norm_sq, operator_norm, trace, unitary_complete, DenseMatrix,
    Field, ToleranceConfig,
};
use proptest::prelude::*;
use rand::Rng;

fn field(complex: bool) -> Field {
    if complex {
        Field::Complex
    } else {
        Field::Real
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigen_reconstruction(seed in any::<u64>(), n in 1usize..=12, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let a = random_hermitian(&mut rng(seed), n, field(complex));
        let eig = hermitian_eig(&a, &t).unwrap();
        let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
        prop_assert!(eig.reconstruct().distance(&a) <= 1e-11 * scale);
        for w in eig.values.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot(&eig.vectors[i], &eig.vectors[j]) - c(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn parseval_identity_and_pythagoras(seed in any::<u64>(), n in 1usize..=8, k in 1usize..=8, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = field(complex);
        let mut r = rng(seed);
        let k = k.min(n);
        let vs: Vec<_> = (0..k).map(|_| random_vector(&mut r, n, f)).collect();
        let Ok(basis) = gram_schmidt(&vs, &t) else { return Ok(()) };
        // Complete to a basis of the whole space to test Parseval's identity.
        let full = unitary_complete(&basis, n, &t).unwrap();
        let x = random_vector(&mut r, n, f);
        let energy: f64 = (0..n).map(|i| dot(&x, &full.row(i)).norm_sqr()).sum();
        prop_assert!((energy - norm_sq(&x)).abs() <= 1e-9 * norm_sq(&x).max(1.0));

        let scaled: Vec<Vec<_>> = basis
            .iter()
            .map(|e| {
                let a: f64 = r.random_range(-3.0..3.0);
                e.iter().map(|z| z * a).collect()
            })
            .collect();
        let sum: Vec<_> = (0..n).map(|i| scaled.iter().map(|v| v[i]).sum()).collect();
        let parts: f64 = scaled.iter().map(|v| norm_sq(v)).sum();
        prop_assert!((norm_sq(&sum) - parts).abs() <= 1e-9 * parts.max(1.0));
    }

    #[test]
    fn polarization(seed in any::<u64>(), n in 1usize..=6, complex in any::<bool>()) {
        let f = field(complex);
        let mut r = rng(seed);
        let x = random_vector(&mut r, n, f);
        let y = random_vector(&mut r, n, f);
        let add = |s: framekit::C64| -> Vec<_> { x.iter().zip(&y).map(|(a, b)| a + s * b).collect() };
        let lhs = inner(&x, &y);
        let rhs = if complex {
            let units = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
            units.iter().map(|u| u * norm_sq(&add(*u))).sum::<framekit::C64>() / 4.0
        } else {
            c((norm_sq(&add(c(1.0, 0.0))) - norm_sq(&add(c(-1.0, 0.0)))) / 4.0, 0.0)
        };
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn operator_norm_squares(seed in any::<u64>(), rows in 1usize..=7, cols in 1usize..=7, complex in any::<bool>()) {
        let f = field(complex);
        let mut r = rng(seed);
        let entries: Vec<_> = (0..rows).map(|_| random_vector(&mut r, cols, f)).collect();
        let a = DenseMatrix::from_rows(&entries, cols, f);
        let na = operator_norm(&a);
        let nb = operator_norm(&(&a.adjoint() * &a));
        prop_assert!((na * na - nb).abs() <= 1e-9 * nb.max(1.0));
    }

    #[test]
    fn trace_is_unitarily_invariant(seed in any::<u64>(), n in 1usize..=8, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = field(complex);
        let mut r = rng(seed);
        let entries: Vec<_> = (0..n).map(|_| random_vector(&mut r, n, f)).collect();
        let a = DenseMatrix::from_rows(&entries, n, f);
        let vs: Vec<_> = (0..n).map(|_| random_vector(&mut r, n, f)).collect();
        let Ok(q) = gram_schmidt(&vs, &t) else { return Ok(()) };
        let u = DenseMatrix::from_rows(&q, n, f);
        let conj = &(&u * &a) * &u.adjoint();
        prop_assert!((trace(&conj).unwrap() - trace(&a).unwrap()).norm() <= 1e-9 * a.frobenius_norm().max(1.0));
    }

    #[test]
    fn power_semigroup(seed in any::<u64>(), n in 1usize..=6, complex in any::<bool>()) {
        let t = ToleranceConfig::default();
        let f = field(complex);
        let mut r = rng(seed);
        let rows: Vec<_> = (0..n).map(|_| random_vector(&mut r, n, f)).collect();
        let b = DenseMatrix::from_rows(&rows, n, f);
        let shift = DenseMatrix::identity(n, f).scaled(c(0.1, 0.0));
        let pd = &(&b * &b.adjoint()) + &shift;
        for (x, y) in [(0.5, 0.5), (-0.5, 0.5), (1.0, 2.0), (-0.5, -0.5), (2.0, -0.5)] {
            let lhs = &matrix_power(&pd, x, &t).unwrap() * &matrix_power(&pd, y, &t).unwrap();
            let rhs = matrix_power(&pd, x + y, &t).unwrap();
            prop_assert!(lhs.distance(&rhs) <= 1e-9 * rhs.frobenius_norm().max(1.0));
        }
    }
}
