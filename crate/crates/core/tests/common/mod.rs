#![allow(dead_code)]

use framekit::numerics::{DenseMatrix, Field, C64};
use framekit::Frame;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn scalar(r: &mut ChaCha8Rng, field: Field) -> C64 {
    match field {
        Field::Real => c(r.random_range(-1.0..1.0), 0.0),
        Field::Complex => c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)),
    }
}

pub fn random_vector(r: &mut ChaCha8Rng, n: usize, field: Field) -> Vec<C64> {
    (0..n).map(|_| scalar(r, field)).collect()
}

pub fn random_frame(r: &mut ChaCha8Rng, n: usize, m: usize, field: Field) -> Frame {
    Frame::new(n, (0..m).map(|_| random_vector(r, n, field)).collect(), field).unwrap()
}

pub fn random_hermitian(r: &mut ChaCha8Rng, n: usize, field: Field) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(n, n, field);
    for i in 0..n {
        a[(i, i)] = c(r.random_range(-1.0..1.0), 0.0);
        for j in 0..i {
            let z = scalar(r, field);
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    a
}

/// Triple-loop product, independent of the library's `Mul`.
pub fn naive_mul(a: &DenseMatrix, b: &DenseMatrix) -> Vec<Vec<C64>> {
    (0..a.rows()).map(|i| (0..b.cols()).map(|j| (0..a.cols()).map(|k| a[(i, k)] * b[(k, j)]).sum()).collect()).collect()
}

pub fn frob_diff(a: &[Vec<C64>], b: &[Vec<C64>]) -> f64 {
    a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

pub fn to_rows(a: &DenseMatrix) -> Vec<Vec<C64>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a[(i, j)]).collect()).collect()
}

pub fn identity_rows(n: usize) -> Vec<Vec<C64>> {
    (0..n).map(|i| (0..n).map(|j| c(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect()
}

/// `Σ φ_i φ_i*` accumulated entry by entry.
pub fn naive_frame_operator(f: &Frame) -> Vec<Vec<C64>> {
    let n = f.dim();
    (0..n).map(|r| (0..n).map(|s| f.vectors().iter().map(|v| v[r] * v[s].conj()).sum()).collect()).collect()
}

pub fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn vnorm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn mercedes() -> Frame {
    let r = (2.0f64 / 3.0).sqrt();
    let h = 0.5f64.sqrt();
    Frame::real(2, vec![vec![0.0, r], vec![-h, -r / 2.0], vec![h, -r / 2.0]]).unwrap()
}

pub fn unit_mercedes() -> Frame {
    let s = 3f64.sqrt() / 2.0;
    Frame::real(2, vec![vec![0.0, 1.0], vec![-s, -0.5], vec![s, -0.5]]).unwrap()
}

pub fn e(n: usize, i: usize) -> Vec<C64> {
    (0..n).map(|k| c(if k == i { 1.0 } else { 0.0 }, 0.0)).collect()
}

/// Welch bound evaluated directly from its formula.
pub fn welch(m: usize, n: usize) -> f64 {
    ((m as f64 - n as f64) / (n as f64 * (m as f64 - 1.0))).sqrt()
}

/// Majorization decided by plain partial sums (no tolerance).
pub fn majorizes_brute(lambda: &[f64], a2: &[f64]) -> bool {
    let mut l = lambda.to_vec();
    let mut a = a2.to_vec();
    l.sort_by(|x, y| y.partial_cmp(x).unwrap());
    a.sort_by(|x, y| y.partial_cmp(x).unwrap());
    if a.len() < l.len() {
        return false;
    }
    let mut sl = 0.0;
    let mut sa = 0.0;
    for k in 0..l.len() {
        sl += l[k];
        sa += a[k];
        if sa > sl {
            return false;
        }
    }
    let tl: f64 = l.iter().sum();
    let ta: f64 = a.iter().sum();
    (tl - ta).abs() <= 1e-12 * tl.max(1.0)
}

/// Spectral Tetris output for N = 4, M = 11, worked out block by block.
pub fn tetris_4_11_matrix() -> Vec<Vec<f64>> {
    let s = |k: f64| (k / 8.0).sqrt();
    vec![
        vec![1.0, 1.0, s(3.0), s(3.0), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, s(5.0), -s(5.0), 1.0, s(2.0), s(2.0), 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 0.0, 0.0, s(6.0), -s(6.0), 1.0, s(1.0), s(1.0), 0.0],
        vec![0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, s(7.0), -s(7.0), 1.0],
    ]
}
