use num_complex::Complex64;

pub type C64 = Complex64;

/// A coordinate vector in `H^N`.
pub type Vector = Vec<C64>;

/// The scalar field of a Hilbert space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// The smallest field containing both.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Complex || other == Field::Complex {
            Field::Complex
        } else {
            Field::Real
        }
    }

    /// Field needed to hold `values` exactly.
    pub fn of(values: &[C64]) -> Field {
        if values.iter().all(|z| z.im == 0.0) {
            Field::Real
        } else {
            Field::Complex
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

/// `<x, y> = Σ x_k conj(y_k)`, linear in the first slot.
pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

/// Bilinear `Σ x_k y_k` (no conjugation).
pub fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm_sq(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

pub fn norm(x: &[C64]) -> f64 {
    norm_sq(x).sqrt()
}

pub fn scale(x: &[C64], a: C64) -> Vector {
    x.iter().map(|z| z * a).collect()
}

/// `y += a x`
pub fn add_scaled(y: &mut [C64], a: C64, x: &[C64]) {
    for (yk, xk) in y.iter_mut().zip(x) {
        *yk += a * xk;
    }
}

pub fn sub(x: &[C64], y: &[C64]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Rank-one matrix `x y*` in row-major order.
pub fn outer(x: &[C64], y: &[C64]) -> Vec<C64> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b.conj());
        }
    }
    out
}

pub fn standard_basis(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[i] = C64::new(1.0, 0.0);
            e
        })
        .collect()
}

/// Rotate `x` by a unit phase so that its first component of modulus above
/// `threshold` is real and positive. Zero vectors are left alone.
pub fn normalize_phase(x: &mut [C64], threshold: f64) {
    if let Some(lead) = x.iter().find(|z| z.norm() > threshold).copied() {
        let phase = lead.conj() / lead.norm();
        for z in x.iter_mut() {
            *z *= phase;
        }
        // Exact zero imaginary part on the leading entry and on real data.
        if let Some(z) = x.iter_mut().find(|z| z.norm() > threshold) {
            z.im = 0.0;
        }
    }
}
