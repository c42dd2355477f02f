//! Welch and Gerzon bounds and the parameter relations of real
//! equiangular tight frames.

use super::report::coherence;
use crate::error::{FrameError, Result};
use crate::frames::Frame;
use crate::numerics::{Field, ToleranceConfig};

/// `sqrt((M - N) / (N (M - 1)))`, the smallest possible coherence of `M`
/// unit vectors in dimension `N`.
pub fn welch_bound(count: usize, dim: usize) -> Result<f64> {
    if dim < 1 || count < dim || count < 2 {
        return Err(FrameError::BadParams(format!(
            "welch bound needs M >= N >= 1 and M >= 2, got M = {count}, N = {dim}"
        )));
    }
    let (m, n) = (count as f64, dim as f64);
    Ok(((m - n) / (n * (m - 1.0))).sqrt())
}

/// Whether a unit-norm frame meets the Welch bound with equality, which
/// happens exactly for equiangular tight frames.
pub fn welch_equality_check(f: &Frame, tol: &ToleranceConfig) -> Result<bool> {
    for (index, n) in f.norms().into_iter().enumerate() {
        if (n - 1.0).abs() > tol.eq_tol {
            return Err(FrameError::NotUnitNorm { index, norm: n });
        }
    }
    let bound = welch_bound(f.len(), f.dim())?;
    Ok((coherence(f) - bound).abs() <= tol.eq_tol)
}

/// Maximal number of equiangular lines: `N(N+1)/2` in `R^N`, `N²` in `C^N`.
pub fn gerzon_bound(dim: usize, field: Field) -> usize {
    match field {
        Field::Real => dim * (dim + 1) / 2,
        Field::Complex => dim * dim,
    }
}

/// Candidate parameters of a real equiangular tight frame: `count` vectors
/// in `R^dim` at angle `1/alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtfParams {
    pub dim: usize,
    pub count: usize,
    pub alpha: f64,
}

impl EtfParams {
    pub fn new(dim: usize, count: usize, alpha: f64) -> Result<Self> {
        if dim < 1 || count < 1 {
            return Err(FrameError::BadParams("dimension and count must be positive".into()));
        }
        if !(alpha.is_finite() && alpha > 1.0) {
            return Err(FrameError::BadParams(format!("alpha must exceed 1, got {alpha}")));
        }
        Ok(Self { dim, count, alpha })
    }

    /// Coherence `1/α`.
    pub fn angle(&self) -> f64 {
        1.0 / self.alpha
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtfItem {
    pub label: &'static str,
    pub statement: &'static str,
    /// False when the item's precondition `M ∉ {N+1, 2N}` does not hold.
    pub applicable: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EtfReport {
    /// `(α² - 1) N / (α² - N)`.
    pub predicted_count: f64,
    pub count_formula_holds: bool,
    pub items: Vec<EtfItem>,
}

impl EtfReport {
    pub fn all_passed(&self) -> bool {
        self.count_formula_holds && self.items.iter().all(|i| !i.applicable || i.passed)
    }

    pub fn item(&self, label: &str) -> Option<&EtfItem> {
        self.items.iter().find(|i| i.label == label)
    }
}

fn near(a: f64, b: f64, tol: &ToleranceConfig) -> bool {
    (a - b).abs() <= tol.eq_tol * a.abs().max(b.abs()).max(1.0)
}

fn as_integer(x: f64, tol: &ToleranceConfig) -> Option<i64> {
    let r = x.round();
    near(x, r, tol).then_some(r as i64)
}

fn sum_of_two_squares(k: i64) -> bool {
    if k < 0 {
        return false;
    }
    let mut a = 0i64;
    while a * a <= k {
        let rest = k - a * a;
        let b = (rest as f64).sqrt().round() as i64;
        if (b - 1..=b + 1).any(|c| c >= 0 && c * c == rest) {
            return true;
        }
        a += 1;
    }
    false
}

fn count_formula(alpha: f64, dim: f64) -> f64 {
    let a2 = alpha * alpha;
    (a2 - 1.0) * dim / (a2 - dim)
}

/// Evaluates the count formula and the consequences (a)-(h) that a real
/// equiangular tight frame with these parameters must satisfy. Items
/// (e)-(h) are marked not applicable when `M = N + 1` or `M = 2N`.
pub fn etf_param_check(p: &EtfParams, tol: &ToleranceConfig) -> Result<EtfReport> {
    let (n, m, alpha) = (p.dim as f64, p.count as f64, p.alpha);
    let a2 = alpha * alpha;
    if near(a2, n, tol) {
        return Err(FrameError::DegenerateAlpha);
    }
    let predicted = count_formula(alpha, n);
    let iff = |x: bool, y: bool| x == y;
    let general = p.count != p.dim + 1 && p.count != 2 * p.dim;
    let alpha_int = as_integer(alpha, tol);
    let beta = (m - 1.0) / alpha;
    let complement = p.count > p.dim && !near(beta * beta, m - n, tol) && near(count_formula(beta, m - n), m, tol);
    let items = vec![
        EtfItem {
            label: "a",
            statement: "alpha <= N <= alpha^2 - 2",
            applicable: true,
            passed: alpha <= n * (1.0 + tol.eq_tol) && n <= a2 - 2.0 + tol.eq_tol * a2,
        },
        EtfItem {
            label: "b",
            statement: "N = alpha iff M = N + 1",
            applicable: true,
            passed: iff(near(n, alpha, tol), p.count == p.dim + 1),
        },
        EtfItem {
            label: "c",
            statement: "N = alpha^2 - 2 iff M = N(N+1)/2",
            applicable: true,
            passed: iff(near(n, a2 - 2.0, tol), p.count == p.dim * (p.dim + 1) / 2),
        },
        EtfItem {
            label: "d",
            statement: "M = 2N iff alpha^2 = 2N - 1 = a^2 + b^2 for integers a, b",
            applicable: true,
            passed: iff(p.count == 2 * p.dim, near(a2, 2.0 * n - 1.0, tol) && sum_of_two_squares(2 * p.dim as i64 - 1)),
        },
        EtfItem {
            label: "e",
            statement: "alpha is an odd integer",
            applicable: general,
            passed: alpha_int.is_some_and(|a| a % 2 != 0),
        },
        EtfItem { label: "f", statement: "M is even", applicable: general, passed: p.count % 2 == 0 },
        EtfItem {
            label: "g",
            statement: "alpha divides M - 1",
            applicable: general,
            passed: alpha_int.is_some_and(|a| a > 0 && (p.count as i64 - 1) % a == 0),
        },
        EtfItem {
            label: "h",
            statement: "beta = (M - 1)/alpha satisfies the count formula for M vectors in dimension M - N",
            applicable: general,
            passed: complement,
        },
    ];
    Ok(EtfReport { predicted_count: predicted, count_formula_holds: near(predicted, m, tol), items })
}
