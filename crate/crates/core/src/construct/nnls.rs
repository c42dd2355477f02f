//! Lawson–Hanson active-set nonnegative least squares.

/// Least-squares solution of `a x ≈ b` (`a` given as rows) restricted to
/// the listed columns, via Householder QR. Columns whose pivot collapses
/// below `1e-13` of the largest column norm get coefficient zero.
fn least_squares(a: &[Vec<f64>], b: &[f64], cols: &[usize]) -> Vec<f64> {
    let m = a.len();
    let k = cols.len();
    let mut r: Vec<Vec<f64>> = (0..m).map(|i| cols.iter().map(|&j| a[i][j]).collect()).collect();
    let mut y = b.to_vec();
    let col_scale = (0..k).map(|j| (0..m).map(|i| r[i][j] * r[i][j]).sum::<f64>().sqrt()).fold(0.0, f64::max);
    let mut usable = vec![false; k];
    let mut row = 0;
    let mut pivots = Vec::new();
    for j in 0..k {
        if row >= m {
            break;
        }
        let alpha = (row..m).map(|i| r[i][j] * r[i][j]).sum::<f64>().sqrt();
        if alpha <= 1e-13 * col_scale || alpha == 0.0 {
            continue;
        }
        let sign = if r[row][j] >= 0.0 { 1.0 } else { -1.0 };
        let mut v: Vec<f64> = (row..m).map(|i| r[i][j]).collect();
        v[0] += sign * alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        for c in j..k {
            let dot: f64 = (row..m).map(|i| v[i - row] * r[i][c]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in row..m {
                r[i][c] -= f * v[i - row];
            }
        }
        let dot: f64 = (row..m).map(|i| v[i - row] * y[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in row..m {
            y[i] -= f * v[i - row];
        }
        usable[j] = true;
        pivots.push((row, j));
        row += 1;
    }
    let mut x = vec![0.0; k];
    for &(pr, pj) in pivots.iter().rev() {
        let mut s = y[pr];
        for &(_, qj) in pivots.iter().filter(|(_, qj)| *qj > pj) {
            s -= r[pr][qj] * x[qj];
        }
        x[pj] = s / r[pr][pj];
    }
    x
}

fn residual(a: &[Vec<f64>], b: &[f64], x: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(row, bi)| bi - row.iter().zip(x).map(|(p, q)| p * q).sum::<f64>()).collect()
}

/// Minimizes `‖a x - b‖₂` over `x ≥ 0`. `a` is given as rows, all of the
/// same length. Returns the minimizer and the residual norm.
pub fn nnls(a: &[Vec<f64>], b: &[f64]) -> (Vec<f64>, f64) {
    let n = a.first().map_or(0, Vec::len);
    let mut x = vec![0.0; n];
    let mut passive = vec![false; n];
    let a_norm = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let b_norm = b.iter().map(|v| v * v).sum::<f64>().sqrt();
    let grad_tol = 1e3 * f64::EPSILON * a_norm.max(1.0) * b_norm.max(1.0);
    let mut blocked = vec![false; n];

    for _ in 0..(3 * n + 10) {
        let r = residual(a, b, &x);
        let w: Vec<f64> = (0..n).map(|j| a.iter().zip(&r).map(|(row, ri)| row[j] * ri).sum()).collect();
        let pick = (0..n)
            .filter(|&j| !passive[j] && !blocked[j] && w[j] > grad_tol)
            .max_by(|&i, &j| w[i].total_cmp(&w[j]).then(j.cmp(&i)));
        let Some(j) = pick else { break };
        passive[j] = true;

        let mut first = true;
        loop {
            let cols: Vec<usize> = (0..n).filter(|&c| passive[c]).collect();
            let zs = least_squares(a, b, &cols);
            let mut z = vec![0.0; n];
            for (c, v) in cols.iter().zip(&zs) {
                z[*c] = *v;
            }
            if cols.iter().all(|&c| z[c] > 0.0) {
                x = z;
                blocked.iter_mut().for_each(|v| *v = false);
                break;
            }
            if first && z[j] <= 0.0 {
                // The new column does not help; skip it until x changes.
                passive[j] = false;
                blocked[j] = true;
                break;
            }
            first = false;
            let alpha =
                cols.iter().filter(|&&c| z[c] <= 0.0).map(|&c| x[c] / (x[c] - z[c])).fold(f64::INFINITY, f64::min);
            for c in 0..n {
                x[c] += alpha * (z[c] - x[c]);
            }
            for &c in &cols {
                if x[c] <= 1e-15 * (1.0 + x.iter().fold(0.0f64, |m, v| m.max(*v))) {
                    x[c] = 0.0;
                    passive[c] = false;
                }
            }
            if !passive.iter().any(|p| *p) {
                break;
            }
        }
    }
    let r = residual(a, b, &x);
    (x, r.iter().map(|v| v * v).sum::<f64>().sqrt())
}
