//! Spectral Tetris for unit-norm tight frames.
//!
//! The synthesis matrix is filled left to right. While the current row
//! still needs at least one unit of weight a column `e_row` is placed;
//! a fractional remainder `x < 1` is placed with the 2 x 2 block
//!
//! ```text
//! A(x) = [ sqrt(x/2)      sqrt(x/2)     ]
//!        [ sqrt(1 - x/2) -sqrt(1 - x/2) ]
//! ```
//!
//! which spends `x` on the current row and `2 - x` on the next one.
//! Row weights are tracked in integer units of `1/N`, so every branch is
//! decided exactly.

use crate::error::{FrameError, Result};
use crate::frames::Frame;
use crate::numerics::{DenseMatrix, Field, C64};

/// Sparse unit-norm tight frame of `count` vectors in `R^dim` with frame
/// operator `(count/dim) Id`. Each column has at most two nonzeros.
pub fn spectral_tetris(dim: usize, count: usize) -> Result<Frame> {
    if dim == 0 {
        return Err(FrameError::BadParams("dimension must be at least 1".into()));
    }
    if count < 2 * dim {
        return Err(FrameError::InsufficientRedundancy { dim, count });
    }
    let (n, m) = (dim as u64, count as u64);
    let mut t = DenseMatrix::zeros(dim, count, Field::Real);
    let mut row = 0usize;
    // Weight still owed to `row`, in units of 1/N; a full row holds M.
    let mut owed = m;
    let mut col = 0usize;
    while col < count {
        if owed == 0 {
            row += 1;
            owed = m;
        } else if owed >= n {
            t[(row, col)] = C64::new(1.0, 0.0);
            owed -= n;
            col += 1;
        } else {
            if row + 1 >= dim || col + 1 >= count {
                unreachable!("spectral tetris ran out of room; weights are exact so this cannot happen");
            }
            let top = (owed as f64 / (2 * n) as f64).sqrt();
            let bottom = ((2 * n - owed) as f64 / (2 * n) as f64).sqrt();
            t[(row, col)] = C64::new(top, 0.0);
            t[(row, col + 1)] = C64::new(top, 0.0);
            t[(row + 1, col)] = C64::new(bottom, 0.0);
            t[(row + 1, col + 1)] = C64::new(-bottom, 0.0);
            owed = m - (2 * n - owed);
            row += 1;
            col += 2;
        }
    }
    Frame::from_synthesis(&t)
}
