//! Finite frame theory over `R^N` and `C^N`.
//!
//! The crate is split along the lines of the theory:
//!
//! * [`numerics`]: dense Hermitian linear algebra (Jacobi eigensolver,
//!   matrix powers, projections, orthogonalization).
//! * [`frames`]: the [`Frame`] type and its operators: analysis, synthesis,
//!   frame operator, Gramian, duals, Naimark completion, nearest frames.
//! * [`construct`]: Spectral Tetris, simplices, prescribed spectrum and
//!   norms, random Parseval frames, scaling to Parseval.
//! * [`verify`]: reports and theorem checkers (Welch, Gerzon, ETF
//!   parameters, complement property, sparse Gram–Schmidt orderings).
//! * [`fusion`]: weighted subspace families.
//!
//! Every routine is a pure function of its inputs; tolerances are passed
//! explicitly through [`ToleranceConfig`].

pub mod construct;
pub mod error;
pub mod frames;
pub mod fusion;
pub mod numerics;
pub mod verify;

pub use error::{FrameError, Result};
pub use frames::{CoefficientVector, Frame, FrameBounds};
pub use fusion::FusionFrame;
pub use numerics::{DenseMatrix, Field, HermitianEigen, ToleranceConfig, Vector, C64};
