//! Frame constructions.

mod completion;
mod nnls;
mod random;
mod scaling;
mod schur_horn;
mod tetris;

pub use completion::tight_completion;
pub use nnls::nnls;
pub use random::{gaussian_frame, random_parseval, simplex_frame};
pub use scaling::{scale_to_parseval, ScalingSolution};
pub use schur_horn::{
    equal_norm_with_operator, frame_with_spectrum_and_norms, gramian_factor_frame,
    hermitian_with_spectrum_and_diagonal, majorization_feasible, tight_spec_conditions, tight_spec_feasible, NormSpec,
    SpectrumSpec, TightSpecConditions,
};
pub use tetris::spectral_tetris;
