use thiserror::Error;

/// Errors raised by framekit operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("negative power of a singular matrix (smallest eigenvalue {min_eigenvalue:.3e})")]
    SingularForNegativePower { min_eigenvalue: f64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector {index} is linearly dependent on its predecessors")]
    DependentInput { index: usize },
    #[error("input rows are not orthonormal (deviation {deviation:.3e})")]
    NotOrthonormalInput { deviation: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("vectors do not form a frame (lower bound {lower:.3e}, upper bound {upper:.3e})")]
    NotAFrame { lower: f64, upper: f64 },
    #[error("ranges are not orthogonal (|T1* T2| = {deviation:.3e})")]
    NotOrthogonalRanges { deviation: f64 },
    #[error("vector {index} is zero")]
    ZeroVector { index: usize },
    #[error("frame is not Parseval (|S - Id| = {deviation:.3e})")]
    NotParseval { deviation: f64 },
    #[error("spectral tetris needs count >= 2 * dim (dim {dim}, count {count})")]
    InsufficientRedundancy { dim: usize, count: usize },
    #[error("spectrum does not majorize the squared norms")]
    MajorizationFails,
    #[error("matrix has rank {found}, expected {expected}")]
    WrongRank { expected: usize, found: usize },
    #[error("vector {index} has norm {norm}, expected unit norm")]
    NotUnitNorm { index: usize, norm: f64 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("alpha^2 equals the dimension; the ETF count formula is undefined")]
    DegenerateAlpha,
    #[error("{count} vectors exceed the exhaustive search limit {limit}")]
    TooLarge { count: usize, limit: usize },
    #[error("real phase retrieval check requires a real frame")]
    ComplexUnsupported,
    #[error("{count} vectors exceed the permutation search limit {limit}")]
    TooManyPermutations { count: usize, limit: usize },
    #[error("fusion frame is not tight (bounds {lower:.6e}, {upper:.6e})")]
    NotTight { lower: f64, upper: f64 },
    #[error("local family {subspace} is not a frame for its subspace")]
    LocalNotFrame { subspace: usize },
    #[error("local vector {vector} of subspace {subspace} lies outside the subspace")]
    LocalOutsideSubspace { subspace: usize, vector: usize },
    #[error("weight of subspace {index} is not strictly positive")]
    NonPositiveWeight { index: usize },
    #[error("a frame needs at least one vector")]
    EmptyFrame,
    #[error("tolerances must be finite and strictly positive")]
    InvalidTolerance,
}

pub type Result<T> = std::result::Result<T, FrameError>;
