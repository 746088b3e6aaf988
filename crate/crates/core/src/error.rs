use thiserror::Error;

/// Everything that can go wrong while building or checking a resolution.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ideal is not Artinian: no pure power of z{variable}")]
    NotArtinian { variable: usize },
    #[error("operation requires n = {expected}, found n = {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("staircase corners are not strictly monotone")]
    NotAStaircase,
    #[error("empty component list")]
    EmptyComponents,
    #[error("box does not dominate the pure powers of the ideal")]
    BoxTooSmall,
    #[error("lift base t = {t} is below the bound {bound}")]
    LiftBaseTooSmall { t: u64, bound: u64 },
    #[error("hull degeneracy: {0}")]
    HullDegeneracy(String),
    #[error("{count} generators exceed the brute-force bound {bound}")]
    TooManyGenerators { count: usize, bound: usize },
    #[error("invalid cell complex: {0}")]
    InvalidComplex(String),
    #[error("face {tau:?} is not a facet of {sigma:?}")]
    NotAFacet { tau: Vec<usize>, sigma: Vec<usize> },
    #[error("degenerate orientation basis on face {0:?}")]
    DegenerateOrientation(Vec<usize>),
    #[error("faces have different dimensions ({0} vs {1})")]
    DimensionMismatch(i32, i32),
    #[error("faces do not span the same subspace")]
    SpanMismatch,
    #[error("reference complex is not the face complex of a single simplex")]
    NotASimplexComplex,
    #[error("refinement precondition violated: {0}")]
    NotARefinement(String),
    #[error("boundary of boundary is nonzero at degree {degree} (face {face:?})")]
    NonzeroSquare { degree: i32, face: Vec<usize> },
    #[error("cellular complex is not exact (witness {witness:?})")]
    NotExact { witness: Vec<u32> },
    #[error("comparison maps do not commute at k = {k} (column face {face:?})")]
    NotCommuting { k: i32, face: Vec<usize> },
    #[error("matrix dimension mismatch: {0}")]
    MatrixShape(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
