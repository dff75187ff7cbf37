use thiserror::Error;

/// Errors raised by the library operations.
///
/// Vertex and matrix indices in messages are 1-based, matching the text
/// file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge multiplicity must be positive (edge {u}-{v})")]
    ZeroMultiplicity { u: usize, v: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("nonzero diagonal entry at ({i}, {i})")]
    NonzeroDiagonal { i: usize },
    #[error("point ({x}, {y}) lies outside [0,1]^2")]
    OutsideUnitSquare { x: String, y: String },
    #[error("matrix entries must lie in [0,1]")]
    NotUnitRange,
    #[error("matrix entries must be 0 or 1 (entry ({i}, {j}))")]
    NotZeroOne { i: usize, j: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("blow-up factor must be at least 1")]
    ZeroBlowUp,
    #[error("basis must be sorted by vertex count (position {position})")]
    BasisUnsorted { position: usize },
    #[error("basis is not closed under loopless quotients: missing quotient {missing} of basis element {element}")]
    BasisNotClosed { element: String, missing: String },
    #[error("multigraph with {vertices} vertices exceeds ambient size {ambient_n}")]
    TooManyVertices { vertices: usize, ambient_n: usize },
    #[error("not a class function: monomial {monomial} has coefficient {coefficient} but its image {image} has {image_coefficient}")]
    NotClassFunction {
        monomial: String,
        coefficient: String,
        image: String,
        image_coefficient: String,
    },
    #[error("polynomial is not homogeneous of degree {expected}: found a term of degree {found}")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("polynomial degree {degree} exceeds N = {max_degree}")]
    DegreeTooHigh { degree: u32, max_degree: u32 },
    #[error("coefficients are unique only when n >= 2N (n = {n}, N = {max_edges})")]
    NotUniqueRegime { n: usize, max_edges: u32 },
    #[error("base point must have entries in [0,1]")]
    BasePointOutOfRange,
    #[error("finite-difference evaluation point leaves [0,1]; try a step smaller than {step}")]
    StepTooLarge { step: String },
    #[error("matrix size {size} exceeds the limit {limit}")]
    SizeOverLimit { size: usize, limit: usize },
    #[error("no closed-form density for this multigraph in the target catalog")]
    NotInCatalog,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
