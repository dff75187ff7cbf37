//! Finite-dimensional calculus on graphons.
//!
//! Weighted graphs on `n` vertices embed into graphon space as step
//! functions. On that image this crate computes homomorphism and
//! injective densities exactly, decomposes permutation-invariant edge
//! polynomials into density bases, evaluates Gateaux derivatives
//! (symbolically and by finite differences), and computes cut and L1
//! norms.
//!
//! Numeric code is generic over [`Scalar`]; the aliases below fix the
//! exact rational instantiation used by the verification pipelines.

pub mod calculus;
pub mod classpoly;
pub mod combinatorics;
pub mod error;
pub mod harness;
pub mod homdensity;
pub mod io;
pub mod linalg;
pub mod multigraph;
pub mod norms;
pub mod scalar;
pub mod weighted_graph;

pub use classpoly::{EdgePolynomial, Monomial};
pub use error::{Error, Result};
pub use homdensity::{Basis, DensityCoefficients, TransformDirection, TransformMatrix};
pub use multigraph::{Multigraph, VertexPartition};
pub use scalar::{ratio, Rational, Scalar};
pub use weighted_graph::{DirectionMatrix, ValueMode, WeightedMatrix};

/// Exact weighted graph.
pub type RationalMatrix = WeightedMatrix<Rational>;
/// Exact perturbation direction.
pub type RationalDirection = DirectionMatrix<Rational>;
/// Floating-point weighted graph, used by finite-difference estimates.
pub type FloatMatrix = WeightedMatrix<f64>;
pub type FloatDirection = DirectionMatrix<f64>;
pub type RationalCoefficients = DensityCoefficients<Rational>;
pub type RationalPolynomial = EdgePolynomial<Rational>;
