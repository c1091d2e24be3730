//! Exact supertropical linear algebra.
//!
//! Scalars live in the standard supertropical semiring `R = T ∪ G ∪ {0_R}`
//! over the rationals, written additively: `⊕` is max (ghosting ties) and `⊙`
//! is `+`. On top of that the crate provides polynomials as functions,
//! determinants with dominant-permutation bookkeeping, adjoints and
//! quasi-inverses, characteristic polynomials with index sets, the
//! adjoint-column eigenvector construction and the tests for eigenvector
//! dependence, plus randomized law suites exercising the theory.

pub mod eigen;
pub mod error;
pub mod laws;
pub mod matrix;
pub mod permutation;
pub mod polynomial;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use eigen::{DependenceVerdict, Eigenvalue, Eigenvector, GeneralizedEigenReport, Spectrum};
pub use matrix::{CharPolyReport, DetResult, Matrix};
pub use permutation::Permutation;
pub use polynomial::{expand_primary_product, Factorization, NuInterval, Polynomial, Root, RootSet};
pub use scalar::{Layer, Scalar};
