//! Exact completion certificates for unimodular rows over commutative rings,
//! together with a floating-point toolkit for the topology of the maps those
//! rows induce on real varieties.
//!
//! The algebraic side works over the integers, the rationals, multivariate
//! rational polynomial rings, and their principal quotients. A unimodular
//! row is a row `a` with an explicit witness `b` such that sum(a_i b_i) = 1;
//! the library reduces such rows to the first standard basis vector by
//! elementary shears, packages the result as a verifiable certificate, and
//! serializes certificates as JSON. The topological side samples real
//! varieties, traces the maps that rows induce on them, and computes winding
//! numbers and homotopy obstructions in floating point.

pub mod error;
pub mod matrices;
pub mod rings;
pub mod topology;
pub mod unimodular;

pub use error::{Error, Result};
pub use matrices::{ElementaryOp, MatrixDto, RingMatrix};
pub use rings::{parse_polynomial, parse_ring, Polynomial, Rational, RingContext};
pub use unimodular::certificate::{
    certificate_from_json, Certificate, CompletionCertificate, IsotopyCertificate, Provenance,
};
pub use unimodular::{ElementaryFactorization, UnimodularRow};
