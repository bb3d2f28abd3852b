//! Exact coefficient arithmetic: rationals, monomials, polynomials, and ring
//! contexts with canonical normal forms.

mod context;
mod monomial;
mod parser;
mod polynomial;

pub use context::RingContext;
pub use monomial::{Monomial, MonomialOrder};
pub use parser::{parse_polynomial, parse_ring, parse_ring_with_order};
pub use polynomial::{CompiledPoly, Polynomial};

/// Arbitrary-precision rational numbers, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
