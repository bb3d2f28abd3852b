//! Crate-wide error type with stable machine-readable codes.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library.
///
/// Every variant maps to a distinct code via [`Error::code`] so callers
/// (notably the CLI) can react without string-matching messages.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Text input (polynomial, ring spec, or serialized data) failed to parse.
    Parse { position: usize, message: String },
    /// A quotient modulus of zero was supplied.
    ZeroModulus,
    /// A variable name was declared or appended twice.
    DuplicateVariable(String),
    /// Two polynomials with different ambient variable lists were combined.
    VariableMismatch { expected: String, found: String },
    /// A value is not an element of the ring context (e.g. 1/2 over the integers).
    NotAnElement { detail: String },
    DivisionByZero,
    /// Leading term of the zero polynomial was requested.
    ZeroLeadingTerm,
    DimensionMismatch { detail: String },
    ContextMismatch { detail: String },
    /// Elementary shear with i = j or an index outside the ambient size.
    InvalidElementaryOp { detail: String },
    /// The witness identity sum(a_i b_i) = 1 fails; carries the printed residual.
    NotUnimodular { residual: String },
    /// A two-entry row whose gcd is not a unit; carries the printed gcd.
    NotCoprime { gcd: String },
    /// A claimed inverse u with a*u != 1.
    NotInverse { detail: String },
    CertificateInvalid { reason: String },
    ZeroReflectionVector,
    /// Antipodal unit vectors where a non-antipodal pair is required.
    Antipodal,
    NotUnitVector { norm: f64 },
    /// An explicit sample point does not lie on the variety within tolerance.
    MembershipViolation { point: String, value: f64 },
    /// Sample generator incompatible with the ring context.
    IncompatibleGenerator { detail: String },
    /// A trace with min_norm = 0 cannot be normalized to the sphere.
    CannotNormalize,
    /// A loop point within the origin guard; the winding number is undefined.
    DegenerateLoop { index: usize },
    /// An angular increment exceeded the density guard.
    Undersampled { index: usize, step: f64 },
    /// The accumulated angle was not close enough to an integer multiple of 2*pi.
    WindingResidual { residual: f64 },
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse_error",
            Error::ZeroModulus => "zero_modulus",
            Error::DuplicateVariable(_) => "duplicate_variable",
            Error::VariableMismatch { .. } => "variable_mismatch",
            Error::NotAnElement { .. } => "not_an_element",
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroLeadingTerm => "zero_leading_term",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ContextMismatch { .. } => "context_mismatch",
            Error::InvalidElementaryOp { .. } => "invalid_elementary_op",
            Error::NotUnimodular { .. } => "not_unimodular",
            Error::NotCoprime { .. } => "not_coprime",
            Error::NotInverse { .. } => "not_inverse",
            Error::CertificateInvalid { .. } => "certificate_invalid",
            Error::ZeroReflectionVector => "zero_reflection_vector",
            Error::Antipodal => "antipodal",
            Error::NotUnitVector { .. } => "not_unit_vector",
            Error::MembershipViolation { .. } => "membership_violation",
            Error::IncompatibleGenerator { .. } => "incompatible_generator",
            Error::CannotNormalize => "cannot_normalize",
            Error::DegenerateLoop { .. } => "degenerate_loop",
            Error::Undersampled { .. } => "undersampled",
            Error::WindingResidual { .. } => "winding_residual",
        }
    }

    /// True for errors caused by malformed textual input rather than by the
    /// mathematics of a well-formed request.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::ZeroModulus)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::ZeroModulus => write!(f, "quotient modulus must be nonzero"),
            Error::DuplicateVariable(name) => write!(f, "duplicate variable '{name}'"),
            Error::VariableMismatch { expected, found } => {
                write!(f, "variable list mismatch: expected [{expected}], found [{found}]")
            }
            Error::NotAnElement { detail } => write!(f, "not an element of the ring: {detail}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroLeadingTerm => write!(f, "the zero polynomial has no leading term"),
            Error::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            Error::ContextMismatch { detail } => write!(f, "ring context mismatch: {detail}"),
            Error::InvalidElementaryOp { detail } => write!(f, "invalid elementary op: {detail}"),
            Error::NotUnimodular { residual } => {
                write!(f, "witness identity fails: sum(a_i*b_i) - 1 = {residual}")
            }
            Error::NotCoprime { gcd } => write!(f, "row is not unimodular: gcd = {gcd}"),
            Error::NotInverse { detail } => write!(f, "not an inverse: {detail}"),
            Error::CertificateInvalid { reason } => write!(f, "certificate invalid: {reason}"),
            Error::ZeroReflectionVector => write!(f, "reflection about the zero vector is undefined"),
            Error::Antipodal => write!(f, "vectors are antipodal"),
            Error::NotUnitVector { norm } => write!(f, "expected a unit vector, got norm {norm}"),
            Error::MembershipViolation { point, value } => {
                write!(f, "point {point} is off the variety: modulus evaluates to {value:e}")
            }
            Error::IncompatibleGenerator { detail } => {
                write!(f, "sample generator incompatible with ring: {detail}")
            }
            Error::CannotNormalize => write!(f, "trace contains a zero value; cannot normalize"),
            Error::DegenerateLoop { index } => {
                write!(f, "loop point {index} is within the origin guard; winding undefined")
            }
            Error::Undersampled { index, step } => write!(
                f,
                "angular step {step:.6} at segment {index} exceeds the density guard; use a denser sample"
            ),
            Error::WindingResidual { residual } => write!(
                f,
                "angle sum is {residual:e} away from an integer turn; loop may not be closed"
            ),
        }
    }
}

impl std::error::Error for Error {}
