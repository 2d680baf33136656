use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and operations.
///
/// Internal arithmetic on already-validated data panics on contract
/// violations instead; `AlgError` is for conditions a caller can trigger
/// with well-typed but invalid input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgError {
    /// A prime-field modulus that is not prime.
    ModulusNotPrime(u64),
    /// Division by zero in a coefficient field.
    DivisionByZero,
    /// Operands belong to different ambients (field, variable count or order).
    MixedAmbients(String),
    /// A relation is not homogeneous under the declared grading.
    InhomogeneousRelation(String),
    /// A ring map does not kill a defining relation of its domain.
    RelationNotRespected { relation: String, image: String },
    /// A retract pair with `g . f != id`.
    NotARetract { generator: String },
    /// Malformed construction data (e.g. a module where an ideal is required).
    BadConstruction(String),
    /// An operation that needs an Artinian ring met an infinite-dimensional one.
    NotArtinian,
    /// Scalar restriction could not validate the supplied module generators.
    RestrictionGenerators(String),
    /// Anything else surfaced to the caller with a message.
    Unsupported(String),
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::ModulusNotPrime(p) => write!(f, "modulus not prime: {p}"),
            AlgError::DivisionByZero => write!(f, "division by zero"),
            AlgError::MixedAmbients(msg) => write!(f, "mixed ambients: {msg}"),
            AlgError::InhomogeneousRelation(p) => {
                write!(f, "relation not homogeneous under the grading: {p}")
            }
            AlgError::RelationNotRespected { relation, image } => {
                write!(f, "relation {relation} maps to {image} != 0")
            }
            AlgError::NotARetract { generator } => {
                write!(f, "g(f({generator})) != {generator}")
            }
            AlgError::BadConstruction(msg) => write!(f, "bad construction: {msg}"),
            AlgError::NotArtinian => write!(f, "ring is not Artinian"),
            AlgError::RestrictionGenerators(msg) => {
                write!(f, "restriction generators not validated: {msg}")
            }
            AlgError::Unsupported(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for AlgError {}
