//! Exact scalars, vectors, square matrices and small dense tensors.
//!
//! Everything downstream is built on these types. There is no floating point
//! anywhere: equality of two values is always decided exactly.
//!
//! Matrices act on column vectors, `apply(F, v)[i] = Σ_j F[i][j] v[j]`, so
//! the `j`-th column of a matrix is the image of the `j`-th basis vector.

use std::fmt;

mod linalg;
mod scalar;
mod tensor;

pub use linalg::{solve_linear, LinMap, Vector};
pub use scalar::{FieldKind, Scalar, MAX_PRIME};
pub use tensor::{contract, BilinearMap, CoMap, Plan, Tensor2, Tensor3, TensorValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    MixedFields(FieldKind, FieldKind),
    DivisionByZero,
    NotPrime(u64),
    Parse(String),
    /// A map that had to be inverted is singular.
    NotBijective(String),
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::MixedFields(a, b) => write!(f, "mixed field kinds {a} and {b}"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            FieldError::Parse(msg) => write!(f, "{msg}"),
            FieldError::NotBijective(name) => write!(f, "map {name} is not bijective"),
            FieldError::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected dimension {expected}, found {found}"),
        }
    }
}

impl std::error::Error for FieldError {}

pub(crate) fn check_dim(what: &str, expected: usize, found: usize) -> Result<(), FieldError> {
    if expected == found {
        Ok(())
    } else {
        Err(FieldError::DimensionMismatch {
            what: what.to_string(),
            expected,
            found,
        })
    }
}
