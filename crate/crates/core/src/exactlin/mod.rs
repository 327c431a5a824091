//! Exact scalars (rationals and prime fields), vectors, and row reduction.

mod reduce;
mod scalar;
mod vector;

pub use reduce::{null_space, rank, row_reduce, solve_membership, RowReduction};
pub use scalar::{Field, Scalar};
pub use vector::{inner_product, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("inner product of zero-dimensional vectors")]
    EmptyVector,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime modulus below 2^32")]
    BadModulus(u64),
    #[error("unrecognized field '{0}' (expected q or p<N>)")]
    BadField(String),
    #[error("{value} has no image in {field}")]
    NotRepresentable { value: String, field: Field },
}
