//! Dense exact matrices and the subspace machinery built on them: row
//! reduction, kernels, spinning and algebra closure.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Scalar};
pub use subspace::{
    algebra_closure_dim, default_closure_cap, kernel, rref, spin, unit_vector, Subspace,
};

use thiserror::Error;

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Ring(#[from] RingError),
}
