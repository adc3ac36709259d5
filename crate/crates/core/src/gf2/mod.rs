//! Bit-packed linear algebra over GF(2).

mod matrix;
mod random;
mod sym;
mod update;
mod vector;
mod vertex;
mod witt;

pub use matrix::{are_independent, in_span, rank_of, BitMatrix};
pub use random::{
    random_matrix, random_orthogonal, random_symmetric, random_vector, random_vertex,
};
pub use sym::{
    alternate_from_pairs, congruence_canonical, decompose_symmetric,
    decompose_symmetric_randomized, is_alternate, is_r1tr0, random_invertible, symplectic_pairs,
    CanonicalForm, DecompKind, Decomposition, R1Tr0Form, SymMatrix,
};
pub use update::{det_update, inverse_update, schur_det};
pub use vector::BitVector;
pub use vertex::Vertex;
pub use witt::{extend_isometry, IsometrySpec};

use thiserror::Error;

/// Largest supported vector length; one machine word per row.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not alternate")]
    NotAlternate,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("dimension {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("isometry spec is invalid: {0}")]
    InvalidIsometry(String),
    #[error("the all-ones vector conditions fail for this isometry")]
    JConditionViolated,
    #[error("no orthogonal extension found")]
    NoExtension,
}
