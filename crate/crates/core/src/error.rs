use thiserror::Error;

use crate::algebra::Violation;
use crate::exactfield::FieldError;
use crate::exactla::LaError;
use crate::identities::IdentityError;
use crate::io::IoError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    La(#[from] LaError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("not an omega-Lie algebra: {0}")]
    Invalid(Violation),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not contained in Ker omega")]
    KernelConditionFailed,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not an abelian subalgebra")]
    NotAbelianSubalgebra,
    #[error("ad(H) is not a commuting family")]
    NonCommutingAction,
    #[error("zero vector")]
    ZeroVector,
    #[error("lambda is not multiplicative: omega(x,y) != lambda([x,y])")]
    NotMultiplicative,
    #[error("not an (alpha,lambda)-derivation")]
    NotADerivation,
    #[error("not a Lie algebra")]
    NotALieAlgebra,
    #[error("not a representation")]
    NotARepresentation,
    #[error("not a 2-cocycle")]
    NotACocycle,
    #[error("product is not omega-associative for the given forms")]
    NotOmegaAssociative,
    #[error("eigenvector condition [F, ad x] = sigma F fails")]
    EigenvectorConditionFailed,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("catalog entry {0:?} does not validate: {1}")]
    NotValid(String, Violation),
}

pub type Result<T> = std::result::Result<T, Error>;
