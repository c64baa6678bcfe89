use thiserror::Error;

/// Failures of the symplectic and relational constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the required ambient subspace")]
    NotContained,
    #[error("matrix is not a nondegenerate antisymmetric form")]
    NotSymplecticForm,
    #[error("subspace is not lagrangian")]
    NotLagrangian,
    #[error("subspace is not coisotropic")]
    NotCoisotropic,
    #[error("subspaces do not form a lagrangian splitting")]
    NotSplitting,
    #[error("relation is not canonical")]
    NotCanonical,
    #[error("invalid canonical invariants {0:?}")]
    InvalidInvariants([usize; 5]),
    #[error("pairs are not equivalent")]
    Inequivalent,
    #[error("degenerate bilinear form")]
    Degenerate,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns `DimensionMismatch` unless `found == expected`.
pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Turns a failed self-check into an `Internal` error.
pub(crate) fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(what.to_string()))
    }
}
