use thiserror::Error;

/// Errors produced by group construction, lattice algebra and the
/// relation/classification machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group order exceeds the configured bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("permutation images are not a bijection of the point set")]
    InvalidPermutation,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("projection does not match the given groups")]
    InvalidProjection,
    #[error("elements do not live over the same group")]
    GroupMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a sublattice")]
    NotASublattice,
    #[error("group is not cyclic")]
    NotCyclic,
    #[error("prime divides the group order")]
    PrimeDividesOrder,
    #[error("group is outside the families with a closed-form generator")]
    NotInFamily,
    #[error("closed-form generator coefficient is not integral")]
    NonIntegralCoefficient,
    #[error("no relation with unit coefficient on [G/G] exists")]
    NoUnitRelation,
    #[error("group is not {0}-quasi-elementary")]
    NotPQuasiElementary(u64),
    #[error("integral solver failed on a system that must be solvable")]
    SolverFailure,
    #[error("action is not faithful")]
    NotFaithful,
    #[error("action is not irreducible")]
    NotIrreducible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
