use thiserror::Error;

use crate::rootsystem::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different root systems")]
    MixedRootSystem,

    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },

    #[error("Weyl group order exceeds the cap {cap}")]
    WeylGroupCapExceeded { cap: usize },

    #[error("weight is not dominant")]
    NonDominant,

    #[error("weight is not in the root lattice")]
    NotInRootLattice,

    #[error("character is zero")]
    ZeroCharacter,

    #[error("parabolic support is empty")]
    EmptySupport,

    #[error("operation is only defined for type A root systems")]
    WrongType,

    #[error("verdict requires an indecomposable character with at least one Coxeter witness")]
    NotApplicable,
}
