//! Constructive membership: generator lists, certified main-lemma
//! factorizations, long-root decompositions and the Levi commutator check.

mod generators;
mod levi;
mod long_root;
mod main_lemma;

use thiserror::Error;

use crate::repr::ReprError;
use crate::ring::RingError;
use crate::rootsystem::RootError;
use crate::structconst::StructConstError;

pub use generators::{
    mixed_commutator_generators, relative_generators, Bullet, ConditionStar, MixedGenerator,
    MixedGenerators,
};
pub use levi::{levi_commutator_check, LeviReport, LeviSide, LeviViolation, ParabolicData};
pub use long_root::{long_root_decomposition, unit_decompose, LongRootDecomposition};
pub use main_lemma::{main_lemma_word, CertifiedFactorization, FactorizationCheck, MainLemma};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizerError {
    #[error("ring is infinite")]
    InfiniteRing,
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("sign mismatch: {0}")]
    SignMismatch(String),
    #[error("{0} is not a short root")]
    NotShortRoot(String),
    #[error("{0} has a residue field with two elements")]
    ResidueFieldF2(String),
    #[error("no decomposition of 1 into multiples of θ²−θ found in {0}")]
    UnitDecompositionFailed(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Root(#[from] RootError),
}

impl From<StructConstError> for FactorizerError {
    fn from(e: StructConstError) -> Self {
        match e {
            StructConstError::Root(r) => FactorizerError::CaseMismatch(r.to_string()),
            other => FactorizerError::SignMismatch(other.to_string()),
        }
    }
}
