//! Resolvent-coefficient engines: Vieta expansion, full symmetric reduction,
//! the fundamental-invariant linear solve, sign-pair specialization with a
//! semi-invariant correction, and weighted-ansatz interpolation.

pub mod ansatz;
pub mod invariant;
pub mod report;
pub mod sign;
pub mod symmetric_engine;
pub mod v35;
pub mod vanishing;
pub mod vieta;
pub mod warmup;

use crate::permgroup::GroupError;
use crate::polyring::{MultiPoly, PolyError};

pub use ansatz::{engine_ansatz, AnsatzSample};
pub use invariant::{adelmann_table, engine_invariant_solve, InvariantGenerator};
pub use report::{Engine, ResolventReport, Status};
pub use sign::{engine_sign_specialize, PairingRelations, SquareDecomposition};
pub use symmetric_engine::engine_symmetric;
pub use v35::compute_v35;
pub use vanishing::vanishing_check;
pub use vieta::vieta_expand;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolventError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("coefficient of degree {0} is not in the span of generator products")]
    NotInSpan(u32),
    #[error("invariant table images disagree on a linear relation among generator products")]
    TableInconsistent,
    #[error("coefficient is not invariant under the group")]
    NotInvariant,
    #[error("coefficient has a nonzero sign-alternating part: {even} + ({odd}) * v")]
    NotInSquareSubring { even: MultiPoly, odd: MultiPoly },
    #[error("anti-invariant part is not divisible by the alternating product v")]
    NotAlternating,
    #[error("ansatz needs at least {needed} samples and full rank, got {got}")]
    Underdetermined { needed: usize, got: usize },
    #[error("ansatz fit is not integral: {0}")]
    NonIntegralFit(String),
    #[error("ansatz fit disagrees with held-out sample {0}")]
    HeldOutMismatch(usize),
    #[error("invariant table consistency gate failed for e{0}")]
    TableGate(usize),
}
