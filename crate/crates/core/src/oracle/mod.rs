//! Independent numeric verification: arbitrary-precision root finding,
//! labeling of roots, and comparison of symbolic resolvents with their
//! numerically constructed counterparts.

pub mod complex;
pub mod labeling;
pub mod roots;
pub mod samples;
pub mod verify;

use crate::polyring::PolyError;

pub use complex::{ComplexAP, Real, DEFAULT_PRECISION};
pub use labeling::{pair_by_negation, RootLabeling};
pub use roots::{find_roots, RootSet};
pub use samples::{sample_curves, SampleCurve};
pub use verify::{sample_invariant, verify_resolvent, OracleReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("root iteration did not converge within {iterations} sweeps")]
    NonConvergence { iterations: usize },
    #[error("polynomial has a repeated root")]
    NotSquarefree,
    #[error("roots are not closed under negation")]
    NoPairing,
    #[error("no labeling reproduces the symbolic resolvent (best deviation {best_deviation:e})")]
    NoLabelingMatches { best_deviation: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
