//! Small permutation groups by full enumeration, and their action on
//! polynomials in root variables `x1..xn`.

pub mod action;
pub mod catalog;
pub mod facts;
pub mod group;
pub mod perm;
pub mod quotient;

pub use facts::{group_facts, SettingFacts, Which};
pub use action::{act_on_poly, conjugates_of_poly, orbit_sum, stabilizer_of_poly, OrbitSum};
pub use group::{Coset, PermGroup};
pub use perm::Perm;
pub use quotient::{is_isomorphic_to_s3, is_isomorphic_to_s4, CayleyTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group enumeration exceeded {0} elements")]
    CapExceeded(usize),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("degree mismatch: expected at most {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial is not invariant under the claimed subgroup")]
    NotInvariant,
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
}
