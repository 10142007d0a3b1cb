//! Exact constructions of Galois resolvent polynomials over Q, with a
//! high-precision numeric cross-check.
//!
//! - [`polyring`]: rationals, sparse multivariate polynomials, symmetric
//!   reduction, resultants.
//! - [`permgroup`]: enumerated permutation groups and their action on
//!   polynomials.
//! - [`resolvent`]: Vieta expansion and the coefficient engines.
//! - [`elliptic`]: curves, division polynomials and the end-to-end pipelines.
//! - [`oracle`]: root finding and numeric verification.
//! - [`golden`]: reference polynomials as canonical text files.
//! - [`suite`]: the complete symbolic and numeric verification run.

pub mod elliptic;
pub mod golden;
pub mod oracle;
pub mod permgroup;
pub mod polyring;
pub mod resolvent;
pub mod suite;
