//! Elliptic-curve side: the curve `y^2 = x^3 + a x + b`, its division
//! polynomials and torsion-field polynomials, and the end-to-end resolvent
//! pipelines for the 4-torsion sextic and the `Hol(Q8)` octic.

pub mod adelmann;
pub mod curve;
pub mod divpoly;
pub mod holq8;
pub mod reference;

use crate::oracle::OracleError;
use crate::permgroup::GroupError;
use crate::polyring::PolyError;
use crate::resolvent::ResolventError;

pub use adelmann::{adelmann_pipeline, AdelmannResult};
pub use curve::{equal_on_curve, Curve, CurvePoint};
pub use divpoly::{torsion_field_poly, DivisionPolySequence, TorsionConvention};
pub use holq8::{holq8_pipeline, HolQ8Options, HolQ8Result};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EllipticError {
    #[error("curve is singular (4a^3 + 27b^2 = 0)")]
    SingularCurve,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("division by the y-reduced divisor is not exact")]
    NotDivisible,
    #[error("torsion polynomial for n = {0} still involves y")]
    HasYFactor(u32),
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Resolvent(#[from] ResolventError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
