//! The resolvent cubic of a generic monic quartic.

use crate::permgroup::action::conjugates_of_poly;
use crate::permgroup::catalog::{warmup, warmup_invariant};
use crate::polyring::{poly, MultiPoly};

use super::report::{Engine, GroupLabels, ResolventReport, Status};
use super::symmetric_engine::engine_symmetric;
use super::vieta::vieta_expand;
use super::ResolventError;

/// Reference resolvent cubic of `x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
pub const RESOLVENT_CUBIC: &str = "x^3 - a2*x^2 + (a1*a3 - 4*a0)*x - a1^2 + 4*a0*a2 - a0*a3^2";

/// Resolvent cubic of `x^4 + c3 x^3 + c2 x^2 + c1 x + c0` for arbitrary
/// coefficients (symbols or numbers), `coeffs = [c3, c2, c1, c0]`.
pub fn resolvent_cubic(coeffs: &[MultiPoly; 4]) -> Result<ResolventReport, ResolventError> {
    let setting = warmup();
    let p = warmup_invariant();
    let conjugates = conjugates_of_poly(&setting.transversal(), &p)?;
    let in_roots = vieta_expand(&conjugates, "x");
    let resolvent = engine_symmetric(&in_roots, "x", coeffs)?;
    Ok(ResolventReport {
        name: "resolvent-cubic".to_string(),
        group: GroupLabels::of(&setting),
        invariant: p,
        conjugates,
        resolvent,
        variable: "x".to_string(),
        engines: vec![Engine::Symmetric; 4],
        status: Status::Unchecked,
        notes: Vec::new(),
    })
}

/// The generic run in the symbols `a3, a2, a1, a0`, compared with the
/// reference cubic.
pub fn warmup_pipeline() -> Result<ResolventReport, ResolventError> {
    let mut report = resolvent_cubic(&["a3", "a2", "a1", "a0"].map(poly))?;
    report.status = if report.resolvent == poly(RESOLVENT_CUBIC) {
        Status::ExactMatch
    } else {
        Status::Failed
    };
    Ok(report)
}
