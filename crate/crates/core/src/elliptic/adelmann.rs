//! Quartic resolvent of the 4-division sextic through the fundamental
//! invariants of `PGL2(Z/4Z)`.

use crate::permgroup::action::{canonical_set, conjugates_of_poly, orbit_sum, stabilizer_of_poly};
use crate::permgroup::catalog::{adelmann, ADELMANN_BETA};
use crate::polyring::{poly, MultiPoly};
use crate::resolvent::invariant::{adelmann_table, engine_invariant_solve, table_gate, InvariantGenerator};
use crate::resolvent::report::{Engine, GroupLabels, ResolventReport, Status};
use crate::resolvent::vieta::vieta_coefficients;

use super::curve::{expand_discriminants, sextic_symbolic, Curve};
use super::reference::{RESOLVENT_B, RESOLVENT_RGP};
use super::EllipticError;

/// Both forms of the quartic resolvent and the table check.
#[derive(Clone, Debug)]
pub struct AdelmannResult {
    /// Resolvent of the sextic in `Y`.
    pub rgp: ResolventReport,
    /// After `Y -> Y + 2a`, with multiples of the discriminant written
    /// through the symbol `Delta`.
    pub b: MultiPoly,
    /// `b` with `Delta` expanded.
    pub b_expanded: MultiPoly,
    /// Images of `e1..e6`.
    pub gate: Vec<MultiPoly>,
    pub generators: Vec<InvariantGenerator>,
}

/// Writes each non-constant coefficient in `var` that is a multiple of
/// `-16 (4a^3 + 27b^2)` as `q * Delta`.
pub fn collect_delta(p: &MultiPoly, var: &str) -> MultiPoly {
    let delta = poly("-16*(4*a^3 + 27*b^2)");
    let coeffs: Vec<MultiPoly> = p
        .coefficients_in(var)
        .into_iter()
        .map(|c| match c.exact_div(&delta) {
            Ok(q) if !c.is_constant() => &q * &poly("Delta"),
            _ => c,
        })
        .collect();
    MultiPoly::from_coefficients(var, &coeffs)
}

/// Runs the construction symbolically (`curve = None`) or with the table
/// images specialized to a curve before solving.
pub fn adelmann_pipeline(curve: Option<&Curve>) -> Result<AdelmannResult, EllipticError> {
    let setting = adelmann();
    let point = curve.map(Curve::bindings);
    let mut generators = adelmann_table(&setting.g)?;
    let mut sextic = sextic_symbolic();
    if let Some(p) = &point {
        for g in &mut generators {
            g.image = g.image.partial_eval(p);
        }
        sextic = sextic.partial_eval(p);
    }
    let gate = table_gate(&generators, &setting.g, &sextic, "Y")?;

    let p = orbit_sum(&setting.f, &poly("x1*x2"))?.plain;
    let stab = stabilizer_of_poly(&setting.g, &p)?;
    if !stab.same_elements(&setting.f) {
        return Err(EllipticError::Inconsistent("stabilizer of the invariant differs from F".into()));
    }
    let conjugates = conjugates_of_poly(&setting.transversal(), &p)?;
    let mut notes = Vec::new();
    if canonical_set(&conjugates) != canonical_set(&ADELMANN_BETA.map(poly)) {
        notes.push("conjugates differ from the listed set".to_string());
    }
    let in_roots = vieta_coefficients(&conjugates);
    let coeffs: Vec<MultiPoly> = in_roots
        .iter()
        .map(|c| engine_invariant_solve(c, &generators, &setting.g))
        .collect::<Result<_, _>>()?;
    let rgp = MultiPoly::from_coefficients("Y", &coeffs);

    let shifted = match &point {
        None => rgp.subs(&[("Y", poly("Y + 2*a"))]),
        Some(pt) => rgp.subs(&[("Y", poly("Y + 2*a").partial_eval(pt))]),
    };
    let b = if point.is_some() { shifted.clone() } else { collect_delta(&shifted, "Y") };
    let b_expanded = expand_discriminants(&b);
    debug_assert_eq!(b_expanded, shifted);

    let status = match &point {
        None if rgp == poly(RESOLVENT_RGP) && b == poly(RESOLVENT_B) => Status::ExactMatch,
        None => Status::Failed,
        Some(pt) if rgp == poly(RESOLVENT_RGP).partial_eval(pt) => Status::ExactMatch,
        Some(_) => Status::Failed,
    };
    Ok(AdelmannResult {
        rgp: ResolventReport {
            name: "adelmann".to_string(),
            group: GroupLabels::of(&setting),
            invariant: p,
            conjugates,
            resolvent: rgp,
            variable: "Y".to_string(),
            engines: vec![Engine::InvariantTable; 5],
            status,
            notes,
        },
        b,
        b_expanded,
        gate,
        generators,
    })
}
