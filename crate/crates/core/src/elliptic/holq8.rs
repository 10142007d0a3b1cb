//! The three quartic resolvents of the `Hol(Q8)` octic attached to a point
//! `(z, w)` on `y^2 = x^3 + a x + b`.
//!
//! Coefficients go through the negation pairing of the octic roots. Those in
//! the square subring are evaluated directly; a coefficient with an
//! alternating part is recovered by an integer fit to numerically computed
//! values and cross-checked against `even + odd * ω(v35)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::oracle::complex::{real_abs, real_from_f64, real_round, ComplexAP};
use crate::oracle::labeling::{octic_labeling, pair_by_negation, pair_respecting_relabelings, RootLabeling};
use crate::oracle::samples::{sample_curves, SampleCurve};
use crate::oracle::verify::{numeric_resolvent, sample_invariant, verify_resolvent};
use crate::oracle::{find_roots, OracleError};
use crate::permgroup::action::{canonical_set, conjugates_of_poly, stabilizer_of_poly};
use crate::permgroup::catalog::{
    deg3_invariants, deg4_invariants, holq8, holq8_p3, ResolventSetting, DEG3_ALPHA, DEG3_BETA, DEG4_ALPHA, DEG4_BETA,
};
use crate::polyring::{poly, BigRat, MultiPoly, WeightSystem};
use crate::resolvent::ansatz::{engine_ansatz, AnsatzSample, SAMPLE_MARGIN};
use crate::resolvent::report::{Engine, GroupLabels, ResolventReport, Status};
use crate::resolvent::sign::{alternating_product, square_decompose, PairingRelations, SquareDecomposition};
use crate::resolvent::v35::{compute_v35, v35_square_value, V35Data, V35_IMAGE};
use crate::resolvent::vanishing::vanishing_check;
use crate::resolvent::vieta::vieta_coefficients;
use crate::resolvent::ResolventError;

use super::curve::{curve_normal_form, equal_on_curve, expand_discriminants, octic_f, octic_symbolic, CurvePoint};
use super::reference::{H1, H2, H3};
use super::EllipticError;

/// Multiplier applied to the conjugates of the secondary invariants so that
/// the resolvents come out with the listed normalization.
pub const SECONDARY_SCALE: i64 = -2;

/// Seed for the curves used by the integer fit.
pub const ANSATZ_SEED: u64 = 0x0a45_a72e;

/// Tolerance for reading an integer off a numeric value.
pub const ROUNDING_TOLERANCE: f64 = 1e-20;

/// Outcome of comparing the computed and listed `x^3` coefficients of `h3`
/// numerically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignArbitration {
    pub point: CurvePoint,
    pub computed_matches: bool,
    pub listed_matches: bool,
}

#[derive(Clone, Debug)]
pub struct HolQ8Result {
    pub h1: ResolventReport,
    pub h2: ResolventReport,
    pub h3: ResolventReport,
    pub relations: PairingRelations,
    pub v35: V35Data,
    /// `ω(v35)` as listed, with `d` expanded.
    pub omega_v35: MultiPoly,
    /// Whether the square of the listed `ω(v35)` equals the value of `v35^2`
    /// computed through the square subring.
    pub omega_square_consistent: bool,
    /// Degree-3 conjugates vanish under the pairing, for `F1` and `F2`.
    pub degree3_vanish: [bool; 2],
    /// Degree-4 conjugates vanish under the pairing, for `F1` and `F2`.
    pub degree4_vanish: [bool; 2],
    pub arbitration: Option<SignArbitration>,
    pub notes: Vec<String>,
}

/// Listed `h1`, `h2`, `h3` with `d` expanded.
pub fn listed_resolvents() -> [MultiPoly; 3] {
    [H1, H2, H3].map(|s| expand_discriminants(&poly(s)))
}

fn check_stabilizer(s: &ResolventSetting, p: &MultiPoly) -> Result<(), EllipticError> {
    let stab = stabilizer_of_poly(&s.g, p)?;
    if stab.same_elements(&s.f) {
        Ok(())
    } else {
        Err(EllipticError::Inconsistent(format!("stabilizer of {p} is not F")))
    }
}

/// Octic roots at a sample curve, labeled so that `v35` takes the listed
/// value `ω(v35)` there.
pub fn labeled_octic_roots(p: &CurvePoint, prec: usize) -> Result<(RootLabeling, crate::oracle::Real), EllipticError> {
    let roots = find_roots(&octic_f(p), "x", prec)?;
    let tol = real_from_f64(1e-30, prec);
    let pairs = pair_by_negation(&roots.roots, &tol)?;
    let mut lab = octic_labeling(&pairs)?;
    let target = ComplexAP::from_rat(&expand_discriminants(&poly(V35_IMAGE)).evaluate(&p.bindings())?, prec);
    let v = sample_invariant(&alternating_product(), &lab)?;
    let tol_v = real_from_f64(ROUNDING_TOLERANCE, prec);
    if (&v - &target).abs() >= tol_v {
        // an odd permutation of the pairs flips the sign of v35
        lab = lab.relabel(&[1, 0, 2, 3, 4, 7, 6, 5]);
        let v = sample_invariant(&alternating_product(), &lab)?;
        if (&v - &target).abs() >= tol_v {
            return Err(EllipticError::Inconsistent(format!("v35 at {:?} is not ±ω(v35)", p.bindings())));
        }
    }
    Ok((lab, roots.max_residual))
}

/// Nearest integer to a numeric value known to be an integer.
fn certified_integer(z: &ComplexAP, prec: usize) -> Result<BigInt, EllipticError> {
    let tol = real_from_f64(ROUNDING_TOLERANCE, prec);
    let n = real_round(&z.re);
    let back = crate::oracle::complex::real_from_rat(&BigRat::from_integer(n.clone()), prec);
    if real_abs(&(&z.re - &back)) < tol && real_abs(&z.im) < tol {
        Ok(n)
    } else {
        Err(EllipticError::Oracle(OracleError::InvalidInput(format!("{z} is not an integer"))))
    }
}

/// Coefficients (ascending) of the resolvent of `conjugates` at each curve,
/// as exact integers.
fn numeric_coefficients(
    conjugates: &[MultiPoly],
    curves: &[SampleCurve],
    prec: usize,
) -> Result<Vec<Vec<BigInt>>, EllipticError> {
    curves
        .iter()
        .map(|s| {
            let (lab, _) = labeled_octic_roots(&s.point(), prec)?;
            numeric_resolvent(conjugates, &lab)?
                .iter()
                .map(|c| certified_integer(c, prec))
                .collect()
        })
        .collect()
}

fn ansatz_point(s: &SampleCurve) -> BTreeMap<String, BigRat> {
    s.point()
        .bindings()
        .into_iter()
        .filter(|(k, _)| ["a", "b", "z", "w"].contains(&k.as_str()))
        .collect()
}

/// Per-coefficient data for one secondary resolvent.
struct SecondaryRun {
    coeffs: Vec<MultiPoly>,
    engines: Vec<Engine>,
    notes: Vec<String>,
}

fn secondary_resolvent(
    conjugates: &[MultiPoly],
    rel: &PairingRelations,
    omega_v35: &MultiPoly,
    fit: Option<(&[SampleCurve], usize)>,
) -> Result<SecondaryRun, EllipticError> {
    let in_roots = vieta_coefficients(conjugates);
    let n = conjugates.len();
    let ws = WeightSystem::octic();
    let mut numeric: Option<Vec<Vec<BigInt>>> = None;
    let mut run = SecondaryRun {
        coeffs: Vec::new(),
        engines: Vec::new(),
        notes: Vec::new(),
    };
    for (k, c) in in_roots.iter().enumerate() {
        let dec: SquareDecomposition = square_decompose(c, rel)?;
        if dec.odd.is_zero() {
            run.coeffs.push(curve_normal_form(&dec.even_value));
            run.engines.push(Engine::SignSpecialize);
            continue;
        }
        let semi = curve_normal_form(&dec.value_with(omega_v35));
        let Some((curves, prec)) = fit else {
            run.coeffs.push(semi);
            run.engines.push(Engine::SemiInvariant);
            continue;
        };
        if numeric.is_none() {
            numeric = Some(numeric_coefficients(conjugates, curves, prec)?);
        }
        let values = numeric.as_ref().expect("filled above");
        let samples: Vec<AnsatzSample> = curves
            .iter()
            .zip(values)
            .map(|(s, v)| AnsatzSample {
                point: ansatz_point(s),
                value: BigRat::from_integer(v[k].clone()),
            })
            .collect();
        let weight = 3 * c.total_degree().unwrap_or(0);
        debug_assert_eq!(weight, 12 * (n - k) as u32);
        let fitted = engine_ansatz(weight, &ws, &["a", "b", "z", "w"], &[("w", 1)], &samples)?;
        if !equal_on_curve(&fitted, &semi) {
            return Err(EllipticError::Inconsistent(format!(
                "fit of the coefficient of x^{k} disagrees with the semi-invariant value"
            )));
        }
        run.notes.push(format!(
            "coefficient of x^{k} has an alternating part; fitted at {} curves, agrees with the semi-invariant value",
            samples.len()
        ));
        run.coeffs.push(fitted);
        run.engines.push(Engine::Ansatz);
    }
    Ok(run)
}

fn secondary_report(
    name: &str,
    setting: &ResolventSetting,
    invariant: MultiPoly,
    conjugates: Vec<MultiPoly>,
    run: SecondaryRun,
    listed: &MultiPoly,
    point: Option<&CurvePoint>,
) -> ResolventReport {
    let resolvent = MultiPoly::from_coefficients("x", &run.coeffs);
    // symbolically the forms agree modulo the curve equation; at a point exactly
    let status = match point {
        None if equal_on_curve(&resolvent, listed) => Status::CurveMatch,
        Some(p) if resolvent == listed.partial_eval(&p.bindings()) => Status::ExactMatch,
        _ => Status::Failed,
    };
    let mut notes = run.notes;
    notes.push(format!("conjugates scaled by {SECONDARY_SCALE}"));
    ResolventReport {
        name: name.to_string(),
        group: GroupLabels::of(setting),
        invariant,
        conjugates,
        resolvent,
        variable: "x".to_string(),
        engines: run.engines,
        status,
        notes,
    }
}

/// Numerically decides between the computed `h3` and the listed one at a
/// sample curve.
pub fn arbitrate_h3(computed: &MultiPoly, gammas: &[MultiPoly], p: &CurvePoint, prec: usize) -> Result<SignArbitration, EllipticError> {
    let (lab, _) = labeled_octic_roots(p, prec)?;
    let tol = real_from_f64(ROUNDING_TOLERANCE, prec);
    let relabelings = pair_respecting_relabelings();
    let listed = listed_resolvents()[2].partial_eval(&p.bindings());
    let ok = |target: &MultiPoly| verify_resolvent(target, "x", gammas, &lab, &relabelings, &tol).is_ok();
    Ok(SignArbitration {
        point: p.clone(),
        computed_matches: ok(&computed.partial_eval(&p.bindings())),
        listed_matches: ok(&listed),
    })
}

/// Options of the symbolic run.
#[derive(Clone, Debug)]
pub struct HolQ8Options {
    pub precision: usize,
    /// Curves for the integer fit; `None` skips the fit and keeps the
    /// semi-invariant values.
    pub fit_curves: Option<usize>,
}

impl Default for HolQ8Options {
    fn default() -> Self {
        HolQ8Options {
            precision: crate::oracle::DEFAULT_PRECISION,
            fit_curves: Some(19 + SAMPLE_MARGIN + 4),
        }
    }
}

/// Computes `h1`, `h2`, `h3` symbolically (`point = None`) or at a point,
/// with the curve values substituted before any reduction.
pub fn holq8_pipeline(point: Option<&CurvePoint>, opts: &HolQ8Options) -> Result<HolQ8Result, EllipticError> {
    let settings = holq8();
    let g = &settings[0].g;
    let octic = point.map_or_else(octic_symbolic, octic_f);
    let rel = PairingRelations::from_even_octic(&octic, "x");
    let mut omega_v35 = expand_discriminants(&poly(V35_IMAGE));
    if let Some(p) = point {
        omega_v35 = omega_v35.partial_eval(&p.bindings());
    }
    let v35 = compute_v35(g, &rel)?;
    let omega_square_consistent = equal_on_curve(&omega_v35.pow(2), &v35_square_value(&rel)?);

    let [p1, p2] = deg4_invariants();
    let p3 = holq8_p3();
    for (s, p) in settings.iter().zip([&p1, &p2, &p3]) {
        check_stabilizer(s, p)?;
    }
    let alphas = conjugates_of_poly(&settings[0].transversal(), &p1)?;
    let betas = conjugates_of_poly(&settings[1].transversal(), &p2)?;
    let gammas = conjugates_of_poly(&settings[2].transversal(), &p3)?;
    if canonical_set(&alphas) != canonical_set(&DEG4_ALPHA.map(poly))
        || canonical_set(&betas) != canonical_set(&DEG4_BETA.map(poly))
    {
        return Err(EllipticError::Inconsistent("secondary conjugates differ from the listed sets".into()));
    }
    let [q1, q2] = deg3_invariants();
    let deg3 = [
        conjugates_of_poly(&settings[0].transversal(), &q1)?,
        conjugates_of_poly(&settings[1].transversal(), &q2)?,
    ];
    let mut notes = Vec::new();
    for (name, computed, listed) in [("F1", &deg3[0], DEG3_ALPHA), ("F2", &deg3[1], DEG3_BETA)] {
        let listed = canonical_set(&listed.map(poly));
        let missing = canonical_set(computed).iter().filter(|c| !listed.contains(c)).count();
        if missing > 0 {
            notes.push(format!(
                "{missing} of the listed degree-3 {name} conjugates are not in the orbit; the orbit is used"
            ));
        }
    }
    let degree3_vanish = [vanishing_check(&deg3[0], &rel), vanishing_check(&deg3[1], &rel)];
    let degree4_vanish = [vanishing_check(&alphas, &rel), vanishing_check(&betas, &rel)];

    // h3 from the pair products
    let mut h3_coeffs = Vec::new();
    for c in vieta_coefficients(&gammas) {
        let dec = square_decompose(&c, &rel)?;
        if !dec.odd.is_zero() {
            return Err(ResolventError::NotInSquareSubring {
                even: dec.even_value,
                odd: dec.odd_value,
            }
            .into());
        }
        h3_coeffs.push(curve_normal_form(&dec.even_value));
    }
    let h3 = MultiPoly::from_coefficients("x", &h3_coeffs);
    let [listed_h1, listed_h2, listed_h3] = listed_resolvents();
    let listed_h3_at = point.map_or(listed_h3.clone(), |p| listed_h3.partial_eval(&p.bindings()));
    let flipped_x3 = |p: &MultiPoly| -> MultiPoly {
        let mut cs = p.coefficients_in("x");
        cs[3] = -cs[3].clone();
        MultiPoly::from_coefficients("x", &cs)
    };
    let mut h3_notes = Vec::new();
    let at = point.cloned().unwrap_or_else(|| sample_curves(1, 0)[0].point());
    let arbitration = match arbitrate_h3(&h3, &gammas, &at, opts.precision) {
        Ok(a) => Some(a),
        Err(e) => {
            h3_notes.push(format!("numeric check unavailable: {e}"));
            None
        }
    };
    let h3_status = if h3 == listed_h3_at {
        Status::ExactMatch
    } else if flipped_x3(&h3) == listed_h3_at {
        h3_notes.push(format!(
            "x^3 coefficient is {}; the listed form has the opposite sign",
            h3.coefficients_in("x")[3]
        ));
        match &arbitration {
            Some(a) if a.computed_matches && !a.listed_matches => {
                h3_notes.push(format!("numeric check at {} confirms the computed sign", a.point.to_json()));
                Status::OracleConfirmed
            }
            Some(_) => Status::Failed,
            None => Status::Unchecked,
        }
    } else {
        Status::Failed
    };

    let scale = |cs: &[MultiPoly]| -> Vec<MultiPoly> { cs.iter().map(|c| c.scale_int(SECONDARY_SCALE)).collect() };
    let (scaled_alphas, scaled_betas) = (scale(&alphas), scale(&betas));
    let fit_curves = match (point, opts.fit_curves) {
        (None, Some(n)) => Some(sample_curves(n, ANSATZ_SEED)),
        _ => None,
    };
    let fit = fit_curves.as_deref().map(|c| (c, opts.precision));
    let run1 = secondary_resolvent(&scaled_betas, &rel, &omega_v35, fit)?;
    let run2 = secondary_resolvent(&scaled_alphas, &rel, &omega_v35, fit)?;
    let mut h1 = secondary_report("h1", &settings[1], p2, scaled_betas, run1, &listed_h1, point);
    h1.notes.push("built from the F2 conjugates in the labeling class where v35 takes its listed value".into());
    let mut h2 = secondary_report("h2", &settings[0], p1, scaled_alphas, run2, &listed_h2, point);
    h2.notes.push("built from the F1 conjugates in the labeling class where v35 takes its listed value".into());

    Ok(HolQ8Result {
        h1,
        h2,
        h3: ResolventReport {
            name: "h3".to_string(),
            group: GroupLabels::of(&settings[2]),
            invariant: p3,
            conjugates: gammas,
            resolvent: h3,
            variable: "x".to_string(),
            engines: vec![Engine::SignSpecialize; 5],
            status: h3_status,
            notes: h3_notes,
        },
        relations: rel,
        v35,
        omega_v35,
        omega_square_consistent,
        degree3_vanish,
        degree4_vanish,
        arbitration,
        notes,
    })
}
