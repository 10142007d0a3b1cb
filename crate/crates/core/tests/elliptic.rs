//! Division polynomials at rational torsion points, the numeric oracle's
//! behaviour on corrupted input, and the golden files.

use std::collections::BTreeMap;
use std::path::PathBuf;

use resolvent_core::elliptic::divpoly::{torsion_field_poly, DivisionPolySequence, TorsionConvention};
use resolvent_core::elliptic::{holq8_pipeline, Curve, CurvePoint, EllipticError, HolQ8Options};
use resolvent_core::golden::{self, GOLDEN_ENTRIES};
use resolvent_core::oracle::complex::real_from_f64;
use resolvent_core::oracle::labeling::all_relabelings;
use resolvent_core::oracle::verify::verify_resolvent;
use resolvent_core::oracle::{find_roots, OracleError, RootLabeling};
use resolvent_core::polyring::rational::{frac, rat};
use resolvent_core::polyring::{poly, BigRat, MultiPoly};
use resolvent_core::resolvent::report::Status;
use resolvent_core::resolvent::warmup::resolvent_cubic;
use resolvent_core::suite::oracle_quartic;

fn at(a: BigRat, b: BigRat, x: BigRat, y: BigRat) -> BTreeMap<String, BigRat> {
    [("a", a), ("b", b), ("x", x), ("y", y)].into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn vanishes(seq: &DivisionPolySequence, n: u32, point: &BTreeMap<String, BigRat>) -> bool {
    seq.get(n).unwrap().evaluate(point).unwrap() == rat(0)
}

#[test]
fn degrees_and_leading_terms() {
    let seq = DivisionPolySequence::new();
    for n in 1..=10u32 {
        let an = seq.get(n).unwrap();
        let (deg, lead) = if n % 2 == 1 {
            ((n * n - 1) / 2, MultiPoly::int(n as i64))
        } else {
            ((n * n - 4) / 2, poly(&format!("{n}*y")))
        };
        assert_eq!(an.degree_in("x"), deg, "A_{n}");
        assert_eq!(an.coefficients_in("x")[deg as usize], lead, "A_{n}");
    }
}

#[test]
fn torsion_points_are_roots() {
    let seq = DivisionPolySequence::new();
    // y^2 = x^3 + 1: (2, 3) has order 6, (0, 1) order 3, (-1, 0) order 2.
    let order6 = at(rat(0), rat(1), rat(2), rat(3));
    assert!(vanishes(&seq, 6, &order6) && vanishes(&seq, 12, &order6));
    assert!(!vanishes(&seq, 2, &order6) && !vanishes(&seq, 3, &order6));
    assert!(vanishes(&seq, 3, &at(rat(0), rat(1), rat(0), rat(1))));
    assert!(vanishes(&seq, 2, &at(rat(0), rat(1), rat(-1), rat(0))));
    // y^2 = x^3 - x/3 + 19/108 with the order-5 point (-1/3, 1/2).
    let order5 = at(frac(-1, 3), frac(19, 108), frac(-1, 3), frac(1, 2));
    assert!(vanishes(&seq, 5, &order5) && vanishes(&seq, 10, &order5));
    for n in [2, 3, 4, 6, 7] {
        assert!(!vanishes(&seq, n, &order5), "A_{n}");
    }
    // y^2 = x^3 + 4x has the order-4 point (2, 4): Gamma4 vanishes there.
    let gamma4 = seq.gamma(4).unwrap();
    assert_eq!(gamma4.evaluate(&at(rat(4), rat(0), rat(2), rat(4))).unwrap(), rat(0));
}

#[test]
fn t4_vanishes_at_y_of_four_torsion() {
    // T4's roots are the y-coordinates of the 4-torsion points with y != 0.
    let seq = DivisionPolySequence::new();
    let t4 = torsion_field_poly(&seq, 4, TorsionConvention::CurveEquation).unwrap();
    let value = t4.evaluate(&[("a", rat(4)), ("b", rat(0)), ("X", rat(4))].into_iter().map(|(k, v)| (k.to_string(), v)).collect());
    assert_eq!(value.unwrap(), rat(0));
}

#[test]
fn only_the_curve_equation_convention_gives_printed_t4() {
    let seq = DivisionPolySequence::new();
    let printed = poly(resolvent_core::elliptic::reference::T4);
    let curve = torsion_field_poly(&seq, 4, TorsionConvention::CurveEquation).unwrap();
    let negated = torsion_field_poly(&seq, 4, TorsionConvention::Negated).unwrap();
    assert_eq!(curve, printed);
    assert_ne!(negated, printed);
    assert_eq!(negated.degree_in("X"), 12);
}

#[test]
fn higher_precision_keeps_passing() {
    for c in [[1, -3, 2, 5], [0, 2, -7, 1]] {
        let low = oracle_quartic(c, 128).unwrap();
        let high = oracle_quartic(c, 256).unwrap();
        assert!(low.report.pass && high.report.pass);
        assert!(high.report.max_coeff_deviation <= low.report.max_coeff_deviation.max(1e-60));
    }
}

#[test]
fn corrupted_coefficient_is_rejected() {
    let c = [1i64, -3, 2, 5];
    let report = resolvent_cubic(&c.map(MultiPoly::int)).unwrap();
    let quartic = poly("x^4 + x^3 - 3*x^2 + 2*x + 5");
    let lab = RootLabeling::new(find_roots(&quartic, "x", 256).unwrap().roots);
    let tol = real_from_f64(1e-20, 256);
    let good = verify_resolvent(&report.resolvent, "x", &report.conjugates, &lab, &all_relabelings(4), &tol);
    assert!(good.is_ok());
    let bad = &report.resolvent + &MultiPoly::int(1);
    let err = verify_resolvent(&bad, "x", &report.conjugates, &lab, &all_relabelings(4), &tol).unwrap_err();
    assert!(matches!(err, OracleError::NoLabelingMatches { best_deviation } if best_deviation >= 0.5));
}

#[test]
fn holq8_at_a_point() {
    let p = CurvePoint::new(Curve::new(rat(1), rat(1)).unwrap(), rat(0), rat(1)).unwrap();
    let r = holq8_pipeline(Some(&p), &HolQ8Options::default()).unwrap();
    assert_eq!(r.omega_v35, MultiPoly::int(1984));
    assert!(r.omega_square_consistent);
    assert_eq!(r.h3.resolvent, poly("x^4 + 8*x^3 + 18*x^2 - 31"));
    assert_eq!(r.h3.status, Status::OracleConfirmed);
    for h in [&r.h1, &r.h2] {
        assert_eq!(h.status, Status::ExactMatch, "{}", h.name);
    }
    assert_eq!(r.h1.resolvent, poly("x^4 - 15872*x^2 + 1015808*x - 18284544"));
}

#[test]
fn rejected_inputs() {
    assert_eq!(Curve::new(rat(-3), rat(2)).unwrap_err(), EllipticError::SingularCurve);
    let e = Curve::new(rat(1), rat(1)).unwrap();
    assert_eq!(CurvePoint::new(e, rat(1), rat(1)).unwrap_err(), EllipticError::PointNotOnCurve);
}

#[test]
fn golden_files_are_current() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden");
    for (name, _) in GOLDEN_ENTRIES {
        let reference = golden::reference(name).unwrap();
        assert!(golden::matches_bit_exact(&dir, name, &reference).unwrap(), "{name}");
    }
}
