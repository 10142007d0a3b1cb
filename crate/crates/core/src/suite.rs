//! The full verification run: symbolic pipelines against the golden files,
//! then every resolvent against its numerically constructed counterpart at
//! a set of sample curves.

use std::path::Path;

use serde::Serialize;

use crate::elliptic::curve::{equal_on_curve, expand_discriminants, sextic_a};
use crate::elliptic::divpoly::{torsion_field_poly, DivisionPolySequence, TorsionConvention};
use crate::elliptic::holq8::{HolQ8Options, HolQ8Result};
use crate::elliptic::{adelmann_pipeline, holq8_pipeline, AdelmannResult, EllipticError};
use crate::golden::{self, GOLDEN_ENTRIES};
use crate::oracle::complex::{real_from_f64, real_pow2_neg, real_to_f64, ComplexAP};
use crate::oracle::labeling::{all_relabelings, octic_labeling, pair_respecting_relabelings};
use crate::oracle::samples::{sample_curves, sample_quartics, SampleCurve, SAMPLE_SEED};
use crate::oracle::verify::{sample_invariant, verify_resolvent, OracleReport};
use crate::oracle::{find_roots, pair_by_negation, OracleError};
use crate::polyring::rational::{fmt_rat, rat};
use crate::polyring::{poly, MultiPoly};
use crate::resolvent::report::Status;
use crate::resolvent::sign::alternating_product;
use crate::resolvent::warmup::{resolvent_cubic, warmup_pipeline};

/// Absolute tolerance on resolvent coefficients.
pub const ORACLE_TOLERANCE: f64 = 1e-20;

/// Seed for the sample quartics of the resolvent-cubic check.
pub const QUARTIC_SEED: u64 = 0x9a27_4c01;

/// One named pass/fail item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<(bool, String), String>) -> Self {
        match r {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedOracle {
    pub resolvent: String,
    #[serde(flatten)]
    pub report: OracleReport,
}

/// Numeric value of `v35` in the labeling matched by `h1`, against the
/// listed `ω(v35)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OmegaCheck {
    pub expected: String,
    pub numeric: (f64, f64),
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveOracle {
    pub curve: SampleCurve,
    pub resolvents: Vec<NamedOracle>,
    pub omega_v35: OmegaCheck,
}

impl CurveOracle {
    pub fn pass(&self) -> bool {
        self.omega_v35.pass && self.resolvents.iter().all(|r| r.report.pass)
    }
}

/// Symbolic results shared by the checks.
pub struct SymbolicRun {
    pub adelmann: AdelmannResult,
    pub holq8: HolQ8Result,
}

impl SymbolicRun {
    pub fn compute(precision: usize) -> Result<Self, EllipticError> {
        let opts = HolQ8Options {
            precision,
            ..HolQ8Options::default()
        };
        Ok(SymbolicRun {
            adelmann: adelmann_pipeline(None)?,
            holq8: holq8_pipeline(None, &opts)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub precision_bits: usize,
    pub checks: Vec<Check>,
    pub quartics: Vec<NamedOracle>,
    pub curves: Vec<CurveOracle>,
    pub pass: bool,
}

fn bit_exact(dir: &Path, name: &str, computed: &MultiPoly) -> Result<(bool, String), String> {
    let ok = golden::matches_bit_exact(dir, name, computed).map_err(|e| e.to_string())?;
    Ok((ok, format!("{name}: {}", golden::render(computed).trim_end())))
}

/// Golden-file integrity and the exact symbolic comparisons.
pub fn symbolic_checks(dir: &Path, run: &SymbolicRun) -> Vec<Check> {
    let mut out = Vec::new();
    let bad: Vec<&str> = GOLDEN_ENTRIES
        .iter()
        .filter(|(name, text)| !golden::matches_bit_exact(dir, name, &poly(text)).unwrap_or(false))
        .map(|(name, _)| *name)
        .collect();
    out.push(Check::new("golden-files", bad.is_empty(), format!("mismatched or missing: {bad:?}")));

    out.push(Check::from_result(
        "resolvent-cubic",
        warmup_pipeline()
            .map_err(|e| e.to_string())
            .and_then(|r| bit_exact(dir, "resolvent_cubic", &r.resolvent)),
    ));

    let adel = &run.adelmann;
    let gate = adel.gate.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
    out.push(Check::new("table-gate", adel.gate.len() == 6, format!("e1..e6 -> {gate}")));
    out.push(Check::from_result("adelmann-rgp", bit_exact(dir, "resolvent_rgp", &adel.rgp.resolvent)));
    out.push(Check::from_result("adelmann-b", bit_exact(dir, "resolvent_b", &adel.b)));

    let seq = DivisionPolySequence::new();
    let divpoly = || -> Result<(bool, String), String> {
        let err = |e: EllipticError| e.to_string();
        let (a3, d3) = bit_exact(dir, "a3", &seq.get(3).map_err(err)?)?;
        let (a4, _) = bit_exact(dir, "a4", &seq.get(4).map_err(err)?)?;
        let gamma = seq.gamma(4).map_err(err)?.subs(&[("x", poly("X"))]);
        let (g4, _) = bit_exact(dir, "gamma4", &gamma)?;
        let rec = (2..=5).map(|m| seq.recursions_hold(m)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let all = a3 && a4 && g4 && rec.iter().all(|&r| r);
        Ok((all, format!("A3 {a3}, A4 {a4}, Gamma4 {g4}, recursions m=2..5 {rec:?}; {d3}")))
    };
    out.push(Check::from_result("division-polynomials", divpoly()));
    out.push(Check::from_result(
        "t4",
        torsion_field_poly(&seq, 4, TorsionConvention::CurveEquation)
            .map_err(|e| e.to_string())
            .and_then(|t| bit_exact(dir, "t4", &t))
            .map(|(ok, _)| (ok, "curve-equation convention, divided by lc^3".to_string())),
    ));

    let h = &run.holq8;
    out.push(Check::from_result("v35", bit_exact(dir, "v35", &h.v35.v35)));
    out.push(Check::from_result(
        "omega-v35",
        golden::load(dir, "omega_v35")
            .map_err(|e| e.to_string())
            .map(|g| {
                let ok = expand_discriminants(&g) == h.omega_v35 && h.omega_square_consistent;
                (ok, format!("square consistent with v35^2: {}", h.omega_square_consistent))
            }),
    ));
    out.push(Check::new(
        "vanishing",
        h.degree3_vanish.iter().all(|&b| b) && !h.degree4_vanish.iter().any(|&b| b),
        format!("degree 3: {:?}, degree 4: {:?}", h.degree3_vanish, h.degree4_vanish),
    ));
    for (name, report) in [("h1", &h.h1), ("h2", &h.h2)] {
        out.push(Check::from_result(
            name,
            golden::load(dir, name).map_err(|e| e.to_string()).map(|g| {
                let ok = report.status == Status::CurveMatch && equal_on_curve(&report.resolvent, &expand_discriminants(&g));
                (ok, format!("{:?}; {}", report.status, report.notes.join("; ")))
            }),
        ));
    }
    let h3_ok = matches!(h.h3.status, Status::ExactMatch | Status::OracleConfirmed);
    out.push(Check::new(
        "h3",
        h3_ok,
        format!("{:?}; {}", h.h3.status, h.h3.notes.join("; ")),
    ));
    out
}

fn tolerance(prec: usize) -> crate::oracle::Real {
    real_from_f64(ORACLE_TOLERANCE, prec)
}

/// Resolvent cubic of an integer quartic against its numeric roots.
pub fn oracle_quartic(c: [i64; 4], prec: usize) -> Result<NamedOracle, OracleError> {
    let report = resolvent_cubic(&c.map(MultiPoly::int)).map_err(|e| OracleError::InvalidInput(e.to_string()))?;
    let quartic = poly(&format!("x^4 + ({})*x^3 + ({})*x^2 + ({})*x + ({})", c[0], c[1], c[2], c[3]));
    let roots = find_roots(&quartic, "x", prec)?;
    let lab = crate::oracle::RootLabeling::new(roots.roots);
    let m = verify_resolvent(&report.resolvent, "x", &report.conjugates, &lab, &all_relabelings(4), &tolerance(prec));
    Ok(NamedOracle {
        resolvent: format!("g[{},{},{},{}]", c[0], c[1], c[2], c[3]),
        report: OracleReport::from_match(serde_json::json!({ "coeffs": c }), prec, &roots.max_residual, &m),
    })
}

/// `B`, `h1`, `h2`, `h3` and `ω(v35)` at one sample curve.
pub fn oracle_curve(s: &SampleCurve, run: &SymbolicRun, prec: usize) -> Result<CurveOracle, EllipticError> {
    let tol = tolerance(prec);
    let point = s.point();
    let bindings = point.bindings();
    let mut resolvents = Vec::new();

    let curve = s.curve();
    let sextic_roots = find_roots(&sextic_a(&curve), "Y", prec)?;
    let two_a = MultiPoly::constant(curve.a() * rat(2));
    let shifted: Vec<MultiPoly> = run.adelmann.rgp.conjugates.iter().map(|c| c - &two_a).collect();
    let b_at = run.adelmann.b_expanded.partial_eval(&curve.bindings());
    let lab6 = crate::oracle::RootLabeling::new(sextic_roots.roots.clone());
    let m = verify_resolvent(&b_at, "Y", &shifted, &lab6, &all_relabelings(6), &tol);
    resolvents.push(NamedOracle {
        resolvent: "B".into(),
        report: OracleReport::from_match(s.to_json(), prec, &sextic_roots.max_residual, &m),
    });

    let octic_roots = find_roots(&crate::elliptic::curve::octic_f(&point), "x", prec)?;
    let pairs = pair_by_negation(&octic_roots.roots, &real_pow2_neg(prec / 2, prec))?;
    let lab8 = octic_labeling(&pairs)?;
    let relabelings = pair_respecting_relabelings();
    let mut h1_match = None;
    for r in [&run.holq8.h1, &run.holq8.h2, &run.holq8.h3] {
        let sym = r.resolvent.partial_eval(&bindings);
        let m = verify_resolvent(&sym, "x", &r.conjugates, &lab8, &relabelings, &tol);
        if r.name == "h1" {
            h1_match = m.as_ref().ok().map(|m| m.relabeling.clone());
        }
        resolvents.push(NamedOracle {
            resolvent: r.name.clone(),
            report: OracleReport::from_match(s.to_json(), prec, &octic_roots.max_residual, &m),
        });
    }

    let expected = run.holq8.omega_v35.evaluate(&bindings)?;
    let omega_v35 = match h1_match {
        Some(source) => {
            let value = sample_invariant(&alternating_product(), &lab8.relabel(&source))?;
            let dev = (&value - &ComplexAP::from_rat(&expected, prec)).abs();
            OmegaCheck {
                expected: fmt_rat(&expected),
                numeric: value.to_f64(),
                deviation: real_to_f64(&dev),
                pass: dev < tol,
            }
        }
        None => OmegaCheck {
            expected: fmt_rat(&expected),
            numeric: (f64::NAN, f64::NAN),
            deviation: f64::INFINITY,
            pass: false,
        },
    };
    Ok(CurveOracle {
        curve: *s,
        resolvents,
        omega_v35,
    })
}

/// Runs every check; curves are processed in parallel and reported in
/// order.
pub fn verify(precision: usize, n_curves: usize, golden_dir: &Path) -> Result<SuiteReport, EllipticError> {
    let run = SymbolicRun::compute(precision)?;
    let checks = symbolic_checks(golden_dir, &run);
    let quartics = sample_quartics(n_curves, QUARTIC_SEED)
        .into_iter()
        .map(|c| oracle_quartic(c, precision))
        .collect::<Result<Vec<_>, _>>()?;
    let samples = sample_curves(n_curves, SAMPLE_SEED);
    let curves = std::thread::scope(|scope| {
        let handles: Vec<_> = samples
            .iter()
            .map(|s| {
                let run = &run;
                scope.spawn(move || oracle_curve(s, run, precision))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let pass = checks.iter().all(|c| c.pass)
        && quartics.iter().all(|q| q.report.pass)
        && curves.iter().all(CurveOracle::pass);
    Ok(SuiteReport {
        precision_bits: precision,
        checks,
        quartics,
        curves,
        pass,
    })
}
