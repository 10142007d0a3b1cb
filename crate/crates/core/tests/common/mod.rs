//! Strategies and properties shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use resolvent_core::oracle::complex::{real_abs, real_from_f64, real_from_rat, ComplexAP};
use resolvent_core::oracle::find_roots;
use resolvent_core::permgroup::action::{canonical_set, conjugates_of_poly, orbit, orbit_sum, stabilizer_of_poly};
use resolvent_core::permgroup::catalog::{adelmann, deg4_invariants, holq8, holq8_p3, warmup, warmup_invariant};
use resolvent_core::permgroup::{Coset, PermGroup};
use resolvent_core::polyring::rational::rat;
use resolvent_core::polyring::symmetric::{elem_vars, expand_elementary};
use resolvent_core::polyring::univariate::{dense_coeffs, is_squarefree};
use resolvent_core::polyring::{poly, resultant, symmetric_reduce, BigRat, MultiPoly};

/// Cases per property.
pub const CASES: u32 = 128;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

fn from_int_terms(vars: &[&str], terms: Vec<(Vec<u32>, i64)>) -> MultiPoly {
    MultiPoly::from_terms(
        vars.iter().map(|v| v.to_string()).collect(),
        terms.into_iter().map(|(e, c)| (e, rat(c))),
    )
}

/// Sparse polynomials in `x, y, z` with small integer coefficients.
pub fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -9i64..=9), 0..6)
        .prop_map(|terms| from_int_terms(&["x", "y", "z"], terms))
}

pub fn ring_laws(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &MultiPoly::zero(), a.clone());
    prop_assert_eq!(a * &MultiPoly::one(), a.clone());
    prop_assert!((a - a).is_zero());
    prop_assert_eq!(&(a - b) + b, a.clone());
    prop_assert_eq!(a.pow(2), a * a);
    Ok(())
}

/// `(n, q)`: a polynomial in `e1..en` of weighted degree at most 8
/// (`e_k` has weight `k`), `n <= 6`.
pub fn elementary_poly() -> impl Strategy<Value = (usize, MultiPoly)> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec((prop::collection::vec(0u32..=4, n), -5i64..=5), 0..4).prop_map(move |terms| {
            let kept: Vec<(Vec<u32>, BigRat)> = terms
                .into_iter()
                .filter(|(e, _)| e.iter().enumerate().map(|(k, x)| (k as u32 + 1) * x).sum::<u32>() <= 8)
                .map(|(e, c)| (e, rat(c)))
                .collect();
            (n, MultiPoly::from_terms(elem_vars(n), kept))
        })
    })
}

pub fn symmetric_round_trip(n: usize, q: &MultiPoly) -> Result<(), TestCaseError> {
    let p = expand_elementary(q, n);
    prop_assert!(p.total_degree().unwrap_or(0) <= 8);
    let back = symmetric_reduce(&p, n).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, q);
    Ok(())
}

/// Univariate polynomial in `x` with coefficients in `Z[a]`, degree in
/// `1..=max_deg` and nonzero leading coefficient.
pub fn param_univariate(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec((-4i64..=4, -3i64..=3), d), (1i64..=3, -2i64..=2)).prop_map(move |(low, lead)| {
            let x = poly("x");
            let a = poly("a");
            let coeff = |(c0, c1): (i64, i64)| &MultiPoly::int(c0) + &a.scale_int(c1);
            let mut p = &coeff(lead) * &x.pow(d as u32);
            for (k, c) in low.into_iter().enumerate() {
                p = &p + &(&coeff(c) * &x.pow(k as u32));
            }
            p
        })
    })
}

pub fn resultant_multiplicative(f: &MultiPoly, g: &MultiPoly, h: &MultiPoly) -> Result<(), TestCaseError> {
    let fail = |e: resolvent_core::polyring::PolyError| TestCaseError::fail(e.to_string());
    let lhs = resultant(&(f * g), h, "x").map_err(fail)?;
    let rhs = &resultant(f, h, "x").map_err(fail)? * &resultant(g, h, "x").map_err(fail)?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// Integer univariate polynomial with nonzero leading coefficient.
pub fn int_univariate(max_deg: usize) -> impl Strategy<Value = MultiPoly> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-6i64..=6, d), prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(move |(low, lead)| {
            let mut cs: Vec<BigRat> = low.into_iter().map(rat).collect();
            cs.push(rat(lead));
            resolvent_core::polyring::univariate::from_dense("x", &cs)
        })
    })
}

fn horner(cs: &[BigRat], z: &ComplexAP, prec: usize) -> ComplexAP {
    cs.iter()
        .rev()
        .fold(ComplexAP::zero(prec), |acc, c| &(&acc * z) + &ComplexAP::from_rat(c, prec))
}

/// `Res(f, g) = lc(f)^deg(g) * Π g(r)` over the roots `r` of `f`.
pub fn resultant_matches_roots(f: &MultiPoly, g: &MultiPoly) -> Result<(), TestCaseError> {
    let prec = 160;
    let fc = dense_coeffs(f, "x").map_err(|e| TestCaseError::fail(e.to_string()))?;
    let gc = dense_coeffs(g, "x").map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assume!(fc.len() >= 2 && is_squarefree(&fc));
    let exact = resultant(f, g, "x").map_err(|e| TestCaseError::fail(e.to_string()))?;
    let exact = exact.constant_value().expect("resultant of univariate polynomials is a number");
    let roots = find_roots(f, "x", prec).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let lc = ComplexAP::from_rat(fc.last().unwrap(), prec).pow((gc.len() - 1) as u32);
    let numeric = roots.roots.iter().fold(lc, |acc, r| &acc * &horner(&gc, r, prec));
    let diff = (&numeric - &ComplexAP::from_rat(&exact, prec)).abs();
    let scale = real_abs(&real_from_rat(&exact, prec)) + real_from_f64(1.0, prec);
    prop_assert!(diff < &scale * &real_from_f64(1e-25, prec), "Res = {exact}, numeric {numeric}");
    Ok(())
}

/// The groups the orbit and transversal properties range over.
pub fn groups() -> Vec<Arc<PermGroup>> {
    vec![warmup().g, adelmann().g, holq8()[0].g.clone()]
}

pub fn group_and_monomial() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (0usize..3).prop_flat_map(|i| {
        let n = [4, 6, 8][i];
        (Just(i), prop::collection::vec(0u32..=3, n))
    })
}

pub fn orbit_stabilizer(group: &PermGroup, exps: &[u32]) -> Result<(), TestCaseError> {
    let n = group.degree();
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let m = MultiPoly::from_terms(vars, [(exps.to_vec(), rat(1))]);
    let fail = |e: resolvent_core::permgroup::GroupError| TestCaseError::fail(e.to_string());
    let orb = orbit(group, &m).map_err(fail)?;
    let stab = stabilizer_of_poly(group, &m).map_err(fail)?;
    prop_assert_eq!(orb.len() * stab.order(), group.order());
    let sums = orbit_sum(group, &m).map_err(fail)?;
    prop_assert_eq!(sums.orbit_size, orb.len());
    Ok(())
}

/// `(setting index, element choices)`; settings are warm-up, the sextic
/// setting and the three `Hol(Q8)` settings.
pub fn transversal_choice() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0usize..5, prop::collection::vec(any::<usize>(), 4), Just(vec![0usize, 1, 2, 3]).prop_shuffle())
}

pub fn transversal_independence(setting: usize, picks: &[usize], order: &[usize]) -> Result<(), TestCaseError> {
    let (s, p) = match setting {
        0 => (warmup(), warmup_invariant()),
        1 => {
            let s = adelmann();
            let p = orbit_sum(&s.f, &poly("x1*x2")).unwrap().plain;
            (s, p)
        }
        k => {
            let [p1, p2] = deg4_invariants();
            let ps = [p1, p2, holq8_p3()];
            (holq8()[k - 2].clone(), ps[k - 2].clone())
        }
    };
    let given = conjugates_of_poly(&s.transversal(), &p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let f_elems = s.f.elements();
    let mut alt: Vec<Coset> = s
        .reps
        .iter()
        .zip(picks)
        .map(|(r, &k)| Coset::new(r.compose(&f_elems[k % f_elems.len()]), Arc::clone(&s.f)))
        .collect();
    let perm: Vec<usize> = order.iter().copied().filter(|&i| i < alt.len()).collect();
    alt = perm.iter().map(|&i| alt[i].clone()).collect();
    let other = conjugates_of_poly(&alt, &p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(canonical_set(&given), canonical_set(&other));
    Ok(())
}

/// Runs `test` over `strategy` with [`config`]; returns the number of cases.
pub fn run_property<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, test).map_err(|e| e.to_string())?;
    Ok(CASES)
}
