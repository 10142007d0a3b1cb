//! Double-precision cross-checks written independently of the library's
//! numeric and group code: roots by Durand–Kerner, groups by closure of
//! their generators, invariants evaluated directly at the roots.

use std::collections::BTreeSet;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use resolvent_core::elliptic::curve::expand_discriminants;
use resolvent_core::elliptic::reference::{H3, RESOLVENT_B, RESOLVENT_RGP};
use resolvent_core::elliptic::{holq8_pipeline, Curve, CurvePoint, HolQ8Options};
use resolvent_core::polyring::rational::rat;
use resolvent_core::polyring::{poly, MultiPoly};
use resolvent_core::resolvent::warmup::resolvent_cubic;

/// Roots of the monic polynomial with coefficients `c[0] + c[1] x + ... + x^n`
/// (`c` excludes the leading 1).
fn roots(c: &[f64]) -> Vec<Complex64> {
    let n = c.len();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &k| acc * z + k);
    let bound = 1.0 + c.iter().fold(0.0f64, |m, k| m.max(k.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound.min(2.0)).collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            let step = eval(z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Coefficients of `Π (x - r)`, constant term first, leading 1 included.
fn from_roots(rs: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in rs {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, &v) in c.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= r * v;
        }
        c = next;
    }
    c
}

/// Dense numeric coefficients of a univariate polynomial with numeric
/// coefficients, constant term first.
fn numeric_coeffs(p: &MultiPoly, var: &str) -> Vec<f64> {
    p.coefficients_in(var)
        .iter()
        .map(|c| c.constant_value().expect("numeric coefficient").to_f64().unwrap())
        .collect()
}

fn close(a: &[Complex64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, &y)| (x - y).norm() <= tol * (1.0 + y.abs()))
}

/// Parses cycle notation on `1..=n` into a 0-based image vector.
fn perm(cycles: &str, n: usize) -> Vec<usize> {
    let mut img: Vec<usize> = (0..n).collect();
    for cyc in cycles.split(')').filter(|s| s.contains('(')) {
        let pts: Vec<usize> = cyc
            .trim_start_matches('(')
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<usize>().unwrap() - 1)
            .collect();
        for (k, &p) in pts.iter().enumerate() {
            img[p] = pts[(k + 1) % pts.len()];
        }
    }
    img
}

fn closure(gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = gens[0].len();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([(0..n).collect()]);
    let mut frontier: Vec<Vec<usize>> = seen.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh: Vec<usize> = (0..n).map(|i| g[h[i]]).collect();
            if seen.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    seen.into_iter().collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn resolvent_cubic_roots_are_pair_products() {
    for q in [[1i64, -3, 2, 5], [0, 2, -7, 1], [-4, 1, 1, -2], [2, 0, 0, 3]] {
        let report = resolvent_cubic(&q.map(MultiPoly::int)).unwrap();
        let c: Vec<f64> = q.iter().rev().map(|&k| k as f64).collect();
        let r = roots(&c);
        let theta = [r[0] * r[1] + r[2] * r[3], r[0] * r[2] + r[1] * r[3], r[0] * r[3] + r[1] * r[2]];
        assert!(close(&from_roots(&theta), &numeric_coeffs(&report.resolvent, "x"), 1e-9), "quartic {q:?}");
    }
}

#[test]
fn sextic_resolvent_roots_are_orbit_sums() {
    // F on six points and the orbit of the pair {1, 2}; the four conjugates
    // are the images under the coset representatives.
    let f = closure(&[perm("(1,2,5,6,4,3)", 6), perm("(1,4)(2,6)", 6)]);
    assert_eq!(f.len(), 12);
    let orbit: BTreeSet<[usize; 2]> = f
        .iter()
        .map(|g| {
            let mut e = [g[0], g[1]];
            e.sort_unstable();
            e
        })
        .collect();
    let reps: Vec<Vec<usize>> = ["()", "(1,6)", "(2,4)", "(3,5)"].iter().map(|s| perm(s, 6)).collect();
    for (a, b) in [(1i64, 1i64), (-2, 3), (3, -1)] {
        let sextic = poly("Y^6 + 5*a*Y^4 + 20*b*Y^3 - 5*a^2*Y^2 - 4*a*b*Y - a^3 - 8*b^2")
            .partial_eval(&[("a".to_string(), rat(a)), ("b".to_string(), rat(b))].into());
        let c = numeric_coeffs(&sextic, "Y");
        let r = roots(&c[..6]);
        let target = numeric_coeffs(
            &poly(RESOLVENT_RGP).partial_eval(&[("a".to_string(), rat(a)), ("b".to_string(), rat(b))].into()),
            "Y",
        );
        let found = permutations(6).into_iter().any(|lab| {
            let theta: Vec<Complex64> = reps
                .iter()
                .map(|rep| orbit.iter().map(|&[i, j]| r[lab[rep[i]]] * r[lab[rep[j]]]).sum())
                .collect();
            close(&from_roots(&theta), &target, 1e-8)
        });
        assert!(found, "no labeling reproduces the quartic at a = {a}, b = {b}");
    }
}

#[test]
fn shifted_quartic_is_b() {
    let shifted = poly(RESOLVENT_RGP).subs(&[("Y", poly("Y + 2*a"))]);
    assert_eq!(expand_discriminants(&shifted), expand_discriminants(&poly(RESOLVENT_B)));
}

fn octic_point(a: i64, z: i64, w: i64) -> (CurvePoint, Vec<f64>) {
    let b = w * w - z * z * z - a * z;
    let p = CurvePoint::new(Curve::new(rat(a), rat(b)).unwrap(), rat(z), rat(w)).unwrap();
    let d = (4 * a.pow(3) + 27 * b * b) as f64;
    // x^8 - 8w x^6 + 6(2az + 3b) x^4 - d
    let mut c = vec![0.0; 8];
    c[0] = -d;
    c[4] = 6.0 * (2 * a * z + 3 * b) as f64;
    c[6] = -8.0 * w as f64;
    (p, c)
}

/// `x1 x8 = -x1^2` over the pairing, so `h3` has roots `-r^2`; every square
/// occurs twice among the eight roots.
#[test]
fn h3_roots_are_negated_squares() {
    for (a, z, w) in [(1, 0, 1), (2, 1, 3), (-1, 2, 1), (0, -1, 2)] {
        let (p, c) = octic_point(a, z, w);
        let r = roots(&c);
        let neg_sq: Vec<Complex64> = r.iter().map(|x| -x * x).collect();
        let squared = from_roots(&neg_sq);
        let result = holq8_pipeline(Some(&p), &HolQ8Options { precision: 128, fit_curves: None }).unwrap();
        let h3 = result.h3.resolvent.partial_eval(&p.bindings());
        let h3_squared = numeric_coeffs(&h3.pow(2), "x");
        assert!(close(&squared, &h3_squared, 1e-8), "h3 at {:?}", (a, z, w));
        let listed = expand_discriminants(&poly(H3)).partial_eval(&p.bindings());
        assert!(!close(&squared, &numeric_coeffs(&listed.pow(2), "x"), 1e-8));
    }
}

/// `|v35| = |x1 x2 x3 x4 Π_{i<j} (x_i^2 - x_j^2)|` over one root from each
/// `±` pair is 1984 at `E: y^2 = x^3 + x + 1`, `P = (0, 1)`.
#[test]
fn v35_magnitude_at_reference_point() {
    let (_, c) = octic_point(1, 0, 1);
    let r = roots(&c);
    let mut reps: Vec<Complex64> = Vec::new();
    for x in r {
        if !reps.iter().any(|y| (x + y).norm() < 1e-6) {
            reps.push(x);
        }
    }
    assert_eq!(reps.len(), 4);
    let mut v = reps.iter().product::<Complex64>();
    for i in 0..4 {
        for j in i + 1..4 {
            v *= reps[i] * reps[i] - reps[j] * reps[j];
        }
    }
    assert!(v.im.abs() < 1e-6 && (v.re.abs() - 1984.0).abs() < 1e-6, "v35 = {v}");
}
