//! Simultaneous root finding: a double-precision Aberth–Ehrlich run seeds an
//! arbitrary-precision refinement, with Durand–Kerner as fallback.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::polyring::univariate::{dense_coeffs, is_squarefree};
use crate::polyring::{BigRat, MultiPoly};

use super::complex::{real_pow2_neg, real_to_f64, ComplexAP, Real};
use super::OracleError;

const F64_ITERATIONS: usize = 500;
const AP_ITERATIONS: usize = 200;

/// Roots of a univariate polynomial with the worst normalized residual
/// `max |p(ρ)| / |lc|`.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<ComplexAP>,
    pub max_residual: Real,
    pub precision: usize,
}

/// `(p(z), p'(z))` by Horner's rule, coefficients ascending.
fn horner_ap(coeffs: &[ComplexAP], z: &ComplexAP) -> (ComplexAP, ComplexAP) {
    let n = coeffs.len() - 1;
    let mut p = coeffs[n].clone();
    let mut dp = ComplexAP::zero(z.precision());
    for c in coeffs[..n].iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

fn horner_f64(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let n = coeffs.len() - 1;
    let mut p = coeffs[n];
    let mut dp = Complex64::zero();
    for c in coeffs[..n].iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Initial points on a slightly rotated circle of Cauchy-bound radius.
fn initial_points(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n].abs();
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.abs() / lc).fold(0.0, f64::max);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let cs: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let mut z = initial_points(coeffs);
    let n = z.len();
    for _ in 0..F64_ITERATIONS {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner_f64(&cs, z[k]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// One refinement sweep; returns the largest relative correction.
fn sweep(coeffs: &[ComplexAP], z: &mut [ComplexAP], aberth: bool) -> f64 {
    let n = z.len();
    let one = ComplexAP::one(z[0].precision());
    let lc = &coeffs[n];
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let (p, dp) = horner_ap(coeffs, &z[k]);
        let step = if aberth {
            let ratio = &p / &dp;
            let mut s = ComplexAP::zero(z[k].precision());
            for j in (0..n).filter(|&j| j != k) {
                s = &s + &(&z[k] - &z[j]).recip();
            }
            &ratio / &(&one - &(&ratio * &s))
        } else {
            let mut denom = lc.clone();
            for j in (0..n).filter(|&j| j != k) {
                denom = &denom * &(&z[k] - &z[j]);
            }
            &p / &denom
        };
        z[k] = &z[k] - &step;
        let scale = real_to_f64(&z[k].abs()).max(1.0);
        worst = worst.max(real_to_f64(&step.abs()) / scale);
    }
    worst
}

fn refine(coeffs: &[ComplexAP], seeds: &[Complex64], prec: usize, aberth: bool) -> Option<Vec<ComplexAP>> {
    let mut z: Vec<ComplexAP> = seeds.iter().map(|s| ComplexAP::from_f64(s.re, s.im, prec)).collect();
    let target = 2f64.powi(-(prec as i32) + 8);
    // below this, a correction that stops shrinking is rounding noise
    let noise = 2f64.powi(-(prec as i32) / 2 - 16);
    let mut prev = f64::INFINITY;
    for _ in 0..AP_ITERATIONS {
        let worst = sweep(coeffs, &mut z, aberth);
        if !worst.is_finite() {
            return None;
        }
        if worst < target || (worst < noise && worst > prev / 2.0) {
            return Some(z);
        }
        prev = worst;
    }
    None
}

fn max_residual(coeffs: &[ComplexAP], roots: &[ComplexAP]) -> Real {
    let lc = coeffs[coeffs.len() - 1].abs();
    roots
        .iter()
        .map(|r| horner_ap(coeffs, r).0.abs() / &lc)
        .fold(super::complex::real_zero(roots[0].precision()), |a, b| if b > a { b } else { a })
}

/// All complex roots of a squarefree univariate polynomial in `var` with
/// rational coefficients, each with `|p(ρ)|/|lc| < 2^(-prec/2)`.
pub fn find_roots(p: &MultiPoly, var: &str, prec: usize) -> Result<RootSet, OracleError> {
    let dense = dense_coeffs(p, var)?;
    if dense.len() < 2 {
        return Err(OracleError::InvalidInput("polynomial of degree zero".into()));
    }
    if !is_squarefree(&dense) {
        return Err(OracleError::NotSquarefree);
    }
    let f: Vec<f64> = dense.iter().map(|c: &BigRat| c.to_f64().unwrap_or(f64::NAN)).collect();
    if f.iter().any(|c| !c.is_finite()) {
        return Err(OracleError::InvalidInput("coefficients exceed double range".into()));
    }
    let coeffs: Vec<ComplexAP> = dense.iter().map(|c| ComplexAP::from_rat(c, prec)).collect();
    let seeds = aberth_f64(&f);
    let bound = real_pow2_neg(prec / 2, prec);
    for aberth in [true, false] {
        if let Some(roots) = refine(&coeffs, &seeds, prec, aberth) {
            let residual = max_residual(&coeffs, &roots);
            if residual < bound {
                return Ok(RootSet {
                    roots,
                    max_residual: residual,
                    precision: prec,
                });
            }
        }
    }
    Err(OracleError::NonConvergence {
        iterations: AP_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    fn close(z: &ComplexAP, re: f64, im: f64) -> bool {
        let (a, b) = z.to_f64();
        (a - re).abs() < 1e-12 && (b - im).abs() < 1e-12
    }

    #[test]
    fn unit_roots() {
        let rs = find_roots(&poly("x^2 + 1"), "x", 128).unwrap();
        assert!(rs.roots.iter().any(|r| close(r, 0.0, 1.0)));
        assert!(rs.roots.iter().any(|r| close(r, 0.0, -1.0)));
        let rs = find_roots(&poly("x^4 - 1"), "x", 128).unwrap();
        for (re, im) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            assert!(rs.roots.iter().any(|r| close(r, re, im)));
        }
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(matches!(find_roots(&poly("(x - 1)^2"), "x", 64), Err(OracleError::NotSquarefree)));
        assert!(matches!(find_roots(&poly("3"), "x", 64), Err(OracleError::InvalidInput(_))));
    }
}
