//! Recovery of a weighted-homogeneous polynomial from its values at sample
//! points: exact linear fit over the monomials of the target weight, an
//! integrality check, and agreement on held-out samples.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::polyring::linsolve::solve;
use crate::polyring::rational::is_integral;
use crate::polyring::{BigRat, MultiPoly, WeightSystem};

use super::ResolventError;

/// Number of trailing samples kept out of the fit.
pub const HELD_OUT: usize = 3;
/// Samples required beyond the number of unknowns.
pub const SAMPLE_MARGIN: usize = 5;

/// An exact value of the unknown polynomial at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzSample {
    pub point: BTreeMap<String, BigRat>,
    pub value: BigRat,
}

/// Basis of the fit: monomials over `vars` of weight `target` whose exponent
/// in each capped variable stays within its cap.
pub fn ansatz_basis(
    ws: &WeightSystem,
    vars: &[&str],
    target: u32,
    caps: &[(&str, u32)],
) -> Result<Vec<Vec<u32>>, ResolventError> {
    let mut monos = ws.monomials_of_weight(vars, target)?;
    monos.retain(|m| {
        caps.iter().all(|(name, cap)| {
            vars.iter()
                .position(|v| v == name)
                .is_none_or(|i| m[i] <= *cap)
        })
    });
    Ok(monos)
}

fn eval_monomial(vars: &[&str], exps: &[u32], point: &BTreeMap<String, BigRat>) -> Result<BigRat, ResolventError> {
    let mut acc = BigRat::from_integer(1.into());
    for (v, e) in vars.iter().zip(exps) {
        if *e > 0 {
            let x = point
                .get(*v)
                .ok_or_else(|| crate::polyring::PolyError::MissingBinding(v.to_string()))?;
            acc *= num_traits::pow(x.clone(), *e as usize);
        }
    }
    Ok(acc)
}

/// Fits integer coefficients over [`ansatz_basis`] to the samples. All but
/// the last [`HELD_OUT`] samples enter the fit; the rest must agree exactly.
pub fn engine_ansatz(
    target_weight: u32,
    ws: &WeightSystem,
    vars: &[&str],
    caps: &[(&str, u32)],
    samples: &[AnsatzSample],
) -> Result<MultiPoly, ResolventError> {
    let basis = ansatz_basis(ws, vars, target_weight, caps)?;
    let needed = basis.len() + SAMPLE_MARGIN;
    if samples.len() < needed {
        return Err(ResolventError::Underdetermined {
            needed,
            got: samples.len(),
        });
    }
    let (fit, held) = samples.split_at(samples.len() - HELD_OUT);
    let rows: Vec<Vec<BigRat>> = fit
        .iter()
        .map(|s| basis.iter().map(|m| eval_monomial(vars, m, &s.point)).collect())
        .collect::<Result<_, _>>()?;
    let rhs: Vec<BigRat> = fit.iter().map(|s| s.value.clone()).collect();
    let sol = solve(&rows, &rhs).ok_or_else(|| {
        ResolventError::NonIntegralFit(format!("no polynomial of weight {target_weight} fits the samples"))
    })?;
    if sol.rank < basis.len() {
        return Err(ResolventError::Underdetermined {
            needed: basis.len(),
            got: sol.rank,
        });
    }
    if let Some(c) = sol.particular.iter().find(|c| !is_integral(c)) {
        return Err(ResolventError::NonIntegralFit(format!("coefficient {c}")));
    }
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let fitted = MultiPoly::from_terms(
        names,
        basis
            .into_iter()
            .zip(sol.particular)
            .filter(|(_, c)| !c.is_zero()),
    );
    for (i, s) in held.iter().enumerate() {
        if fitted.evaluate(&s.point)? != s.value {
            return Err(ResolventError::HeldOutMismatch(i));
        }
    }
    Ok(fitted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;
    use crate::polyring::rational::rat;

    fn ws() -> WeightSystem {
        WeightSystem::new([("a", 8), ("b", 12), ("z", 4), ("w", 6)])
    }

    fn samples(target: &MultiPoly, n: usize) -> Vec<AnsatzSample> {
        (0..n as i64)
            .map(|i| {
                let (a, z, w) = (i % 5 - 2, (i * 7) % 11 - 5, (i * 3) % 13 - 6);
                let b = w * w - z * z * z - a * z;
                let point: BTreeMap<String, BigRat> = [("a", a), ("b", b), ("z", z), ("w", w)]
                    .into_iter()
                    .map(|(k, x)| (k.to_string(), rat(x)))
                    .collect();
                let value = target.evaluate(&point).unwrap();
                AnsatzSample { point, value }
            })
            .collect()
    }

    #[test]
    fn recovers_weight_24() {
        let target = poly("4*a^3 + 27*b^2 - 3*a^2*z^2 - 2*b*z^3 + z^6 + a*b*z");
        let out = engine_ansatz(24, &ws(), &["a", "b", "z", "w"], &[("w", 1)], &samples(&target, 40)).unwrap();
        assert_eq!(out, target);
    }

    #[test]
    fn zero_function() {
        let out = engine_ansatz(24, &ws(), &["a", "b", "z", "w"], &[("w", 1)], &samples(&MultiPoly::zero(), 40)).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn too_few_samples() {
        let err = engine_ansatz(24, &ws(), &["a", "b", "z", "w"], &[("w", 1)], &samples(&MultiPoly::zero(), 3));
        assert!(matches!(err, Err(ResolventError::Underdetermined { .. })));
    }

    #[test]
    fn wrong_weight_is_rejected() {
        let target = poly("a^3");
        let err = engine_ansatz(12, &ws(), &["a", "b", "z", "w"], &[("w", 1)], &samples(&target, 30));
        assert!(err.is_err());
    }
}
