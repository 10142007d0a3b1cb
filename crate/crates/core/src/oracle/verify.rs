//! Numeric reconstruction of resolvents from labeled roots and comparison
//! with symbolic results.

use serde::Serialize;

use crate::polyring::symmetric::root_vars;
use crate::polyring::univariate::dense_coeffs;
use crate::polyring::MultiPoly;

use super::complex::{real_to_f64, real_zero, ComplexAP, Real};
use super::labeling::RootLabeling;
use super::OracleError;

/// Value of a polynomial in `x1..xn` (no other variables) at the labeled
/// roots.
pub fn sample_invariant(inv: &MultiPoly, labeling: &RootLabeling) -> Result<ComplexAP, OracleError> {
    let n = labeling.len();
    let prec = labeling.roots[0].precision();
    let terms = inv
        .exponents_over(&root_vars(n))
        .ok_or_else(|| OracleError::InvalidInput(format!("{inv} has variables beyond x1..x{n}")))?;
    let max_exp = terms.iter().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0) as usize;
    let powers: Vec<Vec<ComplexAP>> = labeling
        .roots
        .iter()
        .map(|r| {
            let mut p = vec![ComplexAP::one(prec)];
            for k in 1..=max_exp {
                p.push(&p[k - 1] * r);
            }
            p
        })
        .collect();
    let mut acc = ComplexAP::zero(prec);
    for (exps, c) in &terms {
        let mut t = ComplexAP::from_rat(c, prec);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                t = &t * &powers[i][e as usize];
            }
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

/// Ascending coefficients of `Π (x - c_i(roots))`.
pub fn numeric_resolvent(conjugates: &[MultiPoly], labeling: &RootLabeling) -> Result<Vec<ComplexAP>, OracleError> {
    let prec = labeling.roots[0].precision();
    let mut coeffs = vec![ComplexAP::one(prec)];
    for c in conjugates {
        let v = sample_invariant(c, labeling)?;
        let mut next = vec![ComplexAP::zero(prec); coeffs.len() + 1];
        for (k, a) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + a;
            next[k] = &next[k] - &(a * &v);
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// `max_k |a_k - b_k|` for a rational and a numeric coefficient list.
fn deviation(symbolic: &[ComplexAP], numeric: &[ComplexAP]) -> Real {
    let prec = numeric[0].precision();
    symbolic
        .iter()
        .zip(numeric)
        .map(|(s, n)| (s - n).abs())
        .fold(real_zero(prec), |a, b| if b > a { b } else { a })
}

/// A relabeling under which the numeric and symbolic resolvents agree.
#[derive(Clone, Debug)]
pub struct LabelingMatch {
    /// 0-based source index for each root variable.
    pub relabeling: Vec<usize>,
    pub max_coeff_deviation: Real,
}

/// Compares a symbolic univariate resolvent (rational coefficients in `var`)
/// with `Π (var - c_i)` evaluated at the labeled roots, searching the given
/// relabelings in order until the coefficient deviation is below `tol`.
pub fn verify_resolvent(
    symbolic: &MultiPoly,
    var: &str,
    conjugates: &[MultiPoly],
    labeling: &RootLabeling,
    relabelings: &[Vec<usize>],
    tol: &Real,
) -> Result<LabelingMatch, OracleError> {
    let prec = labeling.roots[0].precision();
    let sym: Vec<ComplexAP> = dense_coeffs(symbolic, var)?
        .iter()
        .map(|c| ComplexAP::from_rat(c, prec))
        .collect();
    if sym.len() != conjugates.len() + 1 {
        return Err(OracleError::InvalidInput(format!(
            "degree {} resolvent against {} conjugates",
            sym.len().saturating_sub(1),
            conjugates.len()
        )));
    }
    let mut best: Option<Real> = None;
    for source in relabelings {
        let numeric = numeric_resolvent(conjugates, &labeling.relabel(source))?;
        let dev = deviation(&sym, &numeric);
        if dev < *tol {
            return Ok(LabelingMatch {
                relabeling: source.clone(),
                max_coeff_deviation: dev,
            });
        }
        if best.as_ref().is_none_or(|b| dev < *b) {
            best = Some(dev);
        }
    }
    Err(OracleError::NoLabelingMatches {
        best_deviation: best.map_or(f64::INFINITY, |b| real_to_f64(&b)),
    })
}

/// Serializable outcome of one numeric check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub curve: serde_json::Value,
    pub precision_bits: usize,
    pub max_residual: f64,
    /// 1-based root index assigned to each `x_i`.
    pub matched_labeling: Option<Vec<usize>>,
    pub max_coeff_deviation: f64,
    pub pass: bool,
}

impl OracleReport {
    pub fn from_match(
        curve: serde_json::Value,
        precision_bits: usize,
        max_residual: &Real,
        result: &Result<LabelingMatch, OracleError>,
    ) -> Self {
        let (matched_labeling, max_coeff_deviation) = match result {
            Ok(m) => (
                Some(m.relabeling.iter().map(|s| s + 1).collect()),
                real_to_f64(&m.max_coeff_deviation),
            ),
            Err(OracleError::NoLabelingMatches { best_deviation }) => (None, *best_deviation),
            Err(_) => (None, f64::INFINITY),
        };
        OracleReport {
            curve,
            precision_bits,
            max_residual: real_to_f64(max_residual),
            matched_labeling,
            max_coeff_deviation,
            pass: result.is_ok(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::complex::real_from_f64;
    use super::super::labeling::all_relabelings;
    use crate::polyring::poly;

    #[test]
    fn quadratic_from_roots() {
        let p = 128;
        let lab = RootLabeling::new(vec![ComplexAP::from_f64(2.0, 0.0, p), ComplexAP::from_f64(-3.0, 0.0, p)]);
        let tol = real_from_f64(1e-30, p);
        let conj = [poly("x1 + x2"), poly("x1*x2")];
        let good = poly("y^2 + 7*y + 6");
        let m = verify_resolvent(&good, "y", &conj, &lab, &all_relabelings(2), &tol).unwrap();
        assert_eq!(m.relabeling, vec![0, 1]);
        let bad = poly("y^2 + 7*y + 5");
        assert!(matches!(
            verify_resolvent(&bad, "y", &conj, &lab, &all_relabelings(2), &tol),
            Err(OracleError::NoLabelingMatches { .. })
        ));
    }

    #[test]
    fn order_sensitive_conjugates() {
        let p = 128;
        let lab = RootLabeling::new(vec![ComplexAP::from_f64(1.0, 0.0, p), ComplexAP::from_f64(2.0, 0.0, p)]);
        let tol = real_from_f64(1e-30, p);
        // x - (2*x1 + x2) vanishes at 5 only after swapping the labels
        let m = verify_resolvent(&poly("y - 5"), "y", &[poly("2*x1 + x2")], &lab, &all_relabelings(2), &tol).unwrap();
        assert_eq!(m.relabeling, vec![1, 0]);
    }
}
