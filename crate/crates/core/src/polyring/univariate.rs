//! Dense univariate views of `MultiPoly` and Euclidean gcd over Q.

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::BigRat;
use super::PolyError;

/// Coefficients in ascending order of `var`; every coefficient must be a
/// rational constant.
pub fn dense_coeffs(p: &MultiPoly, var: &str) -> Result<Vec<BigRat>, PolyError> {
    if let Some(other) = p.vars().iter().find(|v| *v != var) {
        return Err(PolyError::UnexpectedVariable(other.clone()));
    }
    Ok(p.coefficients_in(var)
        .iter()
        .map(|c| c.constant_value().expect("univariate coefficient"))
        .collect())
}

pub fn from_dense(var: &str, coeffs: &[BigRat]) -> MultiPoly {
    let n = coeffs.len();
    MultiPoly::from_terms(
        vec![var.to_string()],
        coeffs.iter().enumerate().take(n).map(|(k, c)| (vec![k as u32], c.clone())),
    )
}

fn trim(v: &mut Vec<BigRat>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of `a` by nonzero `b` (dense ascending coefficients).
pub fn rem(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut r = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut r);
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd.
pub fn gcd(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &l;
        }
    }
    x
}

pub fn derivative(a: &[BigRat]) -> Vec<BigRat> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRat::from_integer((k as i64).into()))
        .collect()
}

/// No repeated roots: `gcd(p, p')` is constant.
pub fn is_squarefree(a: &[BigRat]) -> bool {
    gcd(a, &derivative(a)).len() <= 1
}

pub fn is_monic(a: &[BigRat]) -> bool {
    a.last().is_some_and(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    #[test]
    fn gcd_and_squarefree() {
        let a = dense_coeffs(&poly("x^3 - x"), "x").unwrap();
        let b = dense_coeffs(&poly("x^2 + 2*x + 1"), "x").unwrap();
        assert_eq!(from_dense("x", &gcd(&a, &b)), poly("x + 1"));
        assert!(is_squarefree(&a));
        assert!(!is_squarefree(&b));
        assert!(matches!(dense_coeffs(&poly("x + y"), "x"), Err(PolyError::UnexpectedVariable(_))));
        assert_eq!(from_dense("x", &rem(&a, &b)), poly("2*x + 2"));
    }
}
