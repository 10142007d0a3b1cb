//! Resolvent coefficients via full symmetric reduction.

use crate::polyring::symmetric::{elem_vars, symmetric_reduce};
use crate::polyring::MultiPoly;

use super::ResolventError;

/// Rewrites each coefficient (in `var`) of a resolvent written in the roots
/// `x1..xn` of a monic `f` through `f`'s coefficients, where
/// `f_coeffs = [a_{n-1}, ..., a_0]` and `e_k -> (-1)^k a_{n-k}`.
pub fn engine_symmetric(resolvent: &MultiPoly, var: &str, f_coeffs: &[MultiPoly]) -> Result<MultiPoly, ResolventError> {
    let n = f_coeffs.len();
    let bindings = elem_vars(n)
        .into_iter()
        .zip(f_coeffs)
        .enumerate()
        .map(|(k, (e, a))| (e, if k % 2 == 0 { -a } else { a.clone() }))
        .collect();
    let mut out = Vec::new();
    for c in resolvent.coefficients_in(var) {
        let reduced = symmetric_reduce(&c, n)?;
        out.push(reduced.substitute(&bindings));
    }
    Ok(MultiPoly::from_coefficients(var, &out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    #[test]
    fn quadratic_vieta() {
        // single conjugate e1 of a monic quadratic x^2 + a1 x + a0
        let r = poly("x - (x1 + x2)");
        let out = engine_symmetric(&r, "x", &[poly("a1"), poly("a0")]).unwrap();
        assert_eq!(out, poly("x + a1"));
    }
}
