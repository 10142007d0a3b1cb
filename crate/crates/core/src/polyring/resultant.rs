//! Sylvester resultants via fraction-free (Bareiss) elimination over the
//! ring of the remaining variables.

use super::poly::MultiPoly;
use super::PolyError;

/// Sylvester matrix of `p` and `q` with respect to `var`: `deg q` shifted
/// rows of `p`'s coefficients followed by `deg p` shifted rows of `q`'s.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![MultiPoly::zero(); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss elimination; every intermediate division is exact.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly, PolyError> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // prefer the sparsest nonzero pivot to limit growth
            let swap = (k + 1..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].num_terms());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev)?;
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `Res_var(p, q)`, equal to `lc(p)^deg(q) * Π q(ρ)` over the roots ρ of `p`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial(var.to_string()));
    }
    let dp = p.degree_in(var);
    let dq = q.degree_in(var);
    if dq == 0 {
        return Ok(q.pow(dp));
    }
    if dp == 0 {
        return Ok(p.pow(dq));
    }
    bareiss_det(sylvester_matrix(p, q, var))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::text::poly;

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&poly("x^2 - 1"), &poly("x - 2"), "x").unwrap(), poly("3"));
        assert_eq!(resultant(&poly("x^2 - 1"), &poly("x - 1"), "x").unwrap(), poly("0"));
        assert_eq!(resultant(&poly("x^2 - 1"), &poly("5"), "x").unwrap(), poly("25"));
        assert!(matches!(
            resultant(&poly("0"), &poly("x"), "x"),
            Err(PolyError::ZeroPolynomial(_))
        ));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // Res(p, p') = -a * disc for p = a x^2 + b x + c
        let p = poly("a*x^2 + b*x + c");
        let r = resultant(&p, &p.derivative("x"), "x").unwrap();
        assert_eq!(r, poly("-a*(b^2 - 4*a*c)"));
    }

    #[test]
    fn swap_sign() {
        // Res(q, p) = (-1)^(deg p deg q) Res(p, q)
        let p = poly("x^2 + 3*x + 1");
        let q = poly("2*x^3 - x + 7");
        let a = resultant(&p, &q, "x").unwrap();
        let b = resultant(&q, &p, "x").unwrap();
        assert_eq!(a, b);
        let (l1, l2) = (poly("x + 3"), poly("x - 4"));
        assert_eq!(resultant(&l1, &l2, "x").unwrap(), poly("-7"));
        assert_eq!(resultant(&l2, &l1, "x").unwrap(), poly("7"));
    }
}
