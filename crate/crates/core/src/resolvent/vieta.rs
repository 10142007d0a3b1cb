//! `Π (var - c_i)` expanded over the ambient polynomial ring.

use crate::polyring::MultiPoly;

/// Ascending coefficients of the monic polynomial with roots `conjugates`.
pub fn vieta_coefficients(conjugates: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut coeffs = vec![MultiPoly::one()];
    for c in conjugates {
        let mut next = vec![MultiPoly::zero(); coeffs.len() + 1];
        for (k, a) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + a;
            next[k] = &next[k] - &(a * c);
        }
        coeffs = next;
    }
    coeffs
}

pub fn vieta_expand(conjugates: &[MultiPoly], var: &str) -> MultiPoly {
    MultiPoly::from_coefficients(var, &vieta_coefficients(conjugates))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    #[test]
    fn small_products() {
        assert_eq!(vieta_expand(&[poly("1"), poly("2")], "x"), poly("x^2 - 3*x + 2"));
        assert_eq!(
            vieta_expand(&[poly("x1"), poly("x2")], "Y"),
            poly("Y^2 - (x1 + x2)*Y + x1*x2")
        );
        assert_eq!(vieta_expand(&[], "x"), poly("1"));
    }
}
