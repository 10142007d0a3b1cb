//! Detection of conjugate invariants that collapse under the negation
//! pairing and so cannot separate the resolvent roots.

use crate::polyring::MultiPoly;

use super::sign::PairingRelations;

/// Whether every conjugate specializes to the zero polynomial.
pub fn vanishing_check(conjugates: &[MultiPoly], rel: &PairingRelations) -> bool {
    conjugates.iter().all(|c| rel.specialize(c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;

    #[test]
    fn pair_sums_vanish() {
        let rel = PairingRelations::from_even_octic(&poly("x^8 - 1"), "x");
        assert!(vanishing_check(&[poly("x1 + x8"), poly("x2*x3 - x6*x7")], &rel));
        assert!(!vanishing_check(&[poly("x1 + x8"), poly("x1*x8")], &rel));
    }
}
