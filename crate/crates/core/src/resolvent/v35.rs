//! The degree-16 alternating invariant obtained from a full orbit sum over
//! `Hol(Q8)` specialized through the negation pairing.

use crate::permgroup::action::act_on_poly;
use crate::permgroup::catalog::V35;
use crate::permgroup::PermGroup;
use crate::polyring::rational::frac;
use crate::polyring::{poly, MultiPoly};

use super::sign::{alternating_product, square_decompose, PairingRelations};
use super::ResolventError;

/// Seed monomial of the orbit sum.
pub const U35_SEED: &str = "x1^7*x2^5*x3^3*x5";

/// Listed value of `v35` under the evaluation homomorphism, in the labeling
/// class used for the octic resolvents.
pub const V35_IMAGE: &str = "-64*d*(27*b*z^3 - 9*a^2*z^2 - a^3)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct V35Data {
    /// `Σ_{σ∈G} σ(x1^7 x2^5 x3^3 x5)`, one summand per group element.
    pub u35: MultiPoly,
    /// `-u35/8` after the pairing, in `x1..x4`.
    pub v35: MultiPoly,
}

/// Builds `u35` and `v35` and checks `v35` against both its listed expansion
/// and the product `x1 x2 x3 x4 Π_{i<j} (x_i - x_j)(x_i + x_j)`.
pub fn compute_v35(g: &PermGroup, rel: &PairingRelations) -> Result<V35Data, ResolventError> {
    let seed = poly(U35_SEED);
    let mut u35 = MultiPoly::zero();
    for s in g.elements() {
        u35 = &u35 + &act_on_poly(s, &seed)?;
    }
    let v35 = rel.specialize(&u35).scale(&frac(-1, 8));
    assert_eq!(v35, poly(V35), "v35 differs from its listed expansion");
    assert_eq!(v35, alternating_product(), "v35 differs from its product form");
    Ok(V35Data { u35, v35 })
}

/// `v35^2` is square-symmetric; its value in the curve parameters.
pub fn v35_square_value(rel: &PairingRelations) -> Result<MultiPoly, ResolventError> {
    let sq = alternating_product().pow(2);
    let dec = square_decompose(&sq, rel)?;
    debug_assert!(dec.odd.is_zero());
    Ok(dec.even_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog::holq8;

    fn rel() -> PairingRelations {
        PairingRelations::from_even_octic(&poly("x^8 - 8*w*x^6 + 6*(2*a*z + 3*b)*x^4 - (4*a^3 + 27*b^2)"), "x")
    }

    #[test]
    fn listed_form() {
        let s = &holq8()[0];
        let data = compute_v35(&s.g, &rel()).unwrap();
        assert_eq!(data.v35.num_terms(), 24);
        // vanishes on the diagonal x1 = x2
        assert!(data.v35.subs(&[("x2", poly("x1"))]).is_zero());
    }

    #[test]
    fn square_is_symmetric() {
        // the square is the discriminant-like product, never alternating
        let sq = v35_square_value(&rel()).unwrap();
        assert!(!sq.is_zero());
    }
}
