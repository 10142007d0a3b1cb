//! Specialization of octic invariants through the negation pairing of the
//! roots, followed by reduction to the elementary symmetric functions of the
//! squared roots.
//!
//! After `x8 = -x1, x6 = -x2, x7 = -x3, x5 = -x4`, a coefficient `c` in
//! `x1..x4` splits as `c = S + A` with `S` even and `A` odd in `x1`. For the
//! groups involved, `S` is a symmetric function of `x1^2..x4^2` and `A` is
//! the alternating product
//!
//! ```text
//! v = x1*x2*x3*x4 * Π_{i<j} (x_i^2 - x_j^2)
//! ```
//!
//! times another symmetric function of the squares. Those symmetric
//! functions are rewritten through `E1..E4`, the elementary symmetric
//! functions of the squares, whose values are read off the octic.

use std::collections::BTreeMap;

use crate::permgroup::catalog::NEGATION_PAIRS;
use crate::polyring::symmetric::{elem_sym_in, root_vars, symmetric_reduce_in};
use crate::polyring::{poly, root_var, v, BigRat, MultiPoly};

use super::ResolventError;

/// Names of the elementary symmetric functions of the squared roots.
pub fn square_vars() -> Vec<String> {
    (1..=4).map(|k| format!("E{k}")).collect()
}

/// The pairing `x_j -> -x_i` for each `(i, j)` in [`NEGATION_PAIRS`] and the
/// values of `E1..E4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingRelations {
    pub substitution: BTreeMap<String, MultiPoly>,
    /// `E_k`, `k = 1..4`, in the curve parameters.
    pub values: [MultiPoly; 4],
}

impl PairingRelations {
    /// Reads `E_k = (-1)^k [var^(8-2k)] f` off a monic even octic `f`.
    pub fn from_even_octic(f: &MultiPoly, var: &str) -> Self {
        let cs = f.coefficients_in(var);
        assert_eq!(cs.len(), 9, "expected an octic");
        assert!(cs[8] == MultiPoly::one(), "expected a monic octic");
        assert!(cs.iter().skip(1).step_by(2).all(MultiPoly::is_zero), "expected an even octic");
        let values = std::array::from_fn(|i| {
            let k = i + 1;
            let c = cs[8 - 2 * k].clone();
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        });
        let substitution = NEGATION_PAIRS
            .iter()
            .map(|&(i, j)| (root_var(j), -v(&root_var(i))))
            .collect();
        PairingRelations { substitution, values }
    }

    /// Applies the pairing: a polynomial in `x1..x8` becomes one in `x1..x4`.
    pub fn specialize(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute(&self.substitution)
    }

    fn bindings(&self) -> BTreeMap<String, MultiPoly> {
        square_vars().into_iter().zip(self.values.iter().cloned()).collect()
    }

    /// Substitutes the values of `E1..E4`.
    pub fn evaluate(&self, q: &MultiPoly) -> MultiPoly {
        q.substitute(&self.bindings())
    }
}

/// `E_k` in terms of the elementary symmetric functions `e1..e4` of the
/// unsquared roots.
pub fn squares_in_elementary() -> [MultiPoly; 4] {
    [
        poly("e1^2 - 2*e2"),
        poly("e2^2 - 2*e1*e3 + 2*e4"),
        poly("e3^2 - 2*e2*e4"),
        poly("e4^2"),
    ]
}

/// The alternating product `v` on `x1..x4`.
pub fn alternating_product() -> MultiPoly {
    let xs: Vec<MultiPoly> = (1..=4).map(|i| v(&root_var(i))).collect();
    let mut out: MultiPoly = xs.iter().cloned().product();
    for i in 0..4 {
        for j in i + 1..4 {
            out = &out * &(&xs[i].pow(2) - &xs[j].pow(2));
        }
    }
    out
}

/// `c = even(E) + odd(E) * v` for a specialized coefficient `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDecomposition {
    /// Polynomial in `E1..E4`.
    pub even: MultiPoly,
    /// Polynomial in `E1..E4`; zero when `c` lies in the square subring.
    pub odd: MultiPoly,
    /// `even` with the values of the `E_k` substituted.
    pub even_value: MultiPoly,
    pub odd_value: MultiPoly,
}

impl SquareDecomposition {
    /// Reassembles the specialized coefficient in `x1..x4`.
    pub fn expand(&self) -> MultiPoly {
        let vars = root_vars(4);
        let squares: BTreeMap<String, MultiPoly> = vars
            .iter()
            .map(|x| (x.clone(), v(x).pow(2)))
            .collect();
        let back: BTreeMap<String, MultiPoly> = square_vars()
            .into_iter()
            .zip((1..=4).map(|k| elem_sym_in(&vars, k).substitute(&squares)))
            .collect();
        &self.even.substitute(&back) + &(&self.odd.substitute(&back) * &alternating_product())
    }

    /// Value once the alternating product is assigned `v_value`.
    pub fn value_with(&self, v_value: &MultiPoly) -> MultiPoly {
        &self.even_value + &(&self.odd_value * v_value)
    }
}

/// `x_i^(2k) -> x_i^k`, then symmetric reduction to `E1..E4`.
fn reduce_in_squares(p: &MultiPoly) -> Result<MultiPoly, ResolventError> {
    let halved = p.scale_exponents(1, 2).ok_or(ResolventError::NotAlternating)?;
    Ok(symmetric_reduce_in(&halved, &root_vars(4), &square_vars())?)
}

/// Splits the specialization of `coeff` into its square-symmetric and
/// alternating parts.
pub fn square_decompose(coeff: &MultiPoly, rel: &PairingRelations) -> Result<SquareDecomposition, ResolventError> {
    let c = rel.specialize(coeff);
    let flipped = c.subs(&[("x1", -v("x1"))]);
    let half = BigRat::new(1.into(), 2.into());
    let even_part = (&c + &flipped).scale(&half);
    let odd_part = (&c - &flipped).scale(&half);
    let even = reduce_in_squares(&even_part)?;
    let odd = if odd_part.is_zero() {
        MultiPoly::zero()
    } else {
        let q = odd_part
            .exact_div(&alternating_product())
            .map_err(|_| ResolventError::NotAlternating)?;
        reduce_in_squares(&q)?
    };
    let out = SquareDecomposition {
        even_value: rel.evaluate(&even),
        odd_value: rel.evaluate(&odd),
        even,
        odd,
    };
    debug_assert_eq!(out.expand(), c);
    Ok(out)
}

/// The value of a coefficient in the curve parameters, provided its
/// specialization lies in the square subring.
pub fn engine_sign_specialize(coeff: &MultiPoly, rel: &PairingRelations) -> Result<MultiPoly, ResolventError> {
    let dec = square_decompose(coeff, rel)?;
    if dec.odd.is_zero() {
        Ok(dec.even_value)
    } else {
        Err(ResolventError::NotInSquareSubring {
            even: dec.even_value,
            odd: dec.odd_value,
        })
    }
}
