//! Division polynomials `A_n` in `x, y, a, b`, reduced modulo
//! `y^2 = x^3 + a x + b`, their primitive parts `Γ_n`, and the polynomials
//! `T_n` cutting out the `y`-coordinates of primitive `n`-torsion.

use std::collections::BTreeMap;
use std::sync::RwLock;

use serde::Serialize;

use crate::polyring::{poly, resultant, MultiPoly};

use super::reference::{A3, A4};
use super::EllipticError;

fn curve_rhs() -> MultiPoly {
    poly("x^3 + a*x + b")
}

/// Rewrites `y^2` as `x^3 + a x + b` until the `y`-degree is at most one.
pub fn reduce_y(p: &MultiPoly) -> MultiPoly {
    let rhs = curve_rhs();
    let y = poly("y");
    p.coefficients_in("y")
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let odd = if k % 2 == 1 { y.clone() } else { MultiPoly::one() };
            &(c * &rhs.pow(k as u32 / 2)) * &odd
        })
        .sum()
}

fn mul_reduced(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    reduce_y(&(p * q))
}

/// `p / q` in the coordinate ring of the curve, both reduced. A divisor of
/// the form `y * q0` is handled as `p * y / ((x^3 + a x + b) * q0)`.
pub fn divide_reduced(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, EllipticError> {
    if let Ok(r) = p.exact_div(q) {
        return Ok(reduce_y(&r));
    }
    let y = poly("y");
    let q0 = q.exact_div(&y).map_err(|_| EllipticError::NotDivisible)?;
    let num = mul_reduced(p, &y);
    let r = num
        .exact_div(&(&curve_rhs() * &q0))
        .map_err(|_| EllipticError::NotDivisible)?;
    Ok(reduce_y(&r))
}

/// Memoized sequence `A_0 = 0, A_1 = 1, A_2 = 2y`, `A_3`, `A_4` as listed,
/// then
///
/// ```text
/// A_{2m+1} = A_{m+2} A_m^3 - A_{m-1} A_{m+1}^3
/// 2y A_{2m} = A_m (A_{m+2} A_{m-1}^2 - A_{m-2} A_{m+1}^2)
/// ```
///
/// The cache only grows; concurrent readers see a prefix of the sequence.
pub struct DivisionPolySequence {
    cache: RwLock<BTreeMap<u32, MultiPoly>>,
}

impl Default for DivisionPolySequence {
    fn default() -> Self {
        Self::new()
    }
}

impl DivisionPolySequence {
    pub fn new() -> Self {
        let seeds = [
            (0, MultiPoly::zero()),
            (1, MultiPoly::one()),
            (2, poly("2*y")),
            (3, poly(A3)),
            (4, poly(A4)),
        ];
        DivisionPolySequence {
            cache: RwLock::new(seeds.into_iter().collect()),
        }
    }

    /// `A_n`, reduced to `y`-degree at most one.
    pub fn get(&self, n: u32) -> Result<MultiPoly, EllipticError> {
        if let Some(p) = self.cache.read().expect("cache lock").get(&n) {
            return Ok(p.clone());
        }
        let m = n / 2;
        let a = |k: u32| self.get(k);
        let value = if n % 2 == 1 {
            let left = mul_reduced(&a(m + 2)?, &a(m)?.pow(3));
            let right = mul_reduced(&a(m - 1)?, &a(m + 1)?.pow(3));
            reduce_y(&(&left - &right))
        } else {
            let inner = &mul_reduced(&a(m + 2)?, &a(m - 1)?.pow(2)) - &mul_reduced(&a(m - 2)?, &a(m + 1)?.pow(2));
            let full = mul_reduced(&a(m)?, &inner);
            divide_reduced(&full, &poly("2*y"))?
        };
        self.cache.write().expect("cache lock").insert(n, value.clone());
        Ok(value)
    }

    /// Checks both recursions at `m` as identities in the reduced ring.
    pub fn recursions_hold(&self, m: u32) -> Result<bool, EllipticError> {
        assert!(m >= 2);
        let a = |k: u32| self.get(k);
        let odd = reduce_y(&(&mul_reduced(&a(m + 2)?, &a(m)?.pow(3)) - &mul_reduced(&a(m - 1)?, &a(m + 1)?.pow(3))));
        let inner = &mul_reduced(&a(m + 2)?, &a(m - 1)?.pow(2)) - &mul_reduced(&a(m - 2)?, &a(m + 1)?.pow(2));
        let even_rhs = mul_reduced(&a(m)?, &inner);
        let even_lhs = mul_reduced(&poly("2*y"), &a(2 * m)?);
        Ok(odd == a(2 * m + 1)? && even_lhs == even_rhs)
    }

    /// `Γ_n = Π_{d | n} A_d^{μ(n/d)}`.
    pub fn gamma(&self, n: u32) -> Result<MultiPoly, EllipticError> {
        assert!(n >= 2);
        let mut num = MultiPoly::one();
        let mut den = MultiPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            match mobius(n / d) {
                1 => num = mul_reduced(&num, &self.get(d)?),
                -1 => den = mul_reduced(&den, &self.get(d)?),
                _ => {}
            }
        }
        divide_reduced(&num, &den)
    }
}

/// Möbius function.
pub fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Which quadratic `X^2 - (Y^3 ± (a Y + b))` the resultant is taken with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorsionConvention {
    /// `X^2 - (Y^3 + a Y + b)`, the curve equation itself.
    CurveEquation,
    /// `X^2 - (Y^3 - a Y - b)`.
    Negated,
}

impl TorsionConvention {
    pub fn quadratic(self) -> MultiPoly {
        match self {
            TorsionConvention::CurveEquation => poly("X^2 - (Y^3 + a*Y + b)"),
            TorsionConvention::Negated => poly("X^2 - (Y^3 - a*Y - b)"),
        }
    }
}

/// `Res_Y(Γ_n(Y), X^2 - (Y^3 ± (aY + b))) / lc(Γ_n)^3`, monic of degree
/// `2 deg Γ_n` in `X`.
pub fn torsion_field_poly(seq: &DivisionPolySequence, n: u32, convention: TorsionConvention) -> Result<MultiPoly, EllipticError> {
    let g = seq.gamma(n)?;
    if g.has_var("y") {
        return Err(EllipticError::HasYFactor(n));
    }
    let gy = g.subs(&[("x", poly("Y"))]);
    let lc = gy.coefficients_in("Y").pop().unwrap_or_else(MultiPoly::zero);
    let res = resultant(&gy, &convention.quadratic(), "Y")?;
    divide_reduced(&res, &lc.pow(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let s = DivisionPolySequence::new();
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(s.gamma(2).unwrap(), poly("2*y"));
        assert_eq!(s.gamma(3).unwrap(), poly(A3));
        assert_eq!(s.gamma(4).unwrap(), poly("2*(x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x - 8*b^2 - a^3)"));
        assert!(!s.get(5).unwrap().has_var("y"));
        assert_eq!(s.get(5).unwrap().degree_in("x"), 12);
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_y(&poly("y^3")), poly("x^3*y + a*x*y + b*y"));
        assert_eq!(divide_reduced(&poly("x^3 + a*x + b"), &poly("y")).unwrap(), poly("y"));
    }
}
