//! Curves `y^2 = x^3 + a x + b` over Q, rational points, and the
//! polynomials attached to them.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::json;

use crate::polyring::rational::fmt_rat;
use crate::polyring::{poly, BigRat, MultiPoly};

use super::reference::{OCTIC, SEXTIC};
use super::EllipticError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    a: BigRat,
    b: BigRat,
}

impl Curve {
    pub fn new(a: BigRat, b: BigRat) -> Result<Self, EllipticError> {
        let c = Curve { a, b };
        if c.d().is_zero() {
            return Err(EllipticError::SingularCurve);
        }
        Ok(c)
    }

    pub fn a(&self) -> &BigRat {
        &self.a
    }

    pub fn b(&self) -> &BigRat {
        &self.b
    }

    /// `4a^3 + 27b^2`.
    pub fn d(&self) -> BigRat {
        BigRat::from_integer(4.into()) * &self.a * &self.a * &self.a
            + BigRat::from_integer(27.into()) * &self.b * &self.b
    }

    /// `-16 d`.
    pub fn delta(&self) -> BigRat {
        BigRat::from_integer((-16).into()) * self.d()
    }

    /// Values of `a`, `b`, `d` and `Delta`.
    pub fn bindings(&self) -> BTreeMap<String, BigRat> {
        [
            ("a", self.a.clone()),
            ("b", self.b.clone()),
            ("d", self.d()),
            ("Delta", self.delta()),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "a": fmt_rat(&self.a), "b": fmt_rat(&self.b) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub z: BigRat,
    pub w: BigRat,
    pub curve: Curve,
}

impl CurvePoint {
    pub fn new(curve: Curve, z: BigRat, w: BigRat) -> Result<Self, EllipticError> {
        let rhs = &z * &z * &z + curve.a() * &z + curve.b();
        if &w * &w != rhs {
            return Err(EllipticError::PointNotOnCurve);
        }
        Ok(CurvePoint { z, w, curve })
    }

    /// Values of `a`, `b`, `z`, `w`, `d` and `Delta`.
    pub fn bindings(&self) -> BTreeMap<String, BigRat> {
        let mut m = self.curve.bindings();
        m.insert("z".to_string(), self.z.clone());
        m.insert("w".to_string(), self.w.clone());
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "a": fmt_rat(self.curve.a()),
            "b": fmt_rat(self.curve.b()),
            "z": fmt_rat(&self.z),
            "w": fmt_rat(&self.w),
        })
    }
}

/// The degree-8 polynomial in `x` with coefficients in `a, b, z, w`.
pub fn octic_symbolic() -> MultiPoly {
    poly(OCTIC)
}

pub fn octic_f(p: &CurvePoint) -> MultiPoly {
    octic_symbolic().partial_eval(&p.bindings())
}

/// The sextic in `Y` with coefficients in `a, b`.
pub fn sextic_symbolic() -> MultiPoly {
    poly(SEXTIC)
}

pub fn sextic_a(e: &Curve) -> MultiPoly {
    sextic_symbolic().partial_eval(&e.bindings())
}

/// Replaces `d` and `Delta` by their expressions in `a, b`.
pub fn expand_discriminants(p: &MultiPoly) -> MultiPoly {
    p.subs(&[
        ("d", poly("4*a^3 + 27*b^2")),
        ("Delta", poly("-16*(4*a^3 + 27*b^2)")),
    ])
}

/// Reduces the degree in `w` below 2 using `w^2 = z^3 + a z + b`.
pub fn curve_normal_form(p: &MultiPoly) -> MultiPoly {
    let rhs = poly("z^3 + a*z + b");
    let w = poly("w");
    p.coefficients_in("w")
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let odd = if k % 2 == 1 { w.clone() } else { MultiPoly::one() };
            &(c * &rhs.pow(k as u32 / 2)) * &odd
        })
        .sum()
}

/// Equality of polynomials in `a, b, z, w` (and `d`, `Delta`) as functions on
/// the family of curves with a marked point.
pub fn equal_on_curve(p: &MultiPoly, q: &MultiPoly) -> bool {
    curve_normal_form(&expand_discriminants(&(p - q))).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::rat;

    #[test]
    fn validation() {
        let e = Curve::new(rat(1), rat(1)).unwrap();
        assert_eq!(e.d(), rat(31));
        assert_eq!(e.delta(), rat(-496));
        assert!(CurvePoint::new(e.clone(), rat(0), rat(1)).is_ok());
        assert_eq!(CurvePoint::new(e, rat(1), rat(1)), Err(EllipticError::PointNotOnCurve));
        assert_eq!(Curve::new(rat(-3), rat(2)), Err(EllipticError::SingularCurve));
    }

    #[test]
    fn attached_polynomials() {
        let e = Curve::new(rat(1), rat(1)).unwrap();
        let p = CurvePoint::new(e, rat(0), rat(1)).unwrap();
        assert_eq!(octic_f(&p), poly("x^8 - 8*x^6 + 18*x^4 - 31"));
        let e0 = Curve::new(rat(0), rat(1)).unwrap();
        assert_eq!(sextic_a(&e0), poly("Y^6 + 20*Y^3 - 8"));
    }

    #[test]
    fn normal_form() {
        assert_eq!(curve_normal_form(&poly("w^3")), poly("w*z^3 + a*w*z + b*w"));
        assert!(equal_on_curve(&poly("w^2 - z^3"), &poly("a*z + b")));
        assert!(equal_on_curve(&poly("d"), &poly("4*a^3 + 27*b^2")));
    }
}
