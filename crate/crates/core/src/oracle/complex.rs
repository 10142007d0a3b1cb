//! Fixed-precision binary floating-point complex numbers.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfAway;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;

use crate::polyring::BigRat;

/// Binary float with round-half-away-from-zero.
pub type Real = FBig<HalfAway, 2>;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;

fn ibig(n: &BigInt) -> IBig {
    n.to_string().parse().expect("decimal integer")
}

pub fn real_zero(prec: usize) -> Real {
    Real::ZERO.with_precision(prec).value()
}

pub fn real_int(n: i64, prec: usize) -> Real {
    Real::from(IBig::from(n)).with_precision(prec).value()
}

pub fn real_from_rat(r: &BigRat, prec: usize) -> Real {
    let num = Real::from(ibig(r.numer())).with_precision(prec).value();
    let den = Real::from(ibig(r.denom())).with_precision(prec).value();
    num / den
}

pub fn real_from_f64(x: f64, prec: usize) -> Real {
    Real::try_from(x)
        .expect("finite f64")
        .with_precision(prec)
        .value()
}

pub fn real_abs(x: &Real) -> Real {
    if *x < Real::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

pub fn real_to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// `2^-k` at precision `prec`.
pub fn real_pow2_neg(k: usize, prec: usize) -> Real {
    Real::from_parts(IBig::ONE, -(k as isize)).with_precision(prec).value()
}

/// Nearest integer to `x`.
pub fn real_round(x: &Real) -> BigInt {
    let n: IBig = x.round().to_int().value();
    n.to_string().parse().expect("decimal integer")
}

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexAP {
    pub re: Real,
    pub im: Real,
}

impl ComplexAP {
    pub fn new(re: Real, im: Real) -> Self {
        ComplexAP { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        ComplexAP::new(real_zero(prec), real_zero(prec))
    }

    pub fn one(prec: usize) -> Self {
        ComplexAP::new(real_int(1, prec), real_zero(prec))
    }

    pub fn from_rat(r: &BigRat, prec: usize) -> Self {
        ComplexAP::new(real_from_rat(r, prec), real_zero(prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        ComplexAP::new(real_from_f64(re, prec), real_from_f64(im, prec))
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, k: &Real) -> Self {
        ComplexAP::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        ComplexAP::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexAP::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (real_to_f64(&self.re), real_to_f64(&self.im))
    }
}

impl fmt::Debug for ComplexAP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        write!(f, "({re:e} {im:+e}i)")
    }
}

impl fmt::Display for ComplexAP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &ComplexAP {
    type Output = ComplexAP;
    fn add(self, o: &ComplexAP) -> ComplexAP {
        ComplexAP::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &ComplexAP {
    type Output = ComplexAP;
    fn sub(self, o: &ComplexAP) -> ComplexAP {
        ComplexAP::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &ComplexAP {
    type Output = ComplexAP;
    fn mul(self, o: &ComplexAP) -> ComplexAP {
        ComplexAP::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div for &ComplexAP {
    type Output = ComplexAP;
    fn div(self, o: &ComplexAP) -> ComplexAP {
        self * &o.recip()
    }
}

impl Neg for &ComplexAP {
    type Output = ComplexAP;
    fn neg(self) -> ComplexAP {
        ComplexAP::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for ComplexAP {
    type Output = ComplexAP;
    fn neg(self) -> ComplexAP {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::frac;

    #[test]
    fn field_ops() {
        let p = 128;
        let i = ComplexAP::new(real_zero(p), real_int(1, p));
        let sq = &i * &i;
        assert_eq!(sq, -ComplexAP::one(p));
        let third = ComplexAP::from_rat(&frac(1, 3), p);
        let back = &(&ComplexAP::one(p) / &third) - &ComplexAP::from_rat(&frac(3, 1), p);
        assert!(back.abs() < real_pow2_neg(120, p));
        assert_eq!(real_round(&real_from_f64(-2.6, p)), BigInt::from(-3));
        assert_eq!(ComplexAP::from_f64(3.0, 4.0, p).abs(), real_int(5, p));
        assert_eq!(third.precision(), p);
    }
}
