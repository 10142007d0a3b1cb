//! Rational coefficient helpers.
//!
//! `BigRat` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigRat = BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// Parses `"n"` or `"n/d"` with optional leading sign.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRat::new(n, d))
        }
        None => Some(int(s.parse().ok()?)),
    }
}

pub fn fmt_rat(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &BigRat) -> bool {
    r.denom().is_one()
}

pub fn abs_rat(r: &BigRat) -> BigRat {
    r.abs()
}
