//! Deterministic sample curves with a rational point, built by choosing
//! `a, z, w` and setting `b = w^2 - z^3 - a z`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::elliptic::curve::{octic_f, sextic_a, Curve, CurvePoint};
use crate::polyring::rational::rat;
use crate::polyring::univariate::{dense_coeffs, from_dense, is_squarefree};
use crate::polyring::MultiPoly;

/// Seed of the default sample sequence.
pub const SAMPLE_SEED: u64 = 0x0c71_c5ee;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCurve {
    pub a: i64,
    pub b: i64,
    pub z: i64,
    pub w: i64,
}

impl SampleCurve {
    /// `(a, z, w)` with `b` chosen so that `(z, w)` lies on the curve.
    pub fn through(a: i64, z: i64, w: i64) -> Self {
        SampleCurve {
            a,
            b: w * w - z * z * z - a * z,
            z,
            w,
        }
    }

    pub fn d(&self) -> i64 {
        4 * self.a.pow(3) + 27 * self.b.pow(2)
    }

    pub fn curve(&self) -> Curve {
        Curve::new(rat(self.a), rat(self.b)).expect("sample curves are nonsingular")
    }

    pub fn point(&self) -> CurvePoint {
        CurvePoint::new(self.curve(), rat(self.z), rat(self.w)).expect("sample points lie on their curve")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain struct")
    }
}

fn squarefree(p: &MultiPoly, var: &str) -> bool {
    dense_coeffs(p, var).is_ok_and(|c| is_squarefree(&c))
}

/// Usable for every oracle check: nonsingular, with squarefree octic and
/// sextic.
fn usable(s: &SampleCurve) -> bool {
    if s.d() == 0 {
        return false;
    }
    squarefree(&octic_f(&s.point()), "x") && squarefree(&sextic_a(&s.curve()), "Y")
}

/// `n` distinct usable curves: `(a, b, z, w) = (1, 1, 0, 1)` first, then
/// draws with `|a|, |z| <= 2`, `|w| <= 3` from a seeded generator.
pub fn sample_curves(n: usize, seed: u64) -> Vec<SampleCurve> {
    let mut out = vec![SampleCurve::through(1, 0, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < n {
        let s = SampleCurve::through(rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-3..=3));
        if !out.contains(&s) && usable(&s) {
            out.push(s);
        }
    }
    out.truncate(n);
    out
}

/// `n` squarefree monic quartics `x^4 + c3 x^3 + c2 x^2 + c1 x + c0`, as
/// `[c3, c2, c1, c0]` with entries in `-5..=5`.
pub fn sample_quartics(n: usize, seed: u64) -> Vec<[i64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<[i64; 4]> = Vec::new();
    while out.len() < n {
        let c: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        let dense = [c[3], c[2], c[1], c[0], 1].map(rat);
        if !out.contains(&c) && squarefree(&from_dense("x", &dense), "x") {
            out.push(c);
        }
    }
    out
}
