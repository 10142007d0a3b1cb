//! Concrete group data for the three resolvent constructions: generators,
//! distinguished subgroups, coset representatives and reference invariants.

use std::sync::Arc;

use crate::polyring::{poly, MultiPoly};

use super::group::{Coset, PermGroup};
use super::perm::Perm;
use super::GroupError;

/// A group `G` with normal subgroup `H`, a subgroup `F` whose image in `G/H`
/// has the required number of conjugates, and a left transversal of `F`.
#[derive(Clone, Debug)]
pub struct ResolventSetting {
    pub g: Arc<PermGroup>,
    pub h: Arc<PermGroup>,
    pub f: Arc<PermGroup>,
    /// Given coset representatives of `G/F`.
    pub reps: Vec<Perm>,
}

impl ResolventSetting {
    fn build(degree: usize, g: &[&str], h: &[&str], f: &[&str], reps: &[&str]) -> Result<Self, GroupError> {
        let reps = parse_all(degree, reps)?;
        let f = Arc::new(PermGroup::from_cycle_strings(degree, f)?);
        let mut ggens = parse_all(degree, g)?;
        if ggens.is_empty() {
            ggens.extend(f.generators().iter().cloned());
            ggens.extend(reps.iter().cloned());
        }
        Ok(ResolventSetting {
            g: Arc::new(PermGroup::closure(degree, &ggens)?),
            h: Arc::new(PermGroup::from_cycle_strings(degree, h)?),
            f,
            reps,
        })
    }

    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    /// The given representatives as cosets of `F`.
    pub fn transversal(&self) -> Vec<Coset> {
        self.reps
            .iter()
            .map(|r| Coset::new(r.clone(), Arc::clone(&self.f)))
            .collect()
    }
}

fn parse_all(degree: usize, gens: &[&str]) -> Result<Vec<Perm>, GroupError> {
    gens.iter().map(|s| Perm::parse(degree, s)).collect()
}

pub const WARMUP_H: [&str; 2] = ["(1,4)(2,3)", "(1,3)(2,4)"];
pub const WARMUP_F: [&str; 3] = ["(3,4)", "(1,4)(2,3)", "(1,3)(2,4)"];
pub const WARMUP_REPS: [&str; 3] = ["()", "(2,3)", "(2,4)"];

/// `S4 ⊃ V4`, `F` dihedral of order 8; invariant `x1*x2 + x3*x4`.
pub fn warmup() -> ResolventSetting {
    ResolventSetting::build(4, &["(1,2)", "(1,2,3,4)"], &WARMUP_H, &WARMUP_F, &WARMUP_REPS)
        .expect("warm-up group data is well formed")
}

pub fn warmup_invariant() -> MultiPoly {
    poly("x1*x2 + x3*x4")
}

/// `PGL2(Z/4Z)` acting on six points. Each permutation is paired with the
/// 2x2 matrix it is listed with; the matrices are labels only.
pub const ADELMANN_H: [&str; 1] = ["(1,6)(2,4)(3,5)"];
pub const ADELMANN_H_MATRIX: [[i8; 4]; 1] = [[1, 2, 2, -1]];
pub const ADELMANN_F: [&str; 2] = ["(1,2,5,6,4,3)", "(1,4)(2,6)"];
pub const ADELMANN_F_MATRICES: [[i8; 4]; 2] = [[1, 1, 1, 0], [0, -1, 1, 0]];
pub const ADELMANN_REPS: [&str; 4] = ["()", "(1,6)", "(2,4)", "(3,5)"];
pub const ADELMANN_REP_MATRICES: [[i8; 4]; 4] = [[1, 0, 0, 1], [1, 0, 2, -1], [1, 2, 0, -1], [1, 0, 0, -1]];
/// The twelve matrices of `F`, row-major, as listed.
pub const ADELMANN_F_LIST: [[i8; 4]; 12] = [
    [1, 0, 0, 1],
    [0, -1, 1, 0],
    [-1, 0, 1, 1],
    [-1, 1, 0, 1],
    [1, 1, 1, 0],
    [0, 1, 1, -1],
    [1, 2, 2, -1],
    [2, 1, 1, 2],
    [1, 2, 1, -1],
    [1, 1, 2, -1],
    [-1, 1, 1, 2],
    [2, 1, 1, 1],
];

/// `G` is generated by `F` together with the coset representatives.
pub fn adelmann() -> ResolventSetting {
    ResolventSetting::build(6, &[], &ADELMANN_H, &ADELMANN_F, &ADELMANN_REPS)
        .expect("PGL2(Z/4Z) group data is well formed")
}

/// Reference conjugates `β1..β4` of `R_F(x1x2)`.
pub const ADELMANN_BETA: [&str; 4] = [
    "x1*x2 + x2*x5 + x5*x6 + x4*x6 + x3*x4 + x1*x3",
    "x2*x6 + x2*x5 + x1*x5 + x1*x4 + x3*x4 + x3*x6",
    "x1*x4 + x4*x5 + x5*x6 + x2*x6 + x2*x3 + x1*x3",
    "x1*x2 + x2*x3 + x3*x6 + x4*x6 + x4*x5 + x1*x5",
];

/// `Hol(Q8)` as a transitive group of degree 8.
pub const HOLQ8_G: [&str; 5] = [
    "(1,3,4,8,7,5)(2,6)",
    "(2,6)(3,7)",
    "(2,4,7)(3,6,5)",
    "(3,7)(4,5)",
    "(1,7,4,2,8,3,5,6)",
];
pub const HOLQ8_H: [[&str; 3]; 3] = [
    ["(1,2,8,6)(3,5,7,4)", "(1,7,8,3)(2,5,6,4)", "(1,8)(2,6)(3,7)(4,5)"],
    ["(1,4,8,5)(2,3,6,7)", "(1,2,8,6)(3,4,7,5)", "(1,8)(2,6)(3,7)(4,5)"],
    ["(2,6)(4,5)", "(2,6)(3,7)", "(1,8)(2,6)(3,7)(4,5)"],
];
pub const HOLQ8_F: [[&str; 5]; 3] = [
    ["(2,4)(3,7)(5,6)", "(2,3,5)(4,6,7)", "(1,2,8,6)(3,5,7,4)", "(1,7,8,3)(2,5,6,4)", "(1,8)(2,6)(3,7)(4,5)"],
    ["(2,5)(3,7)(4,6)", "(2,7,4)(3,5,6)", "(1,4,8,5)(2,3,6,7)", "(1,2,8,6)(3,4,7,5)", "(1,8)(2,6)(3,7)(4,5)"],
    ["(2,4,6,5)", "(2,7,4)(3,5,6)", "(2,6)(4,5)", "(2,6)(3,7)", "(1,8)(2,6)(3,7)(4,5)"],
];
pub const HOLQ8_REPS: [[&str; 4]; 3] = [
    ["()", "(3,7)(4,5)", "(1,2,5,3,8,6,4,7)", "(1,3,5,8,7,4)(2,6)"],
    ["()", "(1,3,4,8,7,5)(2,6)", "(2,6)(3,7)", "(1,5,7,8,4,3)(2,6)"],
    ["()", "(1,3,4,8,7,5)(2,6)", "(1,5,7,8,4,3)(2,6)", "(1,6,5,3,8,2,4,7)"],
];

/// The three settings `(G, H_i, F_i, T_i)`, `i = 1, 2, 3`.
pub fn holq8() -> [ResolventSetting; 3] {
    let g = Arc::new(PermGroup::from_cycle_strings(8, &HOLQ8_G).expect("Hol(Q8) generators are well formed"));
    std::array::from_fn(|i| {
        let s = ResolventSetting::build(8, &HOLQ8_G[..1], &HOLQ8_H[i], &HOLQ8_F[i], &HOLQ8_REPS[i])
            .expect("Hol(Q8) subgroup data is well formed");
        ResolventSetting { g: Arc::clone(&g), ..s }
    })
}

/// `P3 = x1*x8`, stabilized by `F3`.
pub fn holq8_p3() -> MultiPoly {
    poly("x1*x8")
}

/// The pairing of octic roots under negation: `x8 = -x1, x6 = -x2, x7 = -x3,
/// x5 = -x4`, as (kept, negated) index pairs.
pub const NEGATION_PAIRS: [(usize, usize); 4] = [(1, 8), (2, 6), (3, 7), (4, 5)];

/// Degree-3 orbit sums `R_{F1}(x1x2x3)` and `R_{F2}(x1x2x3)`.
pub const DEG3_INVARIANTS: [&str; 2] = [
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x3*x5 + x1*x3*x6 + x1*x4*x6 + x1*x4*x7 + x1*x5*x7 + x1*x6*x7 + x2*x3*x4 + x2*x3*x8 + x2*x4*x7 + x2*x5*x7 + x2*x5*x8 + x2*x7*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x6 + x3*x5*x8 + x4*x6*x8 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x6*x7*x8",
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x7 + x1*x3*x5 + x1*x3*x6 + x1*x4*x6 + x1*x4*x7 + x1*x5*x6 + x1*x5*x7 + x2*x3*x4 + x2*x3*x5 + x2*x4*x8 + x2*x5*x7 + x2*x5*x8 + x2*x7*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x8 + x3*x6*x8 + x4*x6*x7 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x6*x7*x8",
];

/// Reference conjugates of `R_{F1}(x1x2x3)`.
pub const DEG3_ALPHA: [&str; 4] = [
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x3*x5 + x1*x3*x6 + x1*x4*x6 + x1*x4*x7 + x1*x5*x7 + x1*x6*x7 + x2*x3*x4 + x2*x3*x8 + x2*x4*x7 + x2*x5*x7 + x2*x5*x8 + x2*x7*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x6 + x3*x5*x8 + x4*x6*x8 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x6*x7*x8",
    "x1*x2*x4 + x1*x2*x5 + x1*x2*x7 + x1*x3*x4 + x1*x3*x5 + x1*x3*x6 + x1*x4*x7 + x1*x5*x6 + x1*x6*x7 + x2*x3*x4 + x2*x3*x5 + x2*x3*x8 + x2*x4*x8 + x2*x5*x7 + x2*x7*x8 + x3*x4*x6 + x3*x5*x8 + x3*x6*x8 + x4*x6*x7 + x4*x6*x8 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x6*x7*x8",
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x7 + x1*x3*x4 + x1*x3*x5 + x1*x4*x6 + x1*x5*x6 + x1*x5*x7 + x1*x6*x7 + x2*x3*x5 + x2*x3*x8 + x2*x4*x7 + x2*x4*x8 + x2*x5*x7 + x2*x5*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x6 + x3*x6*x8 + x4*x6*x7 + x4*x6*x8 + x5*x6*x7 + x5*x7*x8 + x6*x7*x8",
    "x1*x2*x3 + x1*x2*x5 + x1*x2*x7 + x1*x3*x4 + x1*x3*x6 + x1*x4*x6 + x1*x4*x7 + x1*x5*x6 + x1*x5*x7 + x2*x3*x4 + x2*x3*x5 + x2*x4*x7 + x2*x4*x8 + x2*x5*x8 + x2*x7*x8 + x3*x4*x8 + x3*x5*x6 + x3*x5*x8 + x3*x6*x8 + x4*x6*x7 + x4*x6*x8 + x5*x6*x7 + x5*x7*x8 + x6*x7*x8",
];

/// Reference conjugates of `R_{F2}(x1x2x3)`; the fourth listing carries a
/// stray token in its source, dropped here (the term is `x5*x6*x8`).
pub const DEG3_BETA: [&str; 4] = [
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x7 + x1*x3*x5 + x1*x3*x6 + x1*x4*x6 + x1*x4*x7 + x1*x5*x6 + x1*x5*x7 + x2*x3*x4 + x2*x3*x5 + x2*x4*x8 + x2*x5*x7 + x2*x5*x8 + x2*x7*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x8 + x3*x6*x8 + x4*x6*x7 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x6*x7*x8",
    "x1*x2*x3 + x1*x2*x5 + x1*x2*x7 + x1*x3*x4 + x1*x3*x5 + x1*x4*x6 + x1*x4*x7 + x1*x5*x6 + x1*x6*x7 + x2*x3*x4 + x2*x3*x8 + x2*x4*x7 + x2*x4*x8 + x2*x5*x7 + x2*x5*x8 + x3*x4*x6 + x3*x5*x6 + x3*x5*x8 + x3*x6*x8 + x4*x6*x8 + x4*x7*x8 + x5*x6*x7 + x5*x7*x8 + x6*x7*x8",
    "x1*x2*x4 + x1*x2*x5 + x1*x2*x7 + x1*x3*x4 + x1*x3*x5 + x1*x3*x6 + x1*x4*x6 + x1*x5*x7 + x1*x6*x7 + x2*x3*x4 + x2*x3*x5 + x2*x3*x8 + x2*x4*x7 + x2*x5*x8 + x2*x7*x8 + x3*x4*x8 + x3*x5*x6 + x3*x6*x8 + x4*x6*x7 + x4*x6*x8 + x4*x7*x8 + x5*x6*x7 + x5*x6*x8 + x5*x7*x8",
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x3*x4 + x1*x3*x6 + x1*x4*x7 + x1*x5*x6 + x1*x5*x7 + x1*x6*x7 + x2*x3*x5 + x2*x3*x8 + x2*x4*x7 + x2*x4*x8 + x2*x5*x7 + x2*x7*x8 + x3*x4*x6 + x3*x4*x8 + x3*x5*x6 + x3*x5*x8 + x4*x6*x7 + x4*x6*x8 + x5*x6*x8 + x5*x7*x8 + x6*x7*x8",
];

/// Degree-4 secondary invariants `P1` (stabilizer `F1`) and `P2` (stabilizer `F2`).
pub const DEG4_INVARIANTS: [&str; 2] = [
    "x1^2*x2*x7 + x1^2*x3*x4 + x1^2*x5*x6 + x1*x2^2*x7 + x1*x2*x7^2 + x1*x3^2*x4 + x1*x3*x4^2 + x1*x5^2*x6 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x5 + x2*x3*x5^2 + x2*x4^2*x8 + x2*x4*x8^2 + x3^2*x6*x8 + x3*x6^2*x8 + x3*x6*x8^2 + x4^2*x6*x7 + x4*x6^2*x7 + x4*x6*x7^2 + x5^2*x7*x8 + x5*x7^2*x8 + x5*x7*x8^2",
    "x1^2*x2*x3 + x1^2*x4*x6 + x1^2*x5*x7 + x1*x2^2*x7 + x1*x2*x4^2 + x1*x3^2*x6 + x1*x3*x5^2 + x1*x4*x7^2 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x4 + x2*x5^2*x7 + x2*x5*x8^2 + x2*x7^2*x8 + x3^2*x5*x8 + x3*x4^2*x6 + x3*x4*x8^2 + x3*x6^2*x8 + x4^2*x7*x8 + x4*x6^2*x7 + x5^2*x6*x8 + x5*x6*x7^2 + x6*x7*x8^2",
];

/// Reference conjugates of `P1`.
pub const DEG4_ALPHA: [&str; 4] = [
    "x1^2*x2*x7 + x1^2*x3*x4 + x1^2*x5*x6 + x1*x2^2*x7 + x1*x2*x7^2 + x1*x3^2*x4 + x1*x3*x4^2 + x1*x5^2*x6 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x5 + x2*x3*x5^2 + x2*x4^2*x8 + x2*x4*x8^2 + x3^2*x6*x8 + x3*x6^2*x8 + x3*x6*x8^2 + x4^2*x6*x7 + x4*x6^2*x7 + x4*x6*x7^2 + x5^2*x7*x8 + x5*x7^2*x8 + x5*x7*x8^2",
    "x1^2*x2*x3 + x1^2*x4*x6 + x1^2*x5*x7 + x1*x2^2*x3 + x1*x2*x3^2 + x1*x4^2*x6 + x1*x4*x6^2 + x1*x5^2*x7 + x1*x5*x7^2 + x2^2*x4*x7 + x2^2*x5*x8 + x2*x4^2*x7 + x2*x4*x7^2 + x2*x5^2*x8 + x2*x5*x8^2 + x3^2*x4*x8 + x3^2*x5*x6 + x3*x4^2*x8 + x3*x4*x8^2 + x3*x5^2*x6 + x3*x5*x6^2 + x6^2*x7*x8 + x6*x7^2*x8 + x6*x7*x8^2",
    "x1^2*x2*x5 + x1^2*x3*x6 + x1^2*x4*x7 + x1*x2^2*x5 + x1*x2*x5^2 + x1*x3^2*x6 + x1*x3*x6^2 + x1*x4^2*x7 + x1*x4*x7^2 + x2^2*x3*x4 + x2^2*x7*x8 + x2*x3^2*x4 + x2*x3*x4^2 + x2*x7^2*x8 + x2*x7*x8^2 + x3^2*x5*x8 + x3*x5^2*x8 + x3*x5*x8^2 + x4^2*x6*x8 + x4*x6^2*x8 + x4*x6*x8^2 + x5^2*x6*x7 + x5*x6^2*x7 + x5*x6*x7^2",
    "x1^2*x2*x4 + x1^2*x3*x5 + x1^2*x6*x7 + x1*x2^2*x4 + x1*x2*x4^2 + x1*x3^2*x5 + x1*x3*x5^2 + x1*x6^2*x7 + x1*x6*x7^2 + x2^2*x3*x8 + x2^2*x5*x7 + x2*x3^2*x8 + x2*x3*x8^2 + x2*x5^2*x7 + x2*x5*x7^2 + x3^2*x4*x6 + x3*x4^2*x6 + x3*x4*x6^2 + x4^2*x7*x8 + x4*x7^2*x8 + x4*x7*x8^2 + x5^2*x6*x8 + x5*x6^2*x8 + x5*x6*x8^2",
];

/// Reference conjugates of `P2`.
pub const DEG4_BETA: [&str; 4] = [
    "x1^2*x2*x3 + x1^2*x4*x6 + x1^2*x5*x7 + x1*x2^2*x7 + x1*x2*x4^2 + x1*x3^2*x6 + x1*x3*x5^2 + x1*x4*x7^2 + x1*x5*x6^2 + x2^2*x3*x5 + x2^2*x4*x8 + x2*x3^2*x4 + x2*x5^2*x7 + x2*x5*x8^2 + x2*x7^2*x8 + x3^2*x5*x8 + x3*x4^2*x6 + x3*x4*x8^2 + x3*x6^2*x8 + x4^2*x7*x8 + x4*x6^2*x7 + x5^2*x6*x8 + x5*x6*x7^2 + x6*x7*x8^2",
    "x1^2*x2*x7 + x1^2*x3*x4 + x1^2*x5*x6 + x1*x2^2*x3 + x1*x2*x5^2 + x1*x3^2*x5 + x1*x4^2*x7 + x1*x4*x6^2 + x1*x6*x7^2 + x2^2*x4*x7 + x2^2*x5*x8 + x2*x3^2*x8 + x2*x3*x4^2 + x2*x4*x8^2 + x2*x5*x7^2 + x3^2*x4*x6 + x3*x5^2*x8 + x3*x5*x6^2 + x3*x6*x8^2 + x4^2*x6*x8 + x4*x7^2*x8 + x5^2*x6*x7 + x5*x7*x8^2 + x6^2*x7*x8",
    "x1^2*x2*x4 + x1^2*x3*x5 + x1^2*x6*x7 + x1*x2^2*x5 + x1*x2*x7^2 + x1*x3^2*x4 + x1*x3*x6^2 + x1*x4^2*x6 + x1*x5^2*x7 + x2^2*x3*x4 + x2^2*x7*x8 + x2*x3^2*x5 + x2*x3*x8^2 + x2*x4^2*x7 + x2*x5^2*x8 + x3^2*x6*x8 + x3*x4^2*x8 + x3*x5^2*x6 + x4*x6^2*x8 + x4*x6*x7^2 + x4*x7*x8^2 + x5*x6^2*x7 + x5*x6*x8^2 + x5*x7^2*x8",
    "x1^2*x2*x5 + x1^2*x3*x6 + x1^2*x4*x7 + x1*x2^2*x4 + x1*x2*x3^2 + x1*x3*x4^2 + x1*x5^2*x6 + x1*x5*x7^2 + x1*x6^2*x7 + x2^2*x3*x8 + x2^2*x5*x7 + x2*x3*x5^2 + x2*x4^2*x8 + x2*x4*x7^2 + x2*x7*x8^2 + x3^2*x4*x8 + x3^2*x5*x6 + x3*x4*x6^2 + x3*x5*x8^2 + x4^2*x6*x7 + x4*x6*x8^2 + x5^2*x7*x8 + x5*x6^2*x8 + x6*x7^2*x8",
];

/// Reference 24-term form of `v35` in `x1..x4`.
pub const V35: &str = "x1^7*x2^5*x3^3*x4 - x1^7*x2^5*x3*x4^3 - x1^7*x2^3*x3^5*x4 + x1^7*x2^3*x3*x4^5 + x1^7*x2*x3^5*x4^3 - x1^7*x2*x3^3*x4^5 - x1^5*x2^7*x3^3*x4 + x1^5*x2^7*x3*x4^3 + x1^5*x2^3*x3^7*x4 - x1^5*x2^3*x3*x4^7 - x1^5*x2*x3^7*x4^3 + x1^5*x2*x3^3*x4^7 + x1^3*x2^7*x3^5*x4 - x1^3*x2^7*x3*x4^5 - x1^3*x2^5*x3^7*x4 + x1^3*x2^5*x3*x4^7 + x1^3*x2*x3^7*x4^5 - x1^3*x2*x3^5*x4^7 - x1*x2^7*x3^5*x4^3 + x1*x2^7*x3^3*x4^5 + x1*x2^5*x3^7*x4^3 - x1*x2^5*x3^3*x4^7 - x1*x2^3*x3^7*x4^5 + x1*x2^3*x3^5*x4^7";

pub fn deg4_invariants() -> [MultiPoly; 2] {
    DEG4_INVARIANTS.map(poly)
}

pub fn deg3_invariants() -> [MultiPoly; 2] {
    DEG3_INVARIANTS.map(poly)
}
