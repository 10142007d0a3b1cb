//! Resolvent coefficients as rational combinations of products of
//! fundamental invariants with known images.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use crate::permgroup::action::{is_invariant, orbit_sum};
use crate::permgroup::PermGroup;
use crate::polyring::linsolve::solve;
use crate::polyring::symmetric::{elem_sym_in, root_vars};
use crate::polyring::{poly, BigRat, MultiPoly};

use super::ResolventError;

/// A `G`-invariant polynomial together with its value under the evaluation
/// homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerator {
    /// Stable identifier (`I1`, `I2a`, ...).
    pub name: &'static str,
    /// Conventional label (`u1`, `u2`, `v2`, ...).
    pub label: &'static str,
    /// Monomial whose plain orbit sum defines the generator.
    pub monomial: MultiPoly,
    /// Listed multiplier relating the weighted orbit sum to the plain one;
    /// informational only.
    pub listed_scalar: i64,
    /// Plain orbit sum `R_G(monomial)`.
    pub polynomial: MultiPoly,
    /// Image in the curve parameters.
    pub image: MultiPoly,
}

impl InvariantGenerator {
    pub fn degree(&self) -> u32 {
        self.polynomial.total_degree().unwrap_or(0)
    }
}

/// `(name, label, monomial, listed scalar, image)` for the degree-6 table.
const ADELMANN_ROWS: [(&str, &str, &str, i64, &str); 9] = [
    ("I1", "u1", "x1", 6, "0"),
    ("I2a", "u2", "x2*x4", 3, "a"),
    ("I2b", "v2", "x1*x2", 12, "4*a"),
    ("I3a", "u3", "x1*x2*x3", 8, "-8*b"),
    ("I3b", "w3", "x1*x2*x4", 3, "-12*b"),
    ("I4a", "u4", "x2*x3*x4*x5", 1, "-a^2"),
    ("I4b", "w4", "x1*x2*x3*x4", 12, "-4*a^2"),
    ("I5", "w5", "x1*x2*x3*x4*x5", 12, "4*a*b"),
    ("I6", "u6", "x1*x2*x3*x4*x5*x6", 6, "-a^3 - 8*b^2"),
];

/// The nine fundamental invariants of `PGL2(Z/4Z)` on six points, as plain
/// orbit sums under `g`.
pub fn adelmann_table(g: &PermGroup) -> Result<Vec<InvariantGenerator>, ResolventError> {
    ADELMANN_ROWS
        .iter()
        .map(|&(name, label, mono, listed_scalar, image)| {
            let monomial = poly(mono);
            let polynomial = orbit_sum(g, &monomial)?.plain;
            Ok(InvariantGenerator {
                name,
                label,
                monomial,
                listed_scalar,
                polynomial,
                image: poly(image),
            })
        })
        .collect()
}

/// Multisets of generator indices (non-decreasing) with total degree `deg`.
fn degree_multisets(degrees: &[u32], deg: u32) -> Vec<Vec<usize>> {
    fn go(degrees: &[u32], left: u32, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..degrees.len() {
            if degrees[i] <= left {
                cur.push(i);
                go(degrees, left - degrees[i], i, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(degrees, deg, 0, &mut Vec::new(), &mut out);
    out
}

/// Products of generator polynomials, memoized on the index multiset.
struct ProductCache<'a> {
    gens: &'a [InvariantGenerator],
    polys: HashMap<Vec<usize>, MultiPoly>,
}

impl ProductCache<'_> {
    fn get(&mut self, key: &[usize]) -> MultiPoly {
        if key.is_empty() {
            return MultiPoly::one();
        }
        if let Some(p) = self.polys.get(key) {
            return p.clone();
        }
        let head = self.get(&key[..key.len() - 1]);
        let p = &head * &self.gens[key[key.len() - 1]].polynomial;
        self.polys.insert(key.to_vec(), p.clone());
        p
    }
}

fn image_of(gens: &[InvariantGenerator], key: &[usize]) -> MultiPoly {
    key.iter().map(|&i| gens[i].image.clone()).product()
}

/// Expresses a homogeneous `G`-invariant `coeff` in the root variables as a
/// rational combination of generator products of matching degree and returns
/// the image of that combination.
///
/// Every kernel relation among the products must map to zero, otherwise the
/// table of images is inconsistent and the value would depend on the choice
/// of combination.
pub fn engine_invariant_solve(
    coeff: &MultiPoly,
    gens: &[InvariantGenerator],
    group: &PermGroup,
) -> Result<MultiPoly, ResolventError> {
    if coeff.is_zero() {
        return Ok(MultiPoly::zero());
    }
    if !coeff.is_homogeneous() {
        return Err(ResolventError::NotInvariant);
    }
    if !is_invariant(group, coeff)? {
        return Err(ResolventError::NotInvariant);
    }
    let deg = coeff.total_degree().unwrap_or(0);
    if deg == 0 {
        return Ok(coeff.clone());
    }
    let degrees: Vec<u32> = gens.iter().map(InvariantGenerator::degree).collect();
    let keys = degree_multisets(&degrees, deg);
    let mut cache = ProductCache {
        gens,
        polys: HashMap::new(),
    };
    let products: Vec<MultiPoly> = keys.iter().map(|k| cache.get(k)).collect();

    let vars = root_vars(group.degree());
    let as_map = |p: &MultiPoly| -> Result<BTreeMap<Vec<u32>, BigRat>, ResolventError> {
        let terms = p.exponents_over(&vars).ok_or(ResolventError::NotInvariant)?;
        Ok(terms.into_iter().collect())
    };
    let columns: Vec<BTreeMap<Vec<u32>, BigRat>> = products.iter().map(as_map).collect::<Result<_, _>>()?;
    let target = as_map(coeff)?;
    let monomials: BTreeSet<&Vec<u32>> = columns.iter().flat_map(|c| c.keys()).chain(target.keys()).collect();

    let zero = BigRat::zero();
    let a: Vec<Vec<BigRat>> = monomials
        .iter()
        .map(|m| columns.iter().map(|c| c.get(*m).unwrap_or(&zero).clone()).collect())
        .collect();
    let b: Vec<BigRat> = monomials.iter().map(|m| target.get(*m).unwrap_or(&zero).clone()).collect();
    let sol = solve(&a, &b).ok_or(ResolventError::NotInSpan(deg))?;

    let images: Vec<MultiPoly> = keys.iter().map(|k| image_of(gens, k)).collect();
    for kernel in &sol.nullspace {
        let rel: MultiPoly = kernel.iter().zip(&images).map(|(c, im)| im.scale(c)).sum();
        if !rel.is_zero() {
            return Err(ResolventError::TableInconsistent);
        }
    }
    let combination: MultiPoly = sol.particular.iter().zip(&products).map(|(c, p)| p.scale(c)).sum();
    debug_assert_eq!(&combination, coeff);
    Ok(sol.particular.iter().zip(&images).map(|(c, im)| im.scale(c)).sum())
}

/// Checks the table against a monic sextic `A(var)` whose roots are the
/// evaluated `x1..x6`: `e_k` must map to `(-1)^k` times the coefficient of
/// `var^(6-k)`. Returns the six images.
pub fn table_gate(
    gens: &[InvariantGenerator],
    group: &PermGroup,
    sextic: &MultiPoly,
    var: &str,
) -> Result<Vec<MultiPoly>, ResolventError> {
    let n = group.degree();
    let coeffs = sextic.coefficients_in(var);
    let vars = root_vars(n);
    (1..=n)
        .map(|k| {
            let image = engine_invariant_solve(&elem_sym_in(&vars, k), gens, group)?;
            let c = coeffs.get(n - k).cloned().unwrap_or_else(MultiPoly::zero);
            let expected = if k % 2 == 1 { -c } else { c };
            if image == expected {
                Ok(image)
            } else {
                Err(ResolventError::TableGate(k))
            }
        })
        .collect()
}
