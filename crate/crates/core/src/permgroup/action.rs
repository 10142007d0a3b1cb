//! Permutation action on polynomials: `g` sends `x_i` to `x_{g(i)}` and fixes
//! every non-root variable.

use std::collections::{BTreeMap, HashSet};

use crate::polyring::{root_var, MultiPoly};

use super::group::{Coset, PermGroup};
use super::perm::Perm;
use super::GroupError;

/// Index of a root variable `x<i>` (1-based), if the name has that form.
pub fn root_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

pub fn act_on_poly(g: &Perm, p: &MultiPoly) -> Result<MultiPoly, GroupError> {
    let mut map = BTreeMap::new();
    for name in p.vars() {
        if let Some(i) = root_index(name) {
            if i > g.degree() {
                return Err(GroupError::DegreeMismatch {
                    expected: g.degree(),
                    found: i,
                });
            }
            let j = g.apply(i - 1) + 1;
            if j != i {
                map.insert(name.clone(), root_var(j));
            }
        }
    }
    Ok(if map.is_empty() { p.clone() } else { p.rename(&map) })
}

/// Whether every generator of `group` fixes `p`.
pub fn is_invariant(group: &PermGroup, p: &MultiPoly) -> Result<bool, GroupError> {
    for g in group.generators() {
        if act_on_poly(g, p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{g in G : g(p) = p}`.
pub fn stabilizer_of_poly(group: &PermGroup, p: &MultiPoly) -> Result<PermGroup, GroupError> {
    let mut keep = HashSet::new();
    for g in group.elements() {
        if act_on_poly(g, p)? == *p {
            keep.insert(g.clone());
        }
    }
    Ok(group.filter_subgroup(|g| keep.contains(g)))
}

/// Distinct images of `m` under `group`, in first-seen enumeration order.
pub fn orbit(group: &PermGroup, m: &MultiPoly) -> Result<Vec<MultiPoly>, GroupError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in group.elements() {
        let img = act_on_poly(g, m)?;
        if seen.insert(img.clone()) {
            out.push(img);
        }
    }
    Ok(out)
}

/// Orbit sums of `m`: `weighted = Σ_{σ∈F} σ(m)` and `plain` = sum of the
/// distinct images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSum {
    pub weighted: MultiPoly,
    pub plain: MultiPoly,
    pub orbit_size: usize,
}

pub fn orbit_sum(group: &PermGroup, m: &MultiPoly) -> Result<OrbitSum, GroupError> {
    let mut weighted = MultiPoly::zero();
    for g in group.elements() {
        weighted = &weighted + &act_on_poly(g, m)?;
    }
    let orb = orbit(group, m)?;
    let orbit_size = orb.len();
    let plain = orb.into_iter().sum();
    Ok(OrbitSum {
        weighted,
        plain,
        orbit_size,
    })
}

/// One conjugate `rep(p)` per coset. Fails unless `p` is invariant under the
/// cosets' common subgroup, which makes the result independent of the
/// representatives.
pub fn conjugates_of_poly(transversal: &[Coset], p: &MultiPoly) -> Result<Vec<MultiPoly>, GroupError> {
    let Some(first) = transversal.first() else {
        return Ok(Vec::new());
    };
    if !is_invariant(&first.subgroup, p)? {
        return Err(GroupError::NotInvariant);
    }
    transversal
        .iter()
        .map(|c| act_on_poly(&c.representative, p))
        .collect()
}

/// Canonical form of a set of polynomials: sorted printed forms.
pub fn canonical_set(polys: &[MultiPoly]) -> Vec<String> {
    let mut v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;
    use std::sync::Arc;

    #[test]
    fn basic_action() {
        let g = Perm::parse(3, "(1,2)").unwrap();
        assert_eq!(act_on_poly(&g, &poly("x1*x3")).unwrap(), poly("x2*x3"));
        assert_eq!(act_on_poly(&g, &poly("a*x1 + b")).unwrap(), poly("a*x2 + b"));
        assert!(matches!(
            act_on_poly(&g, &poly("x4")),
            Err(GroupError::DegreeMismatch { expected: 3, found: 4 })
        ));
        let h = Perm::parse(8, "(1,8)(2,6)(3,7)(4,5)").unwrap();
        assert_eq!(act_on_poly(&h, &poly("x1*x8")).unwrap(), poly("x1*x8"));
    }

    #[test]
    fn composition_matches_action() {
        let g = Perm::parse(4, "(1,2,3)").unwrap();
        let h = Perm::parse(4, "(2,4)").unwrap();
        let p = poly("x1^3*x2 + 2*x2*x4^2 - x3");
        let lhs = act_on_poly(&g, &act_on_poly(&h, &p).unwrap()).unwrap();
        assert_eq!(lhs, act_on_poly(&g.compose(&h), &p).unwrap());
    }

    #[test]
    fn warmup_orbit_sum_and_stabilizer() {
        let s4 = Arc::new(PermGroup::symmetric(4));
        let f = Arc::new(PermGroup::from_cycle_strings(4, &["(3,4)", "(1,4)(2,3)", "(1,3)(2,4)"]).unwrap());
        let os = orbit_sum(&f, &poly("x1*x2")).unwrap();
        assert_eq!(os.weighted, poly("4*(x1*x2 + x3*x4)"));
        assert_eq!(os.plain, poly("x1*x2 + x3*x4"));
        let st = stabilizer_of_poly(&s4, &os.plain).unwrap();
        assert!(st.same_elements(&f));
        let reps = ["()", "(2,3)", "(2,4)"]
            .iter()
            .map(|s| Coset::new(Perm::parse(4, s).unwrap(), Arc::clone(&f)))
            .collect::<Vec<_>>();
        let conj = conjugates_of_poly(&reps, &os.plain).unwrap();
        assert_eq!(
            conj,
            vec![poly("x1*x2 + x3*x4"), poly("x1*x3 + x2*x4"), poly("x1*x4 + x2*x3")]
        );
        assert_eq!(conjugates_of_poly(&reps, &poly("x1")), Err(GroupError::NotInvariant));
    }

    #[test]
    fn root_names() {
        assert_eq!(root_index("x12"), Some(12));
        assert_eq!(root_index("x"), None);
        assert_eq!(root_index("x0"), None);
        assert_eq!(root_index("xa"), None);
        assert_eq!(root_index("a1"), None);
    }
}
