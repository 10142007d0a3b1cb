//! Integer gradings under which the curve-parameter polynomials are
//! weighted-homogeneous.

use std::collections::BTreeMap;

use super::poly::{root_var, MultiPoly};
use super::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightSystem {
    weights: BTreeMap<String, u32>,
}

impl WeightSystem {
    pub fn new<'a>(pairs: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        let weights = pairs
            .into_iter()
            .map(|(v, w)| {
                assert!(w > 0, "weights must be positive");
                (v.to_string(), w)
            })
            .collect();
        WeightSystem { weights }
    }

    fn curve() -> Self {
        Self::new([("a", 8), ("b", 12), ("z", 4), ("w", 6), ("d", 24), ("Delta", 24)])
    }

    /// Curve grading with the eight octic roots `x1..x8` at weight 3.
    pub fn octic() -> Self {
        let mut ws = Self::curve();
        for i in 1..=8 {
            ws.weights.insert(root_var(i), 3);
        }
        ws
    }

    /// Curve grading with the six sextic roots `x1..x6` at weight 4.
    pub fn sextic() -> Self {
        let mut ws = Self::curve();
        for i in 1..=6 {
            ws.weights.insert(root_var(i), 4);
        }
        ws
    }

    /// Adds or overrides one variable.
    pub fn with(mut self, var: &str, weight: u32) -> Self {
        assert!(weight > 0, "weights must be positive");
        self.weights.insert(var.to_string(), weight);
        self
    }

    pub fn weight(&self, var: &str) -> Option<u32> {
        self.weights.get(var).copied()
    }

    fn var_weights(&self, p: &MultiPoly) -> Result<Vec<u32>, PolyError> {
        p.vars()
            .iter()
            .map(|v| self.weight(v).ok_or_else(|| PolyError::UnweightedVariable(v.clone())))
            .collect()
    }

    /// Weight of every term, in descending term order.
    pub fn term_weights(&self, p: &MultiPoly) -> Result<Vec<u32>, PolyError> {
        let ws = self.var_weights(p)?;
        Ok(p
            .terms_desc()
            .map(|(e, _)| e.iter().zip(&ws).map(|(x, w)| x * w).sum())
            .collect())
    }

    /// The common weight of a nonzero weighted-homogeneous polynomial.
    pub fn homogeneous_weight(&self, p: &MultiPoly) -> Result<Option<u32>, PolyError> {
        let comps = weighted_components(p, self)?;
        Ok(match comps.as_slice() {
            [(w, _)] => Some(*w),
            _ => None,
        })
    }

    /// All exponent vectors over `vars` with total weight `target`.
    pub fn monomials_of_weight(&self, vars: &[&str], target: u32) -> Result<Vec<Vec<u32>>, PolyError> {
        let ws: Vec<u32> = vars
            .iter()
            .map(|v| self.weight(v).ok_or_else(|| PolyError::UnweightedVariable(v.to_string())))
            .collect::<Result<_, _>>()?;
        let mut out = Vec::new();
        let mut cur = vec![0u32; vars.len()];
        fn rec(i: usize, left: u32, ws: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == ws.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in 0..=left / ws[i] {
                cur[i] = e;
                rec(i + 1, left - e * ws[i], ws, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, target, &ws, &mut cur, &mut out);
        Ok(out)
    }
}

/// Splits `p` into weighted-homogeneous parts, ordered by increasing weight.
pub fn weighted_components(p: &MultiPoly, ws: &WeightSystem) -> Result<Vec<(u32, MultiPoly)>, PolyError> {
    let weights = ws.term_weights(p)?;
    let mut groups: BTreeMap<u32, Vec<(Vec<u32>, _)>> = BTreeMap::new();
    for ((e, c), w) in p.terms_desc().zip(weights) {
        groups.entry(w).or_default().push((e.to_vec(), c.clone()));
    }
    Ok(groups
        .into_iter()
        .map(|(w, terms)| (w, MultiPoly::from_terms(p.vars().to_vec(), terms)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::text::poly;

    #[test]
    fn split_by_weight() {
        let comps = weighted_components(&poly("a + b"), &WeightSystem::octic()).unwrap();
        assert_eq!(comps, vec![(8, poly("a")), (12, poly("b"))]);
        let octic = poly("x1^8 - 8*w*x1^6 + 6*(2*a*z + 3*b)*x1^4 - (4*a^3 + 27*b^2)");
        assert_eq!(WeightSystem::octic().homogeneous_weight(&octic).unwrap(), Some(24));
    }

    #[test]
    fn unweighted_variable() {
        let err = weighted_components(&poly("q"), &WeightSystem::octic()).unwrap_err();
        assert_eq!(err, PolyError::UnweightedVariable("q".into()));
    }

    #[test]
    fn monomial_enumeration() {
        let ws = WeightSystem::octic();
        // 2i + 3j + k = 12 in (a, b, z)
        assert_eq!(ws.monomials_of_weight(&["a", "b", "z"], 48).unwrap().len(), 19);
        assert_eq!(ws.monomials_of_weight(&["a", "b"], 24).unwrap(), vec![vec![0, 2], vec![3, 0]]);
    }
}
