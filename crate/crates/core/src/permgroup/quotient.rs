//! Finite groups as multiplication tables, quotient groups, and explicit
//! isomorphism search.

use std::collections::VecDeque;

use super::group::PermGroup;
use super::perm::Perm;
use super::GroupError;

/// Abstract finite group on `0..n` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn of_group(g: &PermGroup) -> Self {
        let elems = g.elements();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| g.index_of(&a.compose(b)).unwrap()).collect())
            .collect();
        CayleyTable { table }
    }

    /// `G/H` on left cosets; requires `H` normal in `G`.
    pub fn quotient(g: &PermGroup, h: &PermGroup) -> Result<Self, GroupError> {
        if !g.is_normal(h)? {
            return Err(GroupError::NotNormal);
        }
        // coset index of every element; coset 0 is H itself
        let mut class = vec![usize::MAX; g.order()];
        let mut reps: Vec<Perm> = Vec::new();
        for (i, x) in g.elements().iter().enumerate() {
            if class[i] != usize::MAX {
                continue;
            }
            for y in h.elements() {
                class[g.index_of(&x.compose(y)).unwrap()] = reps.len();
            }
            reps.push(x.clone());
        }
        let table = reps
            .iter()
            .map(|a| {
                reps.iter()
                    .map(|b| class[g.index_of(&a.compose(b)).unwrap()])
                    .collect()
            })
            .collect();
        Ok(CayleyTable { table })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// A small generating set chosen greedily, highest element order first.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut cands: Vec<usize> = (1..self.order()).collect();
        cands.sort_by_key(|&a| std::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut seen = self.generated(&gens);
        for a in cands {
            if seen.iter().all(|s| *s) {
                break;
            }
            if !seen[a] {
                gens.push(a);
                seen = self.generated(&gens);
            }
        }
        gens
    }

    /// Extends `gens -> images` to a map on all elements; `None` unless it is
    /// a well-defined homomorphism.
    fn extend(&self, other: &CayleyTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (g, t) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let img = other.mul(map[x], *t);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push_back(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// An explicit isomorphism `self -> other`, found by backtracking over
    /// order-preserving generator images.
    pub fn isomorphism_to(&self, other: &CayleyTable) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let gens = self.generating_set();
        let mut images = Vec::with_capacity(gens.len());
        self.search(other, &gens, &mut images)
    }

    fn search(&self, other: &CayleyTable, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            let map = self.extend(other, gens, images)?;
            let mut hit = vec![false; other.order()];
            for &m in &map {
                if hit[m] {
                    return None;
                }
                hit[m] = true;
            }
            return Some(map);
        }
        let want = self.element_order(gens[images.len()]);
        for t in 0..other.order() {
            if other.element_order(t) != want {
                continue;
            }
            images.push(t);
            if let Some(m) = self.search(other, gens, images) {
                return Some(m);
            }
            images.pop();
        }
        None
    }

    pub fn is_isomorphic_to(&self, other: &CayleyTable) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

/// Whether `G/H` is isomorphic to `S_4` (explicit isomorphism required).
pub fn is_isomorphic_to_s4(g: &PermGroup, h: &PermGroup) -> Result<bool, GroupError> {
    let q = CayleyTable::quotient(g, h)?;
    Ok(q.order() == 24 && q.is_isomorphic_to(&CayleyTable::of_group(&PermGroup::symmetric(4))))
}

/// Whether `G/H` is isomorphic to `S_3`.
pub fn is_isomorphic_to_s3(g: &PermGroup, h: &PermGroup) -> Result<bool, GroupError> {
    let q = CayleyTable::quotient(g, h)?;
    Ok(q.order() == 6 && q.is_isomorphic_to(&CayleyTable::of_group(&PermGroup::symmetric(3))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_mod_v4_is_s3() {
        let s4 = PermGroup::symmetric(4);
        let v4 = PermGroup::from_cycle_strings(4, &["(1,4)(2,3)", "(1,3)(2,4)"]).unwrap();
        let q = CayleyTable::quotient(&s4, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!is_isomorphic_to_s4(&s4, &v4).unwrap());
        assert!(is_isomorphic_to_s3(&s4, &v4).unwrap());
    }

    #[test]
    fn cyclic_is_not_symmetric() {
        let c6 = PermGroup::from_cycle_strings(6, &["(1,2,3,4,5,6)"]).unwrap();
        let s3 = PermGroup::symmetric(3);
        let t = CayleyTable::of_group(&c6);
        assert!(!t.is_isomorphic_to(&CayleyTable::of_group(&s3)));
        assert!(t.is_isomorphic_to(&t));
    }

    #[test]
    fn quotient_requires_normality() {
        let s4 = PermGroup::symmetric(4);
        let t = PermGroup::from_cycle_strings(4, &["(1,2)"]).unwrap();
        assert_eq!(CayleyTable::quotient(&s4, &t), Err(GroupError::NotNormal));
    }
}
