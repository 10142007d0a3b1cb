//! Fully enumerated permutation groups, cosets and normalizers.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use super::perm::Perm;
use super::GroupError;

/// Default bound on the number of enumerated elements.
pub const ENUMERATION_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    /// Sorted; the identity comes first.
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of `gens` in `S_degree`.
    pub fn closure(degree: usize, gens: &[Perm]) -> Result<Self, GroupError> {
        Self::closure_capped(degree, gens, ENUMERATION_CAP)
    }

    pub fn closure_capped(degree: usize, gens: &[Perm], cap: usize) -> Result<Self, GroupError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            generators: gens.to_vec(),
            elements,
        })
    }

    /// Parses generators in cycle notation.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self, GroupError> {
        let gens = gens
            .iter()
            .map(|s| Perm::parse(degree, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::closure(degree, &gens)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![1, 2]]).unwrap());
            gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        Self::closure(n, &gens).expect("symmetric group fits the cap")
    }

    pub fn trivial(n: usize) -> Self {
        Self::closure(n, &[]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|x| g.contains(x))
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.elements.iter().filter(|g| g.order() == 2).count()
    }

    /// Abelian with every nonidentity element of order 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && self.elements.iter().all(|g| g.compose(g).is_identity())
    }

    fn require_subgroup(&self, sub: &PermGroup) -> Result<(), GroupError> {
        if sub.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(GroupError::NotASubgroup)
        }
    }

    fn conjugate_set(&self, g: &Perm, sub: &PermGroup) -> bool {
        let gi = g.inverse();
        sub.elements.iter().all(|h| sub.contains(&g.compose(h).compose(&gi)))
    }

    /// Whether `sub` is normal in `self` (checked on the generators of `self`).
    pub fn is_normal(&self, sub: &PermGroup) -> Result<bool, GroupError> {
        self.require_subgroup(sub)?;
        Ok(self.generators.iter().all(|g| self.conjugate_set(g, sub)))
    }

    /// `{g in self : g sub g^-1 = sub}`.
    pub fn normalizer(&self, sub: &PermGroup) -> Result<PermGroup, GroupError> {
        self.require_subgroup(sub)?;
        let elems: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| self.conjugate_set(g, sub))
            .cloned()
            .collect();
        Ok(Self::from_sorted_elements(self.degree, elems))
    }

    /// Wraps an already closed, sorted element list; its elements double as
    /// the generating set.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Perm>) -> Self {
        PermGroup {
            degree,
            generators: elements.clone(),
            elements,
        }
    }

    /// Subgroup of elements satisfying `keep` (caller guarantees closure).
    pub fn filter_subgroup(&self, keep: impl Fn(&Perm) -> bool) -> PermGroup {
        let elems: Vec<Perm> = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        let sub = Self::from_sorted_elements(self.degree, elems);
        debug_assert!(sub.elements.iter().all(|a| sub.elements.iter().all(|b| sub.contains(&a.compose(b)))));
        sub
    }

    /// Left cosets `g F`, one per class, each represented by its least
    /// element in enumeration order.
    pub fn left_transversal(self: &Arc<Self>, sub: &Arc<PermGroup>) -> Result<Vec<Coset>, GroupError> {
        self.require_subgroup(sub)?;
        let mut covered = vec![false; self.order()];
        let mut out = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            for f in &sub.elements {
                covered[self.index_of(&g.compose(f)).unwrap()] = true;
            }
            out.push(Coset {
                representative: g.clone(),
                subgroup: Arc::clone(sub),
            });
        }
        Ok(out)
    }

    /// Checks that `reps` is a left transversal of `sub` in `self`.
    pub fn is_left_transversal(&self, sub: &PermGroup, reps: &[Perm]) -> bool {
        if reps.len() * sub.order() != self.order() || !reps.iter().all(|r| self.contains(r)) {
            return false;
        }
        let mut seen = HashSet::new();
        reps.iter()
            .all(|r| sub.elements.iter().all(|f| seen.insert(r.compose(f))))
    }
}

/// Left coset `representative · subgroup`.
#[derive(Clone, Debug)]
pub struct Coset {
    pub representative: Perm,
    pub subgroup: Arc<PermGroup>,
}

impl Coset {
    pub fn new(representative: Perm, subgroup: Arc<PermGroup>) -> Self {
        Coset {
            representative,
            subgroup,
        }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.subgroup.contains(&self.representative.inverse().compose(g))
    }

    pub fn elements(&self) -> Vec<Perm> {
        let mut v: Vec<Perm> = self
            .subgroup
            .elements()
            .iter()
            .map(|f| self.representative.compose(f))
            .collect();
        v.sort();
        v
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.subgroup.elements() == other.subgroup.elements() && self.contains(&other.representative)
    }
}

impl Eq for Coset {}
