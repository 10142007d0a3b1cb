//! Permutations of `{1..n}` (stored 0-based) and cycle notation.

use std::fmt;

use super::GroupError;

/// A bijection of `{0..n-1}`; displayed 1-based in cycle notation.
/// The derived order (lexicographic on images) is the enumeration order of
/// groups, with the identity smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::BadPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(GroupError::BadPermutation(format!("point {p} outside 1..{n}")));
                }
                if moved[p - 1] {
                    return Err(GroupError::BadPermutation(format!("point {p} repeated")));
                }
                moved[p - 1] = true;
                images[p - 1] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1,3,4,8,7,5)(2,6)` or `()`.
    pub fn parse(n: usize, text: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadPermutation(format!("cannot parse {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let body = &inner[..close];
            if !body.is_empty() {
                let pts = body
                    .split(',')
                    .map(|s| s.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(pts);
            }
            rest = &inner[close + 1..];
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let cyc = self.cycles();
        let moved: usize = cyc.iter().map(Vec::len).sum();
        let mut t: Vec<usize> = cyc.iter().map(Vec::len).collect();
        t.extend(std::iter::repeat(1).take(self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse(8, "(1,3,4,8,7,5)(2,6)").unwrap();
        assert_eq!(p.to_string(), "(1,3,4,8,7,5)(2,6)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert_eq!(Perm::parse(8, "(1, 2, 5, 3, 8, 6, 4, 7)").unwrap().order(), 8);
        assert!(Perm::parse(4, "(1,5)").is_err());
        assert!(Perm::parse(4, "(1,2,1)").is_err());
        assert!(Perm::parse(4, "(1,2").is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        // b first: 1->1->2, 2->3->3, 3->2->1
        assert_eq!(a.compose(&b).to_string(), "(1,2,3)");
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(!a.is_even());
        assert_eq!(Perm::parse(4, "(1,2)(3,4)").unwrap().cycle_type(), vec![2, 2]);
    }
}
