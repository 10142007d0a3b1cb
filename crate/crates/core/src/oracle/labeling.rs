//! Assignment of numeric roots to root indices.

use std::cmp::Ordering;

use crate::permgroup::catalog::NEGATION_PAIRS;

use super::complex::{real_zero, ComplexAP, Real};
use super::OracleError;

/// `roots[i]` is the value assigned to `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLabeling {
    pub roots: Vec<ComplexAP>,
}

impl RootLabeling {
    pub fn new(roots: Vec<ComplexAP>) -> Self {
        RootLabeling { roots }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `x_{i+1} -> roots[source[i]]` (0-based sources).
    pub fn relabel(&self, source: &[usize]) -> RootLabeling {
        RootLabeling::new(source.iter().map(|&s| self.roots[s].clone()).collect())
    }

    /// `max |x_i + x_j|` over the negation pairs of an octic labeling.
    pub fn pairing_residual(&self) -> Real {
        let zero = real_zero(self.roots[0].precision());
        NEGATION_PAIRS
            .iter()
            .map(|&(i, j)| (&self.roots[i - 1] + &self.roots[j - 1]).abs())
            .fold(zero, |a, b| if b > a { b } else { a })
    }
}

fn key(z: &ComplexAP) -> (f64, f64) {
    let (re, im) = z.to_f64();
    (re.abs(), im.abs())
}

/// Whether `z` is the canonical member of `{z, -z}`: positive real part, or
/// (numerically) zero real part and positive imaginary part.
fn is_canonical(z: &ComplexAP, tol: f64) -> bool {
    let (re, im) = z.to_f64();
    if re.abs() > tol {
        re > 0.0
    } else {
        im > 0.0
    }
}

/// Groups roots into pairs `(r, -r)`, each led by its canonical member,
/// sorted by `|Re|` then `|Im|`.
pub fn pair_by_negation(roots: &[ComplexAP], tol: &Real) -> Result<Vec<(ComplexAP, ComplexAP)>, OracleError> {
    if roots.len() % 2 != 0 {
        return Err(OracleError::NoPairing);
    }
    let tol_f = super::complex::real_to_f64(tol);
    let mut used = vec![false; roots.len()];
    let mut pairs = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        let partner = (0..roots.len())
            .filter(|&j| j != i && !used[j])
            .map(|j| (j, (&roots[i] + &roots[j]).abs()))
            .filter(|(_, e)| e < tol)
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
            .map(|(j, _)| j)
            .ok_or(OracleError::NoPairing)?;
        used[i] = true;
        used[partner] = true;
        let (p, q) = (roots[i].clone(), roots[partner].clone());
        pairs.push(if is_canonical(&p, tol_f) { (p, q) } else { (q, p) });
    }
    pairs.sort_by(|a, b| key(&a.0).partial_cmp(&key(&b.0)).unwrap_or(Ordering::Equal));
    Ok(pairs)
}

/// Canonical octic labeling: the `k`-th pair fills the `k`-th entry of
/// [`NEGATION_PAIRS`].
pub fn octic_labeling(pairs: &[(ComplexAP, ComplexAP)]) -> Result<RootLabeling, OracleError> {
    if pairs.len() != NEGATION_PAIRS.len() {
        return Err(OracleError::NoPairing);
    }
    let mut roots = vec![pairs[0].0.clone(); 8];
    for ((kept, negated), &(i, j)) in pairs.iter().zip(&NEGATION_PAIRS) {
        roots[i - 1] = kept.clone();
        roots[j - 1] = negated.clone();
    }
    Ok(RootLabeling::new(roots))
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_relabelings(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The 384 relabelings of an octic labeling that keep the negation pairs:
/// a permutation of the pairs combined with a swap inside each pair.
pub fn pair_respecting_relabelings() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for perm in all_relabelings(4) {
        for flips in 0u32..16 {
            let mut source = vec![0usize; 8];
            for (k, &(i, j)) in NEGATION_PAIRS.iter().enumerate() {
                let (si, sj) = NEGATION_PAIRS[perm[k]];
                let (si, sj) = if flips >> k & 1 == 1 { (sj, si) } else { (si, sj) };
                source[i - 1] = si - 1;
                source[j - 1] = sj - 1;
            }
            out.push(source);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::complex::real_pow2_neg;

    #[test]
    fn pairs_of_small_set() {
        let p = 64;
        let roots = [(1.0, 0.0), (0.0, -2.0), (-1.0, 0.0), (0.0, 2.0)].map(|(a, b)| ComplexAP::from_f64(a, b, p));
        let pairs = pair_by_negation(&roots, &real_pow2_neg(30, p)).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].0.to_f64(), (0.0, 2.0));
        assert_eq!(pairs[0].1.to_f64(), (0.0, -2.0));
        assert_eq!(pairs[1].0.to_f64(), (1.0, 0.0));
        assert!(matches!(pair_by_negation(&roots[..3], &real_pow2_neg(30, p)), Err(OracleError::NoPairing)));
    }

    #[test]
    fn relabeling_counts() {
        assert_eq!(all_relabelings(4).len(), 24);
        let rel = pair_respecting_relabelings();
        assert_eq!(rel.len(), 384);
        let mut sorted = rel.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 384);
        // each relabeling keeps the pairing
        for s in &rel {
            for &(i, j) in &NEGATION_PAIRS {
                let (a, b) = (s[i - 1] + 1, s[j - 1] + 1);
                assert!(NEGATION_PAIRS.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b)));
            }
        }
    }
}
