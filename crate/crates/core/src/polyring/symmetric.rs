//! Elementary symmetric polynomials and Gauss's reduction of symmetric
//! polynomials to polynomials in `e1..en`.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::poly::{root_var, MultiPoly};
use super::rational::BigRat;
use super::PolyError;

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// `e_k` in the given variables.
pub fn elem_sym_in(vars: &[String], k: usize) -> MultiPoly {
    assert!(k <= vars.len(), "elem_sym: k > n");
    let mut sets = Vec::new();
    subsets(vars.len(), k, 0, &mut Vec::new(), &mut sets);
    let terms = sets.into_iter().map(|s| {
        let mut e = vec![0u32; vars.len()];
        for i in s {
            e[i] = 1;
        }
        (e, BigRat::one())
    });
    MultiPoly::from_terms(vars.to_vec(), terms)
}

/// `e_k(x1, ..., xn)`.
pub fn elem_sym(n: usize, k: usize) -> MultiPoly {
    elem_sym_in(&root_vars(n), k)
}

pub fn root_vars(n: usize) -> Vec<String> {
    (1..=n).map(root_var).collect()
}

pub fn elem_vars(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("e{k}")).collect()
}

/// Swaps two variables.
pub fn transpose(p: &MultiPoly, a: &str, b: &str) -> MultiPoly {
    let map: BTreeMap<String, String> = [(a.to_string(), b.to_string()), (b.to_string(), a.to_string())]
        .into_iter()
        .collect();
    p.rename(&map)
}

/// Checks invariance under the adjacent transpositions, which generate the
/// full symmetric group on `vars`.
pub fn check_symmetric(p: &MultiPoly, vars: &[String]) -> Result<(), PolyError> {
    for w in vars.windows(2) {
        if transpose(p, &w[0], &w[1]) != *p {
            return Err(PolyError::NotSymmetric(w[0].clone(), w[1].clone()));
        }
    }
    Ok(())
}

/// Rewrites a symmetric `p` in `vars` as a polynomial in `out` (the names of
/// `e1..en`), verifying the result by back-substitution.
pub fn symmetric_reduce_in(p: &MultiPoly, vars: &[String], out: &[String]) -> Result<MultiPoly, PolyError> {
    assert_eq!(vars.len(), out.len());
    if let Some(extra) = p.vars().iter().find(|v| !vars.contains(v)) {
        return Err(PolyError::UnexpectedVariable(extra.clone()));
    }
    check_symmetric(p, vars)?;
    let n = vars.len();
    let es: Vec<MultiPoly> = (1..=n).map(|k| elem_sym_in(vars, k)).collect();
    let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    let mut rest = p.clone();
    let mut result_terms: Vec<(Vec<u32>, BigRat)> = Vec::new();
    while let Some((lead, c)) = rest.leading_term() {
        // exponents of the leading monomial, indexed like `vars`
        let mut a = vec![0u32; n + 1];
        for (name, e) in &lead {
            let i = vars.iter().position(|v| v == name).unwrap();
            a[i] = *e;
        }
        let mut exps = vec![0u32; n];
        let mut term = MultiPoly::constant(c.clone());
        for k in 0..n {
            debug_assert!(a[k] >= a[k + 1], "leading monomial of a symmetric polynomial is a partition");
            let m = a[k] - a[k + 1];
            exps[k] = m;
            if m > 0 {
                let pw = powers.entry((k, m)).or_insert_with(|| es[k].pow(m));
                term = &term * &*pw;
            }
        }
        rest = &rest - &term;
        result_terms.push((exps, c));
    }
    let reduced = MultiPoly::from_terms(out.to_vec(), result_terms);
    let back: BTreeMap<String, MultiPoly> = out.iter().cloned().zip(es).collect();
    assert_eq!(reduced.substitute(&back), *p, "symmetric reduction failed back-substitution");
    Ok(reduced)
}

/// Rewrites a symmetric polynomial in `x1..xn` in terms of `e1..en`.
pub fn symmetric_reduce(p: &MultiPoly, n: usize) -> Result<MultiPoly, PolyError> {
    symmetric_reduce_in(p, &root_vars(n), &elem_vars(n))
}

/// Substitutes `e_k -> poly(x1..xn)` (inverse of [`symmetric_reduce`]).
pub fn expand_elementary(q: &MultiPoly, n: usize) -> MultiPoly {
    let back: BTreeMap<String, MultiPoly> = elem_vars(n)
        .into_iter()
        .zip((1..=n).map(|k| elem_sym(n, k)))
        .collect();
    q.substitute(&back)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::text::poly;

    #[test]
    fn elementary_counts() {
        assert_eq!(elem_sym(4, 1), poly("x1 + x2 + x3 + x4"));
        assert_eq!(elem_sym(4, 4), poly("x1*x2*x3*x4"));
        assert_eq!(elem_sym(6, 2).num_terms(), 15);
        assert_eq!(elem_sym(3, 0), MultiPoly::one());
    }

    #[test]
    fn newton_identity() {
        let q = symmetric_reduce(&poly("x1^2 + x2^2"), 2).unwrap();
        assert_eq!(q, poly("e1^2 - 2*e2"));
    }

    #[test]
    fn power_sums_of_four() {
        let p3 = poly("x1^3 + x2^3 + x3^3 + x4^3");
        let q = symmetric_reduce(&p3, 4).unwrap();
        assert_eq!(q, poly("e1^3 - 3*e1*e2 + 3*e3"));
    }

    #[test]
    fn rejects_non_symmetric() {
        let err = symmetric_reduce(&poly("x1^2 + x2"), 2).unwrap_err();
        assert_eq!(err, PolyError::NotSymmetric("x1".into(), "x2".into()));
        let err = symmetric_reduce(&poly("x1 + x2 + a"), 2).unwrap_err();
        assert_eq!(err, PolyError::UnexpectedVariable("a".into()));
    }
}
