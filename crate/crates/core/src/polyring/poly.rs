//! Sparse multivariate polynomials over `BigRat` with named variables.
//!
//! A `MultiPoly` is always canonical: its variable list holds exactly the
//! variables that occur, sorted by [`priority_cmp`], and its term map holds no
//! zero coefficients. Structural equality is therefore polynomial equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{rat, BigRat};
use super::PolyError;

/// Exponent vector aligned with a variable list, ordered graded-lex
/// (total degree first, then lexicographic with the first variable most
/// significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn natural_key(name: &str) -> (String, Option<u64>) {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let digits = &name[stem.len()..];
    (stem.to_ascii_lowercase(), digits.parse().ok())
}

/// Order in which variables appear inside a printed monomial:
/// case-insensitive, with numeric suffixes compared as numbers.
pub fn print_cmp(a: &str, b: &str) -> Ordering {
    natural_key(a).cmp(&natural_key(b)).then_with(|| a.cmp(b))
}

/// Term-order significance of variables. Names starting with an uppercase
/// letter (main variables such as `Y`, `X`, `Delta`) rank above lowercase
/// ones; otherwise natural order, so `x1 > x2 > ... > x10`.
pub fn priority_cmp(a: &str, b: &str) -> Ordering {
    let class = |s: &str| !s.starts_with(|c: char| c.is_ascii_uppercase());
    class(a).cmp(&class(b)).then_with(|| print_cmp(a, b))
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match priority_cmp(&a[i], &b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

type TermMap = BTreeMap<Monomial, BigRat>;

fn add_into(map: &mut TermMap, mono: Monomial, c: BigRat) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(mono) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: TermMap,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut terms = TermMap::new();
        add_into(&mut terms, Monomial(vec![]), c);
        MultiPoly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(name: &str) -> Self {
        MultiPoly {
            vars: vec![name.to_string()],
            terms: [(Monomial(vec![1]), BigRat::one())].into_iter().collect(),
        }
    }

    /// `coeff * Π var^exp`.
    pub fn monomial(coeff: BigRat, powers: &[(&str, u32)]) -> Self {
        let vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        let exps: Vec<u32> = powers.iter().map(|(_, e)| *e).collect();
        Self::from_terms(vars, [(exps, coeff)])
    }

    /// Builds a canonical polynomial from arbitrary (possibly unsorted,
    /// repeated) variable names and exponent vectors aligned with them.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigRat)>,
    {
        let mut sorted = vars.clone();
        sorted.sort_by(|a, b| priority_cmp(a, b));
        sorted.dedup();
        let pos: Vec<usize> = vars
            .iter()
            .map(|v| sorted.binary_search_by(|s| priority_cmp(s, v)).unwrap())
            .collect();
        let mut map = TermMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            let mut e = vec![0u32; sorted.len()];
            for (i, x) in exps.iter().enumerate() {
                e[pos[i]] += x;
            }
            add_into(&mut map, Monomial(e), c);
        }
        Self::from_aligned(sorted, map)
    }

    /// `vars` must already be sorted and deduplicated; drops unused variables.
    fn from_aligned(vars: Vec<String>, mut terms: TermMap) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|u| *u) {
            return MultiPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| vars[i].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MultiPoly { vars, terms }
    }

    fn remapped(&self, target: &[String]) -> TermMap {
        if self.vars.as_slice() == target {
            return self.terms.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.binary_search_by(|s| priority_cmp(s, v)).unwrap())
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.len()];
                for (i, x) in m.0.iter().enumerate() {
                    e[pos[i]] = *x;
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.var_index(name).is_some()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Terms in descending graded-lex order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&[u32], &BigRat)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Terms in ascending graded-lex order.
    pub fn terms_asc(&self) -> impl Iterator<Item = (&[u32], &BigRat)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<BigRat> {
        if self.is_zero() {
            Some(BigRat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> BigRat {
        self.terms
            .iter()
            .next()
            .filter(|(m, _)| m.degree() == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Leading term in graded-lex order, as (powers, coefficient).
    pub fn leading_term(&self) -> Option<(Vec<(String, u32)>, BigRat)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (self.named_powers(&m.0), c.clone()))
    }

    fn named_powers(&self, exps: &[u32]) -> Vec<(String, u32)> {
        self.vars
            .iter()
            .zip(exps)
            .filter(|(_, e)| **e > 0)
            .map(|(v, e)| (v.clone(), *e))
            .collect()
    }

    /// Iterates terms as named powers in descending order.
    pub fn named_terms(&self) -> Vec<(Vec<(String, u32)>, BigRat)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (self.named_powers(&m.0), c.clone()))
            .collect()
    }

    /// Coefficient of the monomial `Π var^exp`.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> BigRat {
        let mut e = vec![0u32; self.vars.len()];
        for (v, x) in powers {
            if *x == 0 {
                continue;
            }
            match self.var_index(v) {
                Some(i) => e[i] += x,
                None => return BigRat::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<TermMap> = vec![TermMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i] as usize;
            e[i] = 0;
            buckets[k].insert(Monomial(e), c.clone());
        }
        buckets
            .into_iter()
            .map(|t| Self::from_aligned(self.vars.clone(), t))
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients(var: &str, coeffs: &[MultiPoly]) -> Self {
        let v = MultiPoly::var(var);
        let mut acc = MultiPoly::zero();
        let mut power = MultiPoly::one();
        for c in coeffs {
            acc = &acc + &(c * &power);
            power = &power * &v;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return Self::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[i] -= 1;
                (Monomial(e), c * rat(m.0[i] as i64))
            })
            .collect();
        Self::from_aligned(self.vars.clone(), terms)
    }

    /// Simultaneous substitution `var -> poly`. Bindings for variables that do
    /// not occur are ignored.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Self {
        let bound: Vec<Option<&MultiPoly>> = self.vars.iter().map(|v| bindings.get(v)).collect();
        if bound.iter().all(Option::is_none) {
            return self.clone();
        }
        if bound.iter().flatten().all(|p| p.num_terms() <= 1) {
            return self.substitute_monomial(&bound);
        }
        let free: Vec<String> = self
            .vars
            .iter()
            .zip(&bound)
            .filter(|(_, b)| b.is_none())
            .map(|(v, _)| v.clone())
            .collect();
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut free_exps = Vec::with_capacity(free.len());
            let mut part = MultiPoly::constant(c.clone());
            for (i, e) in m.0.iter().enumerate() {
                match bound[i] {
                    None => free_exps.push(*e),
                    Some(p) => {
                        if *e > 0 {
                            let pw = powers.entry((i, *e)).or_insert_with(|| p.pow(*e));
                            part = &part * &*pw;
                        }
                    }
                }
            }
            let free_mono = MultiPoly::from_terms(free.clone(), [(free_exps, BigRat::one())]);
            acc = &acc + &(&part * &free_mono);
        }
        acc
    }

    /// Fast path: every binding is zero or a single term.
    fn substitute_monomial(&self, bound: &[Option<&MultiPoly>]) -> Self {
        let mut all_vars: Vec<String> = self
            .vars
            .iter()
            .zip(bound)
            .filter(|(_, b)| b.is_none())
            .map(|(v, _)| v.clone())
            .collect();
        for p in bound.iter().flatten() {
            all_vars = merge_vars(&all_vars, &p.vars);
        }
        all_vars.sort_by(|a, b| priority_cmp(a, b));
        all_vars.dedup();
        let idx = |name: &str| all_vars.iter().position(|v| v == name).unwrap();
        // each source variable becomes (coefficient, exponent vector over all_vars)
        let images: Vec<Option<(BigRat, Vec<u32>)>> = self
            .vars
            .iter()
            .zip(bound)
            .map(|(v, b)| match b {
                None => {
                    let mut e = vec![0; all_vars.len()];
                    e[idx(v)] = 1;
                    Some((BigRat::one(), e))
                }
                Some(p) => p.terms.iter().next().map(|(m, c)| {
                    let mut e = vec![0; all_vars.len()];
                    for (j, x) in m.0.iter().enumerate() {
                        e[idx(&p.vars[j])] += x;
                    }
                    (c.clone(), e)
                }),
            })
            .collect();
        let mut out = TermMap::new();
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = vec![0u32; all_vars.len()];
            for (i, x) in m.0.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                match &images[i] {
                    None => continue 'terms,
                    Some((k, img)) => {
                        if !k.is_one() {
                            coeff *= num_traits::pow(k.clone(), *x as usize);
                        }
                        for (a, b) in e.iter_mut().zip(img) {
                            *a += b * x;
                        }
                    }
                }
            }
            add_into(&mut out, Monomial(e), coeff);
        }
        Self::from_aligned(all_vars, out)
    }

    /// Convenience wrapper over [`substitute`](Self::substitute).
    pub fn subs(&self, bindings: &[(&str, MultiPoly)]) -> Self {
        let map = bindings
            .iter()
            .map(|(v, p)| (v.to_string(), p.clone()))
            .collect();
        self.substitute(&map)
    }

    /// Simultaneous renaming of variables.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
            .collect();
        Self::from_terms(vars, self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())))
    }

    /// Substitutes rational values for some variables.
    pub fn partial_eval(&self, point: &BTreeMap<String, BigRat>) -> Self {
        let bindings = point
            .iter()
            .map(|(v, x)| (v.clone(), MultiPoly::constant(x.clone())))
            .collect();
        self.substitute(&bindings)
    }

    pub fn evaluate(&self, point: &BTreeMap<String, BigRat>) -> Result<BigRat, PolyError> {
        let vals: Vec<&BigRat> = self
            .vars
            .iter()
            .map(|v| point.get(v).ok_or_else(|| PolyError::MissingBinding(v.clone())))
            .collect::<Result<_, _>>()?;
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in vals.iter().zip(&m.0) {
                if *e > 0 {
                    t *= num_traits::pow((*x).clone(), *e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / q`; fails unless `q` divides `self` in the
    /// polynomial ring.
    pub fn exact_div(&self, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if let Some(c) = q.constant_value() {
            return Ok(self.scale(&(BigRat::one() / c)));
        }
        let vars = merge_vars(&self.vars, &q.vars);
        let mut rem = self.remapped(&vars);
        let divisor = q.remapped(&vars);
        let (lead_m, lead_c) = divisor.iter().next_back().unwrap();
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
        let mut quot = TermMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lead_m.divides(m) {
                return Err(PolyError::NotDivisible);
            }
            let tm = Monomial(m.0.iter().zip(&lead_m.0).map(|(a, b)| a - b).collect());
            let tc = c / &lead_c;
            for (dm, dc) in &divisor {
                let e = Monomial(dm.0.iter().zip(&tm.0).map(|(a, b)| a + b).collect());
                add_into(&mut rem, e, -(dc * &tc));
            }
            quot.insert(tm, tc);
        }
        Ok(Self::from_aligned(vars, quot))
    }

    pub fn map_coefficients(&self, f: impl Fn(&BigRat) -> BigRat) -> Self {
        Self::from_aligned(
            self.vars.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        )
    }

    /// Rescales every exponent by `factor / divisor`; `None` when some
    /// exponent does not divide evenly. Used to pass between `x_i^2` and a
    /// variable standing for the square.
    pub fn scale_exponents(&self, factor: u32, divisor: u32) -> Option<Self> {
        let mut out = TermMap::new();
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(m.0.len());
            for x in &m.0 {
                if (x * factor) % divisor != 0 {
                    return None;
                }
                e.push(x * factor / divisor);
            }
            out.insert(Monomial(e), c.clone());
        }
        Some(Self::from_aligned(self.vars.clone(), out))
    }

    pub fn max_abs_coefficient(&self) -> BigRat {
        use num_traits::Signed;
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRat::zero)
    }

    /// Terms with exponent vectors re-indexed over `vars`; `None` if some
    /// variable of `self` is missing from `vars`.
    pub fn exponents_over(&self, vars: &[String]) -> Option<Vec<(Vec<u32>, BigRat)>> {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect::<Option<_>>()?;
        Some(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; vars.len()];
                    for (i, x) in m.0.iter().enumerate() {
                        e[pos[i]] = *x;
                    }
                    (e, c.clone())
                })
                .collect(),
        )
    }
}

fn add_polys(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    let vars = merge_vars(&a.vars, &b.vars);
    let mut terms = a.remapped(&vars);
    let bt: TermMap;
    let b_terms = if b.vars == vars {
        &b.terms
    } else {
        bt = b.remapped(&vars);
        &bt
    };
    for (m, c) in b_terms {
        add_into(&mut terms, m.clone(), if negate_b { -c.clone() } else { c.clone() });
    }
    MultiPoly::from_aligned(vars, terms)
}

fn mul_polys(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let vars = merge_vars(&a.vars, &b.vars);
    let at = a.remapped(&vars);
    let bt = b.remapped(&vars);
    let mut out = TermMap::new();
    for (m1, c1) in &at {
        for (m2, c2) in &bt {
            let e = Monomial(m1.0.iter().zip(&m2.0).map(|(x, y)| x + y).collect());
            add_into(&mut out, e, c1 * c2);
        }
    }
    MultiPoly::from_aligned(vars, out)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        add_polys(self, rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        add_polys(self, rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        mul_polys(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coefficients(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |a, b| &a * &b)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<BigRat> for MultiPoly {
    fn from(c: BigRat) -> Self {
        MultiPoly::constant(c)
    }
}

/// Shorthand for `MultiPoly::var`.
pub fn v(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

/// Root variable `x<i>` (1-based).
pub fn root_var(i: usize) -> String {
    format!("x{i}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::frac;

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (v("x1"), v("x2"));
        let p = (&x1 + &x2) * (&x1 - &x2);
        let expect = x1.pow(2) - x2.pow(2);
        assert_eq!(p, expect);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn binomial_cube() {
        let x = v("x");
        let p = (&x + &MultiPoly::one()).pow(3);
        assert_eq!(p.coeff_of(&[("x", 2)]), rat(3));
        assert_eq!(p.coeff_of(&[("x", 3)]), rat(1));
        assert_eq!(p.constant_term(), rat(1));
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn cancellation_drops_variables() {
        let p = v("a") + v("b") - v("b");
        assert_eq!(p.vars(), &["a".to_string()]);
        assert_eq!(p, v("a"));
        assert!((v("q") - v("q")).vars().is_empty());
    }

    #[test]
    fn variable_priority() {
        let mut names = vec!["x10", "a", "Y", "x2", "Delta", "b", "x1"];
        names.sort_by(|a, b| priority_cmp(a, b));
        assert_eq!(names, ["Delta", "Y", "a", "b", "x1", "x2", "x10"]);
        let mut names = vec!["Y", "a", "Delta"];
        names.sort_by(|a, b| print_cmp(a, b));
        assert_eq!(names, ["a", "Delta", "Y"]);
    }

    #[test]
    fn exact_division() {
        let x = v("x");
        let p = x.pow(2) - MultiPoly::one();
        let q = &x - &MultiPoly::one();
        assert_eq!(p.exact_div(&q).unwrap(), &x + &MultiPoly::one());
        assert_eq!(
            p.exact_div(&(&x + &MultiPoly::int(2))),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(p.exact_div(&MultiPoly::zero()), Err(PolyError::DivisionByZero));
        let r = (v("a") * v("b") + v("c")).pow(3);
        assert_eq!(r.exact_div(&r).unwrap(), MultiPoly::one());
    }

    #[test]
    fn substitution() {
        let p = v("x1") + v("x8");
        assert!(p.subs(&[("x8", -v("x1"))]).is_zero());
        let shift = (v("Y") + v("a")).pow(2).subs(&[("Y", v("Y") - v("a"))]);
        assert_eq!(shift, v("Y").pow(2));
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        // simultaneous, not sequential
        let swap = (v("x") - v("y").scale_int(2)).subs(&[("x", v("y")), ("y", v("x"))]);
        assert_eq!(swap, v("y") - v("x").scale_int(2));
    }

    #[test]
    fn evaluation() {
        let p = v("x").pow(2) + v("y");
        let pt = [("x".to_string(), rat(2)), ("y".to_string(), rat(3))]
            .into_iter()
            .collect();
        assert_eq!(p.evaluate(&pt).unwrap(), rat(7));
        let d = v("a").pow(3).scale_int(4) + v("b").pow(2).scale_int(27);
        let pt = [("a".to_string(), rat(1)), ("b".to_string(), rat(1))]
            .into_iter()
            .collect();
        assert_eq!(d.evaluate(&pt).unwrap(), rat(31));
        assert_eq!(d.scale_int(-16).evaluate(&pt).unwrap(), rat(-496));
        assert_eq!(
            v("z").evaluate(&pt),
            Err(PolyError::MissingBinding("z".into()))
        );
    }

    #[test]
    fn coefficients_round_trip() {
        let p = v("Y").pow(3) * v("a") + v("Y").scale(&frac(1, 2)) + v("b");
        let cs = p.coefficients_in("Y");
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[3], v("a"));
        assert_eq!(MultiPoly::from_coefficients("Y", &cs), p);
    }
}
