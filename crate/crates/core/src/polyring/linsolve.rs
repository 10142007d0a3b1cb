//! Exact linear systems over Q: fraction-free integer echelon form followed by
//! rational back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::BigRat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    /// Solution with every free variable set to zero.
    pub particular: Vec<BigRat>,
    /// Basis of the kernel of the coefficient matrix.
    pub nullspace: Vec<Vec<BigRat>>,
    pub rank: usize,
}

fn clear_denominators(row: &[BigRat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Solves `a * x = b`. Returns `None` when the system is inconsistent.
pub fn solve(a: &[Vec<BigRat>], b: &[BigRat]) -> Option<LinearSolution> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut full = r.clone();
            full.push(rhs.clone());
            let mut ints = clear_denominators(&full);
            primitive(&mut ints);
            ints
        })
        .collect();

    // forward elimination
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].abs())
        else {
            continue;
        };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = prow[col].gcd(&row[col]);
            let fp = &row[col] / &g;
            let fr = &prow[col] / &g;
            for j in col..=ncols {
                row[j] = &row[j] * &fr - &prow[j] * &fp;
            }
            primitive(row);
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }

    // rational reduced echelon form
    let mut red: Vec<Vec<BigRat>> = rows[..r]
        .iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let p = BigRat::from_integer(row[pc].clone());
            row.iter().map(|x| BigRat::from_integer(x.clone()) / &p).collect()
        })
        .collect();
    for k in (0..r).rev() {
        let pc = pivots[k];
        for i in 0..k {
            let f = red[i][pc].clone();
            if f.is_zero() {
                continue;
            }
            for j in pc..=ncols {
                let t = &red[k][j] * &f;
                red[i][j] -= t;
            }
        }
    }

    let mut particular = vec![BigRat::zero(); ncols];
    for (k, &pc) in pivots.iter().enumerate() {
        particular[pc] = red[k][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&fc| {
            let mut v = vec![BigRat::zero(); ncols];
            v[fc] = BigRat::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[k][fc].clone();
            }
            v
        })
        .collect();
    Some(LinearSolution {
        particular,
        nullspace,
        rank: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational::{frac, rat};

    fn row(xs: &[i64]) -> Vec<BigRat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn unique_solution() {
        let a = vec![row(&[2, 1]), row(&[1, -1])];
        let s = solve(&a, &row(&[3, 0])).unwrap();
        assert_eq!(s.particular, row(&[1, 1]));
        assert!(s.nullspace.is_empty());
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn rational_entries_and_kernel() {
        let a = vec![vec![frac(1, 2), frac(1, 3), rat(0)], vec![rat(1), frac(2, 3), rat(0)]];
        let s = solve(&a, &[rat(1), rat(2)]).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.particular, row(&[2, 0, 0]));
        assert_eq!(s.nullspace.len(), 2);
        for v in &s.nullspace {
            for r in &a {
                let dot: BigRat = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn inconsistent() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        assert!(solve(&a, &row(&[1, 3])).is_none());
    }
}
