//! Exact linear algebra over the rationals: reduced row echelon form, rank,
//! integer kernel bases, and fraction-free determinants. Everything here is
//! deterministic — pivoting always picks the first usable row — so canonical
//! forms built on top of it are stable across runs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn to_rational(mat: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    mat.iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form; returns the reduced matrix and the pivot columns
/// in increasing order.
pub fn rref(mat: &[Vec<BigRational>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigRational>> = mat.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(src) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, src);
        let inv = a[r][c].recip();
        for x in &mut a[r] {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..cols {
                    let delta = &factor * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

pub fn rank(mat: &[Vec<BigRational>]) -> usize {
    rref(mat).1.len()
}

pub fn rank_int(mat: &[Vec<BigInt>]) -> usize {
    rank(&to_rational(mat))
}

/// Clear denominators and common integer factors from a rational vector and
/// flip signs so the first nonzero entry is positive. Zero vectors map to
/// all-zero integer vectors.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return ints;
    }
    for x in &mut ints {
        *x /= &gcd;
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Basis for the right kernel {v : Av = 0}, one primitive integer vector per
/// free column, ordered by free column index.
pub fn kernel_basis(mat: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    let cols = mat.first().map_or(0, Vec::len);
    let (red, pivots) = rref(mat);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -red[i][f].clone();
        }
        basis.push(primitive_integer_vector(&v));
    }
    basis
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_bareiss(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(mat.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut a = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(src) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, src);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Incremental row space with O(1) rollback: vectors reduce against the
/// previously inserted ones only, so earlier state is never mutated and
/// `pop` exactly undoes the last successful `insert`. Suits depth-first
/// subset enumeration where independence of a growing set is queried at
/// every step.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current basis; if a nonzero remainder is left,
    /// store it and report the rank increase.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let factor = &w[*p] / &row[*p];
            for (wj, rj) in w.iter_mut().zip(row) {
                let delta = &factor * rj;
                *wj -= delta;
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }

    /// Undo the most recent successful `insert`.
    pub fn pop(&mut self) {
        self.rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_and_rref() {
        let a = to_rational(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]));
        let (red, pivots) = rref(&a);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rank(&a), 2);
        assert!(red[2].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // Kernel of [1 1 1] is spanned by (1,-1,0) ~ (1,0,-1) after the
        // free-column construction; check A v = 0 and primitivity instead of
        // pinning a particular basis.
        let a = to_rational(&m(&[&[2, 4, 6]]));
        let basis = kernel_basis(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot: BigInt = v
                .iter()
                .zip([2, 4, 6])
                .map(|(x, c)| x * BigInt::from(c))
                .sum();
            assert!(dot.is_zero());
            let gcd = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            assert!(gcd.is_one());
            assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        assert_eq!(det_bareiss(&m(&[&[3]])), BigInt::from(3));
        assert_eq!(det_bareiss(&m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(det_bareiss(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_bareiss(&m(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])),
            BigInt::from(5)
        );
        assert_eq!(det_bareiss(&m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn echelon_insert_and_rollback() {
        let cols = to_rational(&m(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]));
        let mut e = Echelon::new();
        assert!(e.insert(&cols[0]));
        assert!(e.insert(&cols[1]));
        assert!(!e.insert(&cols[2]));
        assert_eq!(e.rank(), 2);
        assert!(e.insert(&cols[3]));
        assert_eq!(e.rank(), 3);
        e.pop();
        assert_eq!(e.rank(), 2);
        assert!(e.insert(&cols[3]));
    }
}
