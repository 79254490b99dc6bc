//! Matroids represented by integer matrices: the ground set is the column
//! index set, independence is linear independence over ℚ. Provides the rank
//! oracle (cached by column bitmask), flats, minors (`localize`,
//! `restrict_flat`), orthogonal duality, circuits, and the Tutte polynomial
//! by two independent routes — corank–nullity subset enumeration and
//! memoized deletion/contraction — together with the standard one-variable
//! specializations.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::LaurentPolynomial;
use crate::linalg::{self, Echelon};

/// Ground sets are bitmask-indexed, and subset enumeration is exponential;
/// these caps keep every supported operation comfortably exact.
pub const MAX_GROUND_SET: usize = 63;
const MAX_ENUMERATION: usize = 20;
const MAX_CIRCUIT_SEARCH: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("column {index} is zero; loop elements are rejected on input")]
    LoopPresent { index: usize },
    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),
    #[error("ground set of size {size} exceeds the limit {limit} for this operation")]
    ScaleExceeded { size: usize, limit: usize },
}

/// Column matroid of an integer matrix.
#[derive(Clone)]
pub struct Matroid {
    rows: Vec<Vec<BigInt>>,
    ncols: usize,
    cols_q: Vec<Vec<BigRational>>,
    rank_cache: Arc<Mutex<HashMap<u64, usize>>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ncols == other.ncols && self.rows == other.rows
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid({} x {}: {:?})", self.rows.len(), self.ncols, self.rows)
    }
}

impl Matroid {
    /// Validates shape, enforces the ground-set cap, and rejects zero
    /// columns (a zero column is a loop, which the geometric constructions
    /// downstream do not admit as input).
    pub fn from_matrix(rows: Vec<Vec<BigInt>>) -> Result<Self, MatroidError> {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        let m = Self::new_unchecked(rows, ncols);
        if m.ncols > MAX_GROUND_SET {
            return Err(MatroidError::ScaleExceeded { size: m.ncols, limit: MAX_GROUND_SET });
        }
        if let Some(index) = (0..m.ncols).find(|&j| m.cols_q[j].iter().all(|x| x.is_zero())) {
            return Err(MatroidError::LoopPresent { index });
        }
        Ok(m)
    }

    /// Internal constructor that tolerates zero columns: duals of matroids
    /// with coloops, and single-element contractions, produce loops.
    pub(crate) fn new_unchecked(rows: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        let cols_q: Vec<Vec<BigRational>> = (0..ncols)
            .map(|j| rows.iter().map(|r| BigRational::from_integer(r[j].clone())).collect())
            .collect();
        Self { rows, ncols, cols_q, rank_cache: Arc::new(Mutex::new(HashMap::new())) }
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Ground set size.
    pub fn len(&self) -> usize {
        self.ncols
    }

    pub fn is_empty(&self) -> bool {
        self.ncols == 0
    }

    fn full_mask(&self) -> u64 {
        if self.ncols == 0 {
            0
        } else {
            (1u64 << self.ncols) - 1
        }
    }

    fn mask_of(&self, elems: &[usize]) -> u64 {
        let mut m = 0u64;
        for &e in elems {
            assert!(e < self.ncols, "element {e} outside ground set");
            m |= 1 << e;
        }
        m
    }

    fn elems_of(&self, mask: u64) -> Vec<usize> {
        (0..self.ncols).filter(|&e| mask >> e & 1 == 1).collect()
    }

    fn rank_mask(&self, mask: u64) -> usize {
        if let Some(&r) = self.rank_cache.lock().unwrap().get(&mask) {
            return r;
        }
        let mut ech = Echelon::new();
        for e in 0..self.ncols {
            if mask >> e & 1 == 1 {
                ech.insert(&self.cols_q[e]);
            }
        }
        let r = ech.rank();
        self.rank_cache.lock().unwrap().insert(mask, r);
        r
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank_mask(self.full_mask())
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, elems: &[usize]) -> usize {
        self.rank_mask(self.mask_of(elems))
    }

    fn closure_mask(&self, mask: u64) -> u64 {
        let r = self.rank_mask(mask);
        let mut out = mask;
        for e in 0..self.ncols {
            if mask >> e & 1 == 0 && self.rank_mask(mask | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    pub fn closure(&self, elems: &[usize]) -> Vec<usize> {
        self.elems_of(self.closure_mask(self.mask_of(elems)))
    }

    pub fn is_flat(&self, elems: &[usize]) -> bool {
        let mask = self.mask_of(elems);
        self.closure_mask(mask) == mask
    }

    /// All flats, grouped by rank (ascending) and within a rank by the
    /// numeric value of the element bitmask. The empty closure comes first,
    /// the full ground set last.
    pub fn flats(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut level: BTreeSet<u64> = BTreeSet::from([self.closure_mask(0)]);
        let top = self.rank();
        for rank_level in 0.. {
            for &f in &level {
                out.push(self.elems_of(f));
            }
            if rank_level == top {
                break;
            }
            let mut next = BTreeSet::new();
            for &f in &level {
                for e in 0..self.ncols {
                    if f >> e & 1 == 0 {
                        next.insert(self.closure_mask(f | 1 << e));
                    }
                }
            }
            level = next;
        }
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&e| self.cols_q[e].iter().all(|x| x.is_zero())).collect()
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        assert!(e < self.ncols);
        self.rank_mask(self.full_mask() & !(1 << e)) + 1 == self.rank()
    }

    pub fn coloops(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&e| self.is_coloop(e)).collect()
    }

    pub fn is_coloop_free(&self) -> bool {
        (0..self.ncols).all(|e| !self.is_coloop(e))
    }

    /// Submatroid on the columns of the flat `F` (order preserved): the
    /// elements "through" the flat, with everything else deleted.
    pub fn localize(&self, flat: &[usize]) -> Result<Matroid, MatroidError> {
        if !self.is_flat(flat) {
            return Err(MatroidError::NotAFlat(flat.to_vec()));
        }
        let rows: Vec<Vec<BigInt>> =
            self.rows.iter().map(|r| flat.iter().map(|&e| r[e].clone()).collect()).collect();
        Ok(Self::new_unchecked(rows, flat.len()))
    }

    /// Quotient by the span of the flat `F`: pivots on the columns of `F`,
    /// drops the pivot rows, and keeps the images of the remaining columns
    /// (parallel images are kept; none can vanish because `F` is closed).
    pub fn restrict_flat(&self, flat: &[usize]) -> Result<Matroid, MatroidError> {
        if !self.is_flat(flat) {
            return Err(MatroidError::NotAFlat(flat.to_vec()));
        }
        let in_flat = self.mask_of(flat);
        let rest: Vec<usize> = (0..self.ncols).filter(|&e| in_flat >> e & 1 == 0).collect();
        let order: Vec<usize> = flat.iter().copied().chain(rest.iter().copied()).collect();
        let reordered: Vec<Vec<BigRational>> = (0..self.rows.len())
            .map(|i| order.iter().map(|&e| self.cols_q[e][i].clone()).collect())
            .collect();
        let (red, pivots) = linalg::rref(&reordered);
        let k = pivots.iter().filter(|&&p| p < flat.len()).count();
        debug_assert_eq!(k, self.rank_of(flat));
        let rows: Vec<Vec<BigInt>> = (k..pivots.len())
            .map(|i| {
                let row: Vec<BigRational> =
                    (flat.len()..order.len()).map(|j| red[i][j].clone()).collect();
                linalg::primitive_integer_vector(&row)
            })
            .collect();
        let out = Self::new_unchecked(rows, rest.len());
        debug_assert!(out.loops().is_empty(), "contraction of a flat cannot create loops");
        Ok(out)
    }

    /// Orthogonal dual: row-reduce to a standard form `[I | A]` (up to column
    /// permutation) and return the matroid of `[-Aᵀ | I]` with columns put
    /// back in the original order. Coloops become loops, so the result may
    /// carry zero columns.
    pub fn dual(&self) -> Matroid {
        let rational: Vec<Vec<BigRational>> = (0..self.rows.len())
            .map(|i| (0..self.ncols).map(|j| self.cols_q[j][i].clone()).collect())
            .collect();
        let (red, pivots) = linalg::rref(&rational);
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let nonpivots: Vec<usize> = (0..self.ncols).filter(|j| !pivot_set.contains(j)).collect();
        let rows: Vec<Vec<BigInt>> = nonpivots
            .iter()
            .map(|&np| {
                let mut row = vec![BigRational::zero(); self.ncols];
                row[np] = BigRational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    row[p] = -red[i][np].clone();
                }
                linalg::primitive_integer_vector(&row)
            })
            .collect();
        Self::new_unchecked(rows, self.ncols)
    }

    /// Whitney rank data: `counts[r][s]` = number of size-`s` subsets of the
    /// ground set with rank `r`. Exponential enumeration, hence capped.
    pub fn rank_size_counts(&self) -> Result<Vec<Vec<BigInt>>, MatroidError> {
        if self.ncols > MAX_ENUMERATION {
            return Err(MatroidError::ScaleExceeded { size: self.ncols, limit: MAX_ENUMERATION });
        }
        let top = self.rank();
        let mut counts = vec![vec![BigInt::zero(); self.ncols + 1]; top + 1];
        let mut ech = Echelon::new();
        self.count_subsets(0, 0, &mut ech, &mut counts);
        Ok(counts)
    }

    fn count_subsets(
        &self,
        next: usize,
        size: usize,
        ech: &mut Echelon,
        counts: &mut [Vec<BigInt>],
    ) {
        if next == self.ncols {
            counts[ech.rank()][size] += 1;
            return;
        }
        self.count_subsets(next + 1, size, ech, counts);
        if ech.insert(&self.cols_q[next]) {
            self.count_subsets(next + 1, size + 1, ech, counts);
            ech.pop();
        } else {
            self.count_subsets(next + 1, size + 1, ech, counts);
        }
    }

    /// Tutte polynomial in variables `x`, `y` by direct corank–nullity
    /// summation: `T = Σ_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}`.
    pub fn tutte_corank_nullity(&self) -> Result<LaurentPolynomial, MatroidError> {
        let counts = self.rank_size_counts()?;
        let top = self.rank();
        let x1 = LaurentPolynomial::var("x") - LaurentPolynomial::one();
        let y1 = LaurentPolynomial::var("y") - LaurentPolynomial::one();
        let mut acc = LaurentPolynomial::zero();
        for (r, row) in counts.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = x1.pow((top - r) as u32) * y1.pow((s - r) as u32);
                acc = acc + term.scale(c.clone());
            }
        }
        Ok(acc)
    }

    /// Tutte polynomial by deletion/contraction with memoization on a
    /// column-sorted row-reduced form of the representation.
    pub fn tutte_deletion_contraction(&self) -> LaurentPolynomial {
        let mut memo: HashMap<Vec<Vec<BigInt>>, LaurentPolynomial> = HashMap::new();
        let cols: Vec<Vec<BigRational>> = self.cols_q.clone();
        tutte_dc(&cols, &mut memo)
    }

    /// Tutte polynomial, dispatching on ground-set size: full enumeration
    /// when feasible, deletion/contraction beyond that.
    pub fn tutte(&self) -> LaurentPolynomial {
        match self.tutte_corank_nullity() {
            Ok(t) => t,
            Err(_) => self.tutte_deletion_contraction(),
        }
    }

    /// Characteristic polynomial `(-1)^r T(1-x, 0)` in the variable `x`.
    pub fn char_poly(&self) -> LaurentPolynomial {
        let t = self.tutte();
        let at_y0 = t.substitute("y", &LaurentPolynomial::zero()).unwrap();
        let one_minus_x = LaurentPolynomial::one() - LaurentPolynomial::var("x");
        let p = at_y0.substitute("x", &one_minus_x).unwrap();
        if self.rank() % 2 == 0 {
            p
        } else {
            -p
        }
    }

    /// Broken-circuit h-polynomial `t^r T(1/t, 0)` in the variable `t`.
    pub fn h_broken_circuit(&self) -> LaurentPolynomial {
        let t = self.tutte();
        let at_y0 = t.substitute("y", &LaurentPolynomial::zero()).unwrap();
        let inv_t = LaurentPolynomial::monomial(&[("t", -1)], 1);
        let sub = at_y0
            .substitute("x", &inv_t)
            .expect("Tutte polynomial has nonnegative exponents");
        sub.shift("t", self.rank() as i64)
    }

    /// True when every square submatrix of the representation has
    /// determinant in {-1, 0, 1}.
    pub fn is_unimodular(&self) -> bool {
        use itertools::Itertools;
        let nr = self.rows.len();
        let one = BigInt::one();
        for k in 1..=nr.min(self.ncols) {
            for row_ix in (0..nr).combinations(k) {
                for col_ix in (0..self.ncols).combinations(k) {
                    let sub: Vec<Vec<BigInt>> = row_ix
                        .iter()
                        .map(|&i| col_ix.iter().map(|&j| self.rows[i][j].clone()).collect())
                        .collect();
                    let d = linalg::det_bareiss(&sub);
                    if d.magnitude() > one.magnitude() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Minimal dependent sets, each sorted, in order of (size, bitmask).
    pub fn circuits(&self) -> Result<Vec<Vec<usize>>, MatroidError> {
        use itertools::Itertools;
        if self.ncols > MAX_CIRCUIT_SEARCH {
            return Err(MatroidError::ScaleExceeded {
                size: self.ncols,
                limit: MAX_CIRCUIT_SEARCH,
            });
        }
        let mut circuit_masks: Vec<u64> = Vec::new();
        let mut out = Vec::new();
        for size in 1..=self.ncols {
            let mut found_at_size: Vec<(u64, Vec<usize>)> = Vec::new();
            for combo in (0..self.ncols).combinations(size) {
                let mask = self.mask_of(&combo);
                if circuit_masks.iter().any(|&c| c & mask == c) {
                    continue;
                }
                if self.rank_mask(mask) < size {
                    found_at_size.push((mask, combo));
                }
            }
            found_at_size.sort_by_key(|(m, _)| *m);
            for (mask, combo) in found_at_size {
                circuit_masks.push(mask);
                out.push(combo);
            }
        }
        Ok(out)
    }
}

/// Deletion/contraction on a list of rational column vectors. The memo key
/// is the primitive-integer row-reduced form with columns sorted, which
/// identifies the matroid up to relabeling.
fn tutte_dc(
    cols: &[Vec<BigRational>],
    memo: &mut HashMap<Vec<Vec<BigInt>>, LaurentPolynomial>,
) -> LaurentPolynomial {
    if cols.is_empty() {
        return LaurentPolynomial::one();
    }
    let key = canonical_key(cols);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let rest: Vec<Vec<BigRational>> = cols[1..].to_vec();
    let result = if cols[0].iter().all(|x| x.is_zero()) {
        LaurentPolynomial::var("y") * tutte_dc(&rest, memo)
    } else {
        let contracted = contract_first(cols);
        let full_rank = rank_of_cols(cols);
        let rest_rank = rank_of_cols(&rest);
        if rest_rank + 1 == full_rank {
            LaurentPolynomial::var("x") * tutte_dc(&contracted, memo)
        } else {
            tutte_dc(&rest, memo) + tutte_dc(&contracted, memo)
        }
    };
    memo.insert(key, result.clone());
    result
}

fn rank_of_cols(cols: &[Vec<BigRational>]) -> usize {
    let mut ech = Echelon::new();
    for c in cols {
        ech.insert(c);
    }
    ech.rank()
}

/// Contract the first column (assumed nonzero): row-reduce with it in front
/// and read off the images of the remaining columns in the quotient.
fn contract_first(cols: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let nrows = cols[0].len();
    let mat: Vec<Vec<BigRational>> =
        (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let (red, pivots) = linalg::rref(&mat);
    debug_assert_eq!(pivots.first(), Some(&0));
    (1..cols.len())
        .map(|j| (1..pivots.len()).map(|i| red[i][j].clone()).collect())
        .collect()
}

fn canonical_key(cols: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    let nrows = cols.first().map_or(0, Vec::len);
    let mat: Vec<Vec<BigRational>> =
        (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let (red, pivots) = linalg::rref(&mat);
    let int_rows: Vec<Vec<BigInt>> =
        (0..pivots.len()).map(|i| linalg::primitive_integer_vector(&red[i])).collect();
    let mut key: Vec<Vec<BigInt>> = (0..cols.len())
        .map(|j| int_rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    key.sort();
    key
}
