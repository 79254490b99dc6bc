//! Integer partitions, dominance order, semistandard tableaux, and the
//! charge statistic. `kostka` computes the one-parameter Kostka polynomial
//! K_{λμ}(t) as the charge generating function over semistandard tableaux of
//! shape λ and content μ; an algebraically independent computation of the
//! same polynomials lives in [`crate::hall_littlewood`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPolynomial;

/// Dominance-interval enumeration filters all partitions of `n`, which grows
/// too fast past this point to stay interactive.
pub const MAX_INTERVAL_SIZE: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions have different sizes ({left} vs {right})")]
    SizeMismatch { left: u32, right: u32 },
    #[error("size {size} exceeds the limit {limit} for this operation")]
    ScaleExceeded { size: u32, limit: u32 },
    #[error("rows must weakly increase and columns strictly increase: {0}")]
    NotSemistandard(String),
    #[error("{lower} is not dominated by {upper}")]
    NotDominated { lower: String, upper: String },
}

/// Weakly decreasing positive integer parts. The empty partition is valid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Normalizes: drops zero parts and sorts descending.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self { parts: vec![1; n as usize] }
    }

    /// The row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Self { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`, the minimal charge-type weight statistic.
    pub fn n_stat(&self) -> i64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as i64 * p as i64).sum()
    }

    /// All partitions of `n` in descending lexicographic order, `(n)` first
    /// and `(1^n)` last. Descending lex refines the dominance order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for first in (1..=max.min(n)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The dominance interval `{ν : lower ⊴ ν ⊴ upper}`, in descending
    /// lexicographic order.
    pub fn interval(lower: &Partition, upper: &Partition) -> Result<Vec<Partition>, PartitionError> {
        let n = check_sizes(lower, upper)?;
        if n > MAX_INTERVAL_SIZE {
            return Err(PartitionError::ScaleExceeded { size: n, limit: MAX_INTERVAL_SIZE });
        }
        Ok(Self::all_of(n)
            .into_iter()
            .filter(|nu| dominance_leq(lower, nu) && dominance_leq(nu, upper))
            .collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts `"3,2,1"`, `"(3,2,1)"`, exponent shorthand `"2^3,1"`, and
    /// `"()"`/`""` for the empty partition.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let (base, count) = match piece.split_once('^') {
                Some((b, c)) => (
                    b.trim().parse::<u32>().map_err(|e| format!("bad part `{piece}`: {e}"))?,
                    c.trim().parse::<u32>().map_err(|e| format!("bad exponent `{piece}`: {e}"))?,
                ),
                None => (piece.parse::<u32>().map_err(|e| format!("bad part `{piece}`: {e}"))?, 1),
            };
            if base == 0 {
                return Err(format!("zero part in `{s}`"));
            }
            for _ in 0..count {
                parts.push(base);
            }
        }
        Ok(Partition::new(parts))
    }
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<u32, PartitionError> {
    let (x, y) = (a.size(), b.size());
    if x != y {
        return Err(PartitionError::SizeMismatch { left: x, right: y });
    }
    Ok(x)
}

/// Dominance order on partitions of equal size: `a ⊴ b` iff every prefix sum
/// of `a` is at most the corresponding prefix sum of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    assert_eq!(a.size(), b.size(), "dominance compares partitions of equal size");
    let rows = a.len().max(b.len());
    let mut sa = 0u64;
    let mut sb = 0u64;
    for i in 0..rows {
        sa += a.part(i) as u64;
        sb += b.part(i) as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// Semistandard Young tableau: rows weakly increase left to right, columns
/// strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let err = |msg: String| PartitionError::NotSemistandard(msg);
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(err(format!("row {i} is empty")));
            }
            if i + 1 < rows.len() && rows[i + 1].len() > row.len() {
                return Err(err(format!("row {} longer than row {i}", i + 1)));
            }
            if row.iter().any(|&x| x == 0) {
                return Err(err(format!("row {i} contains 0")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(err(format!("row {i} not weakly increasing")));
            }
            if i + 1 < rows.len() {
                for (j, &below) in rows[i + 1].iter().enumerate() {
                    if row[j] >= below {
                        return Err(err(format!("column {j} not strictly increasing")));
                    }
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    /// Letter multiplicities `(count of 1, count of 2, ...)` up to the
    /// largest entry.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for &x in self.rows.iter().flatten() {
            counts[x as usize - 1] += 1;
        }
        counts
    }

    /// Reading word: rows bottom to top, each row left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// Charge of a word with partition content.
///
/// Standard subwords are extracted by scanning right to left, cyclically:
/// take the first unused 1, then the first unused 2 strictly after it in the
/// scan, and so on through the largest letter still available. Within a
/// subword the letter 1 gets index 0, and letter i+1 gets the index of i
/// plus one exactly when it sits strictly to the right of i in the original
/// word. The charge is the sum of all indexes over all subwords.
pub fn charge(word: &[u32]) -> u32 {
    let mut counts: Vec<u32> = Vec::new();
    for &x in word {
        assert!(x >= 1, "letters must be positive");
        if counts.len() < x as usize {
            counts.resize(x as usize, 0);
        }
        counts[x as usize - 1] += 1;
    }
    assert!(
        counts.windows(2).all(|w| w[0] >= w[1]),
        "charge requires partition content, got multiplicities {counts:?}"
    );
    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0u32;
    let mut remaining: Vec<u32> = counts.clone();
    while remaining.first().is_some_and(|&c| c > 0) {
        let top = remaining.iter().take_while(|&&c| c > 0).count() as u32;
        // Scan for the 1 from the right end; each later letter continues
        // right-to-left from the previous pick, wrapping cyclically.
        let mut cursor = n;
        let mut index = 0u32;
        let mut prev_pos = usize::MAX;
        for letter in 1..=top {
            let pos = scan_right_to_left(word, &used, cursor, letter)
                .expect("partition content guarantees the next letter exists");
            used[pos] = true;
            remaining[letter as usize - 1] -= 1;
            if letter > 1 && pos > prev_pos {
                index += 1;
            }
            total += index;
            prev_pos = pos;
            cursor = pos;
        }
    }
    total
}

/// First unused occurrence of `letter` strictly before `cursor` in
/// right-to-left reading order, wrapping past the left end to the right end.
fn scan_right_to_left(word: &[u32], used: &[bool], cursor: usize, letter: u32) -> Option<usize> {
    let n = word.len();
    let hit = |p: usize| !used[p] && word[p] == letter;
    (0..cursor).rev().find(|&p| hit(p)).or_else(|| (cursor..n).rev().find(|&p| hit(p)))
}

/// All semistandard tableaux of the given shape and content, enumerated as
/// chains of horizontal strips (the cells holding letters ≤ v always form a
/// partition, and each letter occupies a horizontal strip).
pub fn ssyt(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>, PartitionError> {
    check_sizes(shape, content)?;
    let mut out = Vec::new();
    let start = vec![0u32; shape.len()];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    fill_strips(shape, content.parts(), 0, &start, &mut rows, &mut out);
    Ok(out)
}

fn fill_strips(
    shape: &Partition,
    content: &[u32],
    letter: usize,
    current: &[u32],
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        if (0..shape.len()).all(|i| current[i] == shape.part(i)) {
            let t = Tableau { rows: rows.iter().filter(|r| !r.is_empty()).cloned().collect() };
            debug_assert!(Tableau::new(t.rows.clone()).is_ok());
            out.push(t);
        }
        return;
    }
    // Choose a horizontal strip of size content[letter] on top of `current`:
    // row i may grow from current[i] to at most min(shape_i, current[i-1]),
    // the upper bound keeping columns strict.
    let k = content[letter];
    let nrows = shape.len();
    let mut extend = vec![0u32; nrows];
    strip_choices(shape, current, k, 0, &mut extend, &mut |ext: &[u32]| {
        let mut next = current.to_vec();
        for i in 0..nrows {
            next[i] += ext[i];
            for _ in 0..ext[i] {
                rows[i].push(letter as u32 + 1);
            }
        }
        fill_strips(shape, content, letter + 1, &next, rows, out);
        for i in 0..nrows {
            for _ in 0..ext[i] {
                rows[i].pop();
            }
        }
    });
}

fn strip_choices(
    shape: &Partition,
    current: &[u32],
    remaining: u32,
    row: usize,
    extend: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if row == current.len() {
        if remaining == 0 {
            visit(extend);
        }
        return;
    }
    let cap_shape = shape.part(row);
    // Strip condition: cells added in this row must not sit under cells
    // added in the same pass one row up, so the new right edge stays within
    // the previous edge of the row above.
    let cap_above = if row == 0 { u32::MAX } else { current[row - 1] };
    let max_new = cap_shape.min(cap_above).saturating_sub(current[row]).min(remaining);
    for take in 0..=max_new {
        extend[row] = take;
        strip_choices(shape, current, remaining - take, row + 1, extend, visit);
    }
    extend[row] = 0;
}

/// Kostka polynomial `K_{λμ}(t) = Σ_T t^{charge(T)}` over semistandard
/// tableaux of shape λ and content μ. Zero exactly when μ does not precede λ
/// in dominance order.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<LaurentPolynomial, PartitionError> {
    check_sizes(lambda, mu)?;
    let mut acc = LaurentPolynomial::zero();
    for t in ssyt(lambda, mu)? {
        acc = acc + LaurentPolynomial::monomial(&[("t", charge(&t.reading_word()) as i64)], 1);
    }
    Ok(acc)
}

/// Number of semistandard tableaux of shape λ and content μ (the classical
/// Kostka number, `K_{λμ}(1)`).
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<BigInt, PartitionError> {
    Ok(BigInt::from(ssyt(lambda, mu)?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(p(&[1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::column(3).parts(), &[1, 1, 1]);
        assert_eq!(Partition::empty().size(), 0);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let lam = p(&[4, 2, 1]);
        assert_eq!(lam.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    }

    #[test]
    fn n_stat_values() {
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(Partition::column(4).n_stat(), 6);
        assert_eq!(Partition::row(4).n_stat(), 0);
    }

    #[test]
    fn all_partitions_descending_lex() {
        let got = Partition::all_of(4);
        let expect: Vec<Partition> =
            [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
                .into_iter()
                .map(Partition::new)
                .collect();
        assert_eq!(got, expect);
        assert_eq!(Partition::all_of(6).len(), 11);
        assert_eq!(Partition::all_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn dominance_and_intervals() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])));
        assert!(dominance_leq(&p(&[2, 2, 2]), &p(&[2, 2, 2])));
        // (3,3) and (4,1,1) are incomparable.
        assert!(!dominance_leq(&p(&[3, 3]), &p(&[4, 1, 1])));
        assert!(!dominance_leq(&p(&[4, 1, 1]), &p(&[3, 3])));
        let iv = Partition::interval(&Partition::column(4), &Partition::row(4)).unwrap();
        assert_eq!(iv, Partition::all_of(4));
        let narrow = Partition::interval(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap();
        assert_eq!(narrow, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
        assert!(matches!(
            Partition::interval(&Partition::column(13), &Partition::row(13)),
            Err(PartitionError::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("(2,2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("1^4".parse::<Partition>().unwrap(), Partition::column(4));
        assert_eq!("(2^2,1)".parse::<Partition>().unwrap(), p(&[2, 2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 2]]).is_err());
    }

    #[test]
    fn reading_words() {
        let t = Tableau::new(vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(t.reading_word(), vec![2, 3, 1, 1, 2]);
        assert_eq!(t.shape(), p(&[3, 2]));
        assert_eq!(t.content(), vec![2, 2, 1]);
    }

    #[test]
    fn charge_pinned_values() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(charge(&[2, 2, 1, 1]), 0);
        assert_eq!(charge(&[2, 1, 1]), 0);
        assert_eq!(charge(&[1, 1, 2]), 1);
        assert_eq!(charge(&[3, 4, 1, 2]), 4);
        assert_eq!(charge(&[2, 4, 1, 3]), 2);
        for r in 1..=6u32 {
            let row: Vec<u32> = (1..=r).collect();
            assert_eq!(charge(&row), r * (r - 1) / 2);
        }
    }

    #[test]
    fn ssyt_counts() {
        let count = |l: &[u32], m: &[u32]| ssyt(&p(l), &p(m)).unwrap().len();
        assert_eq!(count(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(count(&[2, 2], &[1, 1, 1, 1]), 2);
        assert_eq!(count(&[3, 1], &[2, 1, 1]), 2);
        assert_eq!(count(&[2, 2], &[2, 1, 1]), 1);
        assert_eq!(count(&[1, 1, 1], &[3]), 0);
        assert_eq!(count(&[3], &[3]), 1);
        // Content must land inside the dominance cone below the shape.
        assert_eq!(count(&[2, 2], &[3, 1]), 0);
    }

    #[test]
    fn kostka_known_polynomials() {
        let t = |e: i64| LaurentPolynomial::monomial(&[("t", e)], 1);
        let k = |l: &[u32], m: &[u32]| kostka(&p(l), &p(m)).unwrap();
        assert_eq!(k(&[2, 1], &[1, 1, 1]), t(1) + t(2));
        assert_eq!(k(&[2, 2], &[1, 1, 1, 1]), t(2) + t(4));
        assert_eq!(k(&[2], &[1, 1]), t(1));
        assert_eq!(k(&[3], &[1, 1, 1]), t(3));
        assert_eq!(k(&[2, 2], &[2, 2]), LaurentPolynomial::one());
        assert_eq!(k(&[2, 2], &[2, 1, 1]), t(1));
        assert!(k(&[2, 2], &[3, 1]).is_zero());
        assert!(matches!(
            kostka(&p(&[2]), &p(&[1, 1, 1])),
            Err(PartitionError::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn kostka_at_one_counts_tableaux() {
        for lam in Partition::all_of(5) {
            for mu in Partition::all_of(5) {
                let poly = kostka(&lam, &mu).unwrap();
                let sum: BigInt = poly.iter_terms().map(|(_, c)| c.clone()).sum();
                assert_eq!(sum, kostka_number(&lam, &mu).unwrap());
            }
        }
    }
}
