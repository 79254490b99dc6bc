//! Finite Weyl groups of types A1–A5, B2, G2 as explicit integer matrix
//! groups on the root lattice, their ordinary character tables, and exact
//! graded multiplicities in the coinvariant algebra via Molien sums.
//!
//! Type A character tables come from the Murnaghan–Nakayama rule on cycle
//! types; B2 and G2 are dihedral, where four linear characters (cut out by
//! long/short reflection parities) and one or two two-dimensional
//! reflection-type characters exhaust the table.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::{LaurentPolynomial, RationalFunction};
use crate::linalg;
use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unsupported Cartan type `{0}`; expected A1..A5, B2, or G2")]
    UnsupportedType(String),
    #[error("graded multiplicity did not reduce to a polynomial")]
    NonPolynomialResult,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(u8),
    B2,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) => n as usize,
            CartanType::B2 | CartanType::G2 => 2,
        }
    }

    /// Degrees of the fundamental invariants.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            CartanType::A(n) => (2..=n as u32 + 1).collect(),
            CartanType::B2 => vec![2, 4],
            CartanType::G2 => vec![2, 6],
        }
    }

    pub fn order(self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    pub fn num_reflections(self) -> usize {
        self.degrees().iter().map(|&d| d as usize - 1).sum()
    }

    /// Simple reflection matrices on the root lattice; `mat[r][c]`, column j
    /// holding the image of the j-th simple root. For B2 and G2 the first
    /// generator is the reflection in the long simple root.
    pub fn generators(self) -> Vec<Mat> {
        match self {
            CartanType::A(n) => {
                let n = n as usize;
                (0..n)
                    .map(|i| {
                        let mut m = identity(n);
                        m[i][i] = -1;
                        if i > 0 {
                            m[i][i - 1] = 1;
                        }
                        if i + 1 < n {
                            m[i][i + 1] = 1;
                        }
                        m
                    })
                    .collect()
            }
            CartanType::B2 => vec![
                vec![vec![-1, 1], vec![0, 1]],
                vec![vec![1, 0], vec![2, -1]],
            ],
            CartanType::G2 => vec![
                vec![vec![-1, 1], vec![0, 1]],
                vec![vec![1, 0], vec![3, -1]],
            ],
        }
    }
}

impl FromStr for CartanType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, CoxeterError> {
        let norm = s.trim().to_uppercase();
        match norm.as_str() {
            "B2" => Ok(CartanType::B2),
            "G2" => Ok(CartanType::G2),
            _ => {
                if let Some(n) = norm.strip_prefix('A').and_then(|d| d.parse::<u8>().ok()) {
                    if (1..=5).contains(&n) {
                        return Ok(CartanType::A(n));
                    }
                }
                Err(CoxeterError::UnsupportedType(s.to_string()))
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B2 => write!(f, "B2"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

pub type Mat = Vec<Vec<i64>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn trace(m: &Mat) -> i64 {
    (0..m.len()).map(|i| m[i][i]).sum()
}

/// A fully enumerated Weyl group. Element 0 is the identity; conjugacy class
/// 0 is the identity class. Classes are discovered in element-index order,
/// so the layout is deterministic.
pub struct WeylGroup {
    pub cartan_type: CartanType,
    pub elements: Vec<Mat>,
    /// A shortest generator word reaching each element (BFS order).
    pub words: Vec<Vec<usize>>,
    pub index: HashMap<Mat, usize>,
    /// Conjugacy classes as sorted element-index lists.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Type A only: the permutation of `0..=n` realized by each element.
    perms: Option<Vec<Vec<u8>>>,
    /// B2/G2 only: (long, short) generator counts mod 2 per element.
    parities: Option<Vec<(u8, u8)>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn class_rep(&self, c: usize) -> &Mat {
        &self.elements[self.classes[c][0]]
    }

    /// Determinant of an element (sign character), from word parity.
    pub fn det(&self, element: usize) -> i64 {
        if self.words[element].len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type of the class representative (type A only).
    pub fn class_cycle_type(&self, c: usize) -> Option<Partition> {
        let perms = self.perms.as_ref()?;
        Some(cycle_type(&perms[self.classes[c][0]]))
    }

    fn class_parity(&self, c: usize) -> Option<(u8, u8)> {
        self.parities.as_ref().map(|p| p[self.classes[c][0]])
    }

    /// Human-readable class label: cycle type in type A, a shortest word in
    /// the rank-two types.
    pub fn class_label(&self, c: usize) -> String {
        if let Some(ct) = self.class_cycle_type(c) {
            return ct.to_string();
        }
        let word = &self.words[self.classes[c][0]];
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|&i| format!("s{}", i + 1)).collect::<Vec<_>>().join("*")
        }
    }
}

fn cycle_type(perm: &[u8]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            len += 1;
            p = perm[p] as usize;
        }
        cycles.push(len);
    }
    Partition::new(cycles)
}

/// Enumerate the group by breadth-first closure over the generators and
/// split it into conjugacy classes. Panics if the structural invariants
/// (group order, involutive generators, reflection count) fail, since those
/// would mean the generator matrices are wrong.
pub fn build_weyl(cartan_type: CartanType) -> WeylGroup {
    let gens = cartan_type.generators();
    let rank = cartan_type.rank();
    for g in &gens {
        assert_eq!(mat_mul(g, g), identity(rank), "generators must be involutions");
    }
    let type_a_points = match cartan_type {
        CartanType::A(n) => Some(n as usize + 1),
        _ => None,
    };
    let gen_perms: Option<Vec<Vec<u8>>> = type_a_points.map(|pts| {
        (0..pts - 1)
            .map(|i| {
                let mut p: Vec<u8> = (0..pts as u8).collect();
                p.swap(i, i + 1);
                p
            })
            .collect()
    });

    let mut elements = vec![identity(rank)];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index = HashMap::from([(identity(rank), 0usize)]);
    let mut perms: Option<Vec<Vec<u8>>> =
        type_a_points.map(|pts| vec![(0..pts as u8).collect()]);
    let mut parities: Option<Vec<(u8, u8)>> = match cartan_type {
        CartanType::B2 | CartanType::G2 => Some(vec![(0, 0)]),
        _ => None,
    };

    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &g in &frontier {
            for (i, s) in gens.iter().enumerate() {
                let product = mat_mul(&elements[g], s);
                if index.contains_key(&product) {
                    continue;
                }
                let id = elements.len();
                index.insert(product.clone(), id);
                let mut word = words[g].clone();
                word.push(i);
                words.push(word);
                if let (Some(all), Some(gp)) = (&mut perms, &gen_perms) {
                    let parent = all[g].clone();
                    all.push(gp[i].iter().map(|&k| parent[k as usize]).collect());
                }
                if let Some(all) = &mut parities {
                    let (mut a, mut b) = all[g];
                    if i == 0 {
                        a ^= 1;
                    } else {
                        b ^= 1;
                    }
                    all.push((a, b));
                }
                elements.push(product);
                next.push(id);
            }
        }
        frontier = next;
    }

    assert_eq!(elements.len() as u64, cartan_type.order(), "group order mismatch");
    let reflections = elements
        .iter()
        .filter(|m| {
            let shifted: Vec<Vec<BigInt>> = (0..rank)
                .map(|i| (0..rank).map(|j| BigInt::from(m[i][j] - i64::from(i == j))).collect())
                .collect();
            linalg::rank_int(&shifted) == 1
        })
        .count();
    assert_eq!(reflections, cartan_type.num_reflections(), "reflection count mismatch");

    let n = elements.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut orbit = vec![start];
        class_of[start] = id;
        let mut stack = vec![start];
        while let Some(g) = stack.pop() {
            for s in &gens {
                let conj = mat_mul(s, &mat_mul(&elements[g], s));
                let c = index[&conj];
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    orbit.push(c);
                    stack.push(c);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }

    WeylGroup { cartan_type, elements, words, index, classes, class_of, perms, parities }
}

#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub name: String,
    /// For type A, the indexing partition.
    pub partition: Option<Partition>,
    /// Values per conjugacy class, aligned with `WeylGroup::classes`.
    pub values: Vec<i64>,
}

impl CharacterRow {
    /// Dimension: the value on the identity class.
    pub fn dim(&self) -> i64 {
        self.values[0]
    }
}

pub struct CharacterTable {
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub rows: Vec<CharacterRow>,
}

impl CharacterTable {
    pub fn row(&self, name: &str) -> Option<&CharacterRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn row_for_partition(&self, nu: &Partition) -> Option<&CharacterRow> {
        self.rows.iter().find(|r| r.partition.as_ref() == Some(nu))
    }

    /// First and second orthogonality plus the sum-of-squares count; any
    /// failure means the table is wrong.
    pub fn is_orthogonal(&self, group_order: usize) -> bool {
        let k = self.class_sizes.len();
        let dims_sq: i64 = self.rows.iter().map(|r| r.dim() * r.dim()).sum();
        if dims_sq != group_order as i64 {
            return false;
        }
        for a in 0..self.rows.len() {
            for b in 0..self.rows.len() {
                let inner: i64 = (0..k)
                    .map(|c| self.class_sizes[c] as i64 * self.rows[a].values[c] * self.rows[b].values[c])
                    .sum();
                let expected = if a == b { group_order as i64 } else { 0 };
                if inner != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Murnaghan–Nakayama evaluation of χ_λ on cycle type ρ, via beta-sets:
/// removing a border strip of size k is moving one beta number down by k,
/// with sign given by the beta numbers jumped over.
fn murnaghan_nakayama(
    lambda: &[u32],
    rho: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if rho.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let m = lambda.len();
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + (m - 1 - i) as u32).collect();
    let k = rho[0];
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| b - k < c && c < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next_beta = beta.clone();
        next_beta[pos] = b - k;
        next_beta.sort_unstable_by(|a, b| b.cmp(a));
        let next_lambda: Vec<u32> = next_beta
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (m - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * murnaghan_nakayama(&next_lambda, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Full ordinary character table. Type A rows are indexed by partitions of
/// n+1 in descending lexicographic order; B2/G2 rows are the four linear
/// characters followed by the reflection character(s).
pub fn character_table(w: &WeylGroup) -> CharacterTable {
    let k = w.num_classes();
    let class_labels: Vec<String> = (0..k).map(|c| w.class_label(c)).collect();
    let class_sizes: Vec<usize> = (0..k).map(|c| w.class_size(c)).collect();
    let rows = match w.cartan_type {
        CartanType::A(n) => {
            let cycle_types: Vec<Partition> =
                (0..k).map(|c| w.class_cycle_type(c).expect("type A tracks permutations")).collect();
            let mut memo = HashMap::new();
            let mut rows = Vec::new();
            for nu in Partition::all_of(n as u32 + 1) {
                let values: Vec<i64> = cycle_types
                    .iter()
                    .map(|rho| murnaghan_nakayama(nu.parts(), rho.parts(), &mut memo))
                    .collect();
                rows.push(CharacterRow { name: nu.to_string(), partition: Some(nu), values });
            }
            rows
        }
        CartanType::B2 | CartanType::G2 => {
            let parities: Vec<(u8, u8)> =
                (0..k).map(|c| w.class_parity(c).expect("rank-two types track parities")).collect();
            let dets: Vec<i64> = (0..k).map(|c| w.det(w.classes[c][0])).collect();
            let traces: Vec<i64> = (0..k).map(|c| trace(w.class_rep(c))).collect();
            let sgn_long: Vec<i64> =
                parities.iter().map(|&(a, _)| if a == 0 { 1 } else { -1 }).collect();
            let sgn_short: Vec<i64> =
                parities.iter().map(|&(_, b)| if b == 0 { 1 } else { -1 }).collect();
            let mut rows = vec![
                CharacterRow { name: "triv".into(), partition: None, values: vec![1; k] },
                CharacterRow { name: "sgn".into(), partition: None, values: dets },
                CharacterRow { name: "sgn_short".into(), partition: None, values: sgn_short.clone() },
                CharacterRow { name: "sgn_long".into(), partition: None, values: sgn_long },
                CharacterRow { name: "refl".into(), partition: None, values: traces.clone() },
            ];
            if w.cartan_type == CartanType::G2 {
                let twisted: Vec<i64> =
                    traces.iter().zip(&sgn_short).map(|(t, s)| t * s).collect();
                rows.push(CharacterRow { name: "refl_twist".into(), partition: None, values: twisted });
            }
            rows
        }
    };
    let table = CharacterTable { class_labels, class_sizes, rows };
    assert!(table.is_orthogonal(w.order()), "character table failed orthogonality");
    if let CartanType::A(_) = w.cartan_type {
        let k_range = 0..k;
        let triv = &table.rows[0];
        assert!(triv.values.iter().all(|&v| v == 1));
        let sign_row = table.rows.last().unwrap();
        let trace_row = &table.rows[1];
        for c in k_range {
            assert_eq!(sign_row.values[c], w.det(w.classes[c][0]), "sign row mismatch");
            assert_eq!(trace_row.values[c], trace(w.class_rep(c)), "reflection row mismatch");
        }
    }
    table
}

/// Determinant of a square polynomial matrix by Laplace expansion (ranks
/// here are at most 5).
fn poly_det(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = LaurentPolynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPolynomial>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let cofactor = m[0][j].mul_ref(&poly_det(&minor));
        det = if j % 2 == 0 { det + cofactor } else { det - cofactor };
    }
    det
}

fn det_one_minus_q(m: &Mat) -> LaurentPolynomial {
    let n = m.len();
    let entries: Vec<Vec<LaurentPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = LaurentPolynomial::monomial(&[("q", 1)], -m[i][j]);
                    if i == j {
                        e = e + LaurentPolynomial::one();
                    }
                    e
                })
                .collect()
        })
        .collect();
    poly_det(&entries)
}

/// Graded multiplicity of the character in the coinvariant algebra:
/// `m_χ(q) = Π_i (1 - q^{d_i}) · |W|⁻¹ Σ_w χ(w) / det(1 - q w)`,
/// accumulated per conjugacy class and reduced exactly.
pub fn coinvariant_multiplicity(
    w: &WeylGroup,
    chi: &[i64],
) -> Result<LaurentPolynomial, CoxeterError> {
    assert_eq!(chi.len(), w.num_classes(), "one character value per class");
    let mut sum = RationalFunction::zero();
    for (c, class) in w.classes.iter().enumerate() {
        if chi[c] == 0 {
            continue;
        }
        let weight = BigInt::from(class.len() as i64 * chi[c]);
        let den = det_one_minus_q(w.class_rep(c));
        let term = RationalFunction::new(LaurentPolynomial::constant(weight), den)
            .expect("det(1 - q w) has constant term 1");
        sum = sum.add(&term);
    }
    let invariants = w
        .cartan_type
        .degrees()
        .iter()
        .fold(LaurentPolynomial::one(), |acc, &d| {
            acc * (LaurentPolynomial::one() - LaurentPolynomial::monomial(&[("q", d as i64)], 1))
        });
    let combined = sum.mul(&RationalFunction::from_poly(invariants));
    let poly = combined.into_polynomial("q").map_err(|_| CoxeterError::NonPolynomialResult)?;
    poly.div_scalar_exact(&BigInt::from(w.order() as u64))
        .map_err(|_| CoxeterError::NonPolynomialResult)
}

/// `K_χ(t)`: the graded multiplicity of `χ ⊗ sgn` in the coinvariant
/// algebra, in the variable `t`.
pub fn generalized_kostka(w: &WeylGroup, chi: &[i64]) -> Result<LaurentPolynomial, CoxeterError> {
    let twisted: Vec<i64> = (0..w.num_classes())
        .map(|c| chi[c] * w.det(w.classes[c][0]))
        .collect();
    let m = coinvariant_multiplicity(w, &twisted)?;
    Ok(m.substitute("q", &LaurentPolynomial::var("t")).expect("variable rename"))
}

/// Decomposing the coinvariant algebra as the regular representation:
/// `Σ_χ dim(χ) · K_χ(t)` must equal the flag Poincaré polynomial.
pub fn regular_rep_matches_flag(
    w: &WeylGroup,
    table: &CharacterTable,
) -> Result<bool, CoxeterError> {
    let mut sum = LaurentPolynomial::zero();
    for row in &table.rows {
        sum = sum + generalized_kostka(w, &row.values)?.scale(row.dim());
    }
    Ok(sum == flag_poincare(w.cartan_type))
}

/// Poincaré polynomial of the flag variety: `Π_i (1 + t + … + t^{d_i - 1})`.
pub fn flag_poincare(cartan_type: CartanType) -> LaurentPolynomial {
    cartan_type.degrees().iter().fold(LaurentPolynomial::one(), |acc, &d| {
        let bracket = (0..d as i64).fold(LaurentPolynomial::zero(), |s, e| {
            s + LaurentPolynomial::monomial(&[("t", e)], 1)
        });
        acc * bracket
    })
}
