//! Verification suites: each suite checks one family of identities across a
//! corpus and reports pass/fail with per-item detail lines.
//!
//! `run_all` fans suites out over worker threads (capped by the
//! `POISSON_POINCARE_THREADS` environment variable) but reports results in
//! the fixed suite order, so output is deterministic.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::coxeter::{build_weyl, character_table, generalized_kostka, CartanType};
use crate::hall_littlewood::kostka_table;
use crate::hypertoric::{self, denham_phi, hypertoric_poincare, q_ih, verify_laplacian};
use crate::laurent::LaurentPolynomial;
use crate::linalg::Echelon;
use crate::matroid::Matroid;
use crate::nilcone::{
    assemble_poincare, conjecture_poincare, hypertoric_strata, strata_from_springer,
    verify_palindromicity, verify_springer_case,
};
use crate::partitions::{kostka, Partition};
use crate::s3::{s3_poincare, S3Pair};

pub const SUITE_NAMES: [&str; 11] = [
    "laplacian",
    "y-one",
    "gale",
    "kostka-oracle",
    "weyl-kostka",
    "cone-pair",
    "rank-two",
    "subregular",
    "palindromicity",
    "regular-rep",
    "properties",
];

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

struct Check {
    passed: bool,
    details: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { passed: true, details: Vec::new() }
    }

    fn item(&mut self, label: impl Into<String>, ok: bool) {
        let label = label.into();
        self.details.push(format!("{} {label}", if ok { "ok " } else { "FAIL" }));
        self.passed &= ok;
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(format!("     {}", line.into()));
    }
}

fn one() -> LaurentPolynomial {
    LaurentPolynomial::one()
}

fn mono(var: &str, e: i64) -> LaurentPolynomial {
    LaurentPolynomial::monomial(&[(var, e)], 1)
}

/// Criterion: the flat-sum route and the Φ-specialization route compute the
/// same two-variable polynomial on every corpus member.
fn suite_laplacian(corpus: &[(String, Matroid)]) -> Check {
    let mut c = Check::new();
    for (name, m) in corpus {
        let report = verify_laplacian(m);
        c.item(
            format!("{name}: direct == via-Φ"),
            report.routes_agree && report.warnings.is_empty(),
        );
    }
    c.note(format!("{} matroids", corpus.len()));
    c
}

/// Count independent subsets by cardinality with a fresh echelon-based
/// depth-first search (independent of the Tutte machinery).
fn independence_f_vector(m: &Matroid) -> Vec<BigInt> {
    fn column(m: &Matroid, j: usize) -> Vec<BigRational> {
        m.matrix().iter().map(|row| BigRational::from_integer(row[j].clone())).collect()
    }
    fn go(m: &Matroid, start: usize, ech: &mut Echelon, counts: &mut Vec<BigInt>) {
        for j in start..m.len() {
            if ech.insert(&column(m, j)) {
                let size = ech.rank();
                if counts.len() <= size {
                    counts.resize(size + 1, BigInt::from(0));
                }
                counts[size] += 1;
                go(m, j + 1, ech, counts);
                ech.pop();
            }
        }
    }
    let mut counts = vec![BigInt::from(1)];
    go(m, 0, &mut Echelon::new(), &mut counts);
    counts
}

/// Criterion: at y = 1 the polynomial collapses to `T(x², 1)`, which equals
/// `x^{2r} h(x⁻²)` for the h-polynomial of the independence complex,
/// rebuilt here from the raw f-vector.
fn suite_y_one(corpus: &[(String, Matroid)]) -> Check {
    let mut c = Check::new();
    for (name, m) in corpus {
        let p = hypertoric_poincare(m);
        let at_y1 = p.substitute("y", &one()).expect("polynomial substitution");
        let tutte_x2 = hypertoric::tutte_at(&m.tutte(), &mono("x", 2), &one());
        let f = independence_f_vector(m);
        let d = m.rank();
        let mut h = LaurentPolynomial::zero();
        let one_minus_t = one() - mono("t", 1);
        for (k, count) in f.iter().enumerate() {
            h = h + mono("t", k as i64).scale(count.clone()) * one_minus_t.pow((d - k) as u32);
        }
        let h_route = h
            .substitute("t", &mono("x", -2))
            .expect("x⁻² is an invertible monomial")
            .shift("x", 2 * d as i64);
        let ok = at_y1 == tutte_x2 && tutte_x2 == h_route;
        c.item(format!("{name}: P|_(y=1) == T(x²,1) == x^2r·h(x⁻²)"), ok);
    }
    c
}

/// Criterion: the degree-zero series matches the dual's intersection
/// cohomology, and dualizing swaps the Tutte variables.
fn suite_gale(corpus: &[(String, Matroid)]) -> Check {
    let mut c = Check::new();
    for (name, m) in corpus {
        let dual = m.dual();
        let direct = hypertoric::tutte_at(&m.tutte(), &LaurentPolynomial::zero(), &mono("y", -2))
            .shift("y", 2 * (m.len() - m.rank()) as i64);
        let via_dual = q_ih(&dual)
            .substitute("x", &LaurentPolynomial::var("y"))
            .expect("variable rename");
        c.item(format!("{name}: p₀ == dual q_ih"), direct == via_dual);
        let swapped = hypertoric::tutte_at(
            &m.tutte(),
            &LaurentPolynomial::var("y"),
            &LaurentPolynomial::var("x"),
        );
        c.item(format!("{name}: T_dual(x,y) == T(y,x)"), dual.tutte() == swapped);
    }
    c
}

/// Criterion: the charge-statistic Kostka polynomials agree with the
/// Hall–Littlewood transition-matrix oracle for every pair of partitions of
/// each size up to 6.
fn suite_kostka_oracle() -> Check {
    let mut c = Check::new();
    for n in 1..=6u32 {
        let table = match kostka_table(n) {
            Ok(t) => t,
            Err(e) => {
                c.item(format!("size {n}: oracle table"), false);
                c.note(e.to_string());
                continue;
            }
        };
        let parts = Partition::all_of(n);
        let mut pairs = 0usize;
        let mut ok = true;
        for lambda in &parts {
            for mu in &parts {
                let charge = kostka(lambda, mu).expect("equal sizes");
                let oracle = table.get(lambda, mu).expect("table covers all pairs");
                ok &= charge == *oracle;
                pairs += 1;
            }
        }
        c.item(format!("size {n}: {pairs} pairs"), ok);
    }
    c
}

/// Criterion: the Weyl-group route to `K_χ` (Molien sums over the
/// coinvariant algebra) agrees with the tableau route `K_{ν,(1^r)}`.
fn suite_weyl_kostka() -> Check {
    let mut c = Check::new();
    for r in 2..=6u32 {
        let w = build_weyl(CartanType::A(r as u8 - 1));
        let table = character_table(&w);
        let mut ok = true;
        for nu in Partition::all_of(r) {
            let row = table.row_for_partition(&nu).expect("rows cover partitions");
            let via_weyl = match generalized_kostka(&w, &row.values) {
                Ok(p) => p,
                Err(e) => {
                    c.note(format!("ν = {nu}: {e}"));
                    ok = false;
                    continue;
                }
            };
            let via_tableaux = kostka(&nu, &Partition::column(r)).expect("equal sizes");
            ok &= via_weyl == via_tableaux;
        }
        c.item(format!("S{r}: all ν"), ok);
    }
    c
}

/// Criterion: the cone polynomial from Weyl-group data equals the pair
/// polynomial for ((r), (1^r)).
fn suite_cone_pair() -> Check {
    let mut c = Check::new();
    for r in 2..=5u32 {
        let w = build_weyl(CartanType::A(r as u8 - 1));
        let table = character_table(&w);
        let ok = match conjecture_poincare(&w, &table) {
            Ok(cone) => {
                let pair = S3Pair::new(Partition::row(r), Partition::column(r))
                    .expect("(r) dominates (1^r)");
                cone == s3_poincare(&pair).expect("small interval")
            }
            Err(_) => false,
        };
        c.item(format!("r = {r}: cone == pair polynomial"), ok);
    }
    c
}

/// Criterion: the B2 and G2 multiplicity tables and h-series match their
/// closed-form values.
fn suite_rank_two() -> Check {
    let mut c = Check::new();
    for ct in [CartanType::B2, CartanType::G2] {
        match verify_springer_case(ct) {
            Ok(report) => {
                c.item(format!("{ct}: K table"), report.kostka_values_ok);
                c.item(format!("{ct}: h series"), report.h_series_ok);
            }
            Err(e) => {
                c.item(format!("{ct}: verification ran"), false);
                c.note(e.to_string());
            }
        }
    }
    c
}

/// Criterion: the subregular slice series, shifted by the orbit dimension,
/// reproduces the surface-singularity series (G2, with B2 alongside).
fn suite_subregular() -> Check {
    let mut c = Check::new();
    for ct in [CartanType::G2, CartanType::B2] {
        match verify_springer_case(ct) {
            Ok(report) => c.item(format!("{ct}: subregular slice"), report.subregular_slice_ok),
            Err(e) => {
                c.item(format!("{ct}: verification ran"), false);
                c.note(e.to_string());
            }
        }
    }
    c
}

/// Criterion: conjugating the partition reflects each multiplicity series
/// up to the orbit-dimension shift, for every character of S2–S6.
fn suite_palindromicity() -> Check {
    let mut c = Check::new();
    for r in 2..=6u32 {
        let ok = verify_palindromicity(r).unwrap_or(false);
        c.item(format!("S{r}: all characters"), ok);
    }
    c
}

/// Criterion: `Σ_χ dim(χ)·K_χ(t)` equals the flag Poincaré polynomial.
fn suite_regular_rep() -> Check {
    let mut c = Check::new();
    let types = [
        CartanType::A(1),
        CartanType::A(2),
        CartanType::A(3),
        CartanType::A(4),
        CartanType::A(5),
        CartanType::B2,
        CartanType::G2,
    ];
    for ct in types {
        let w = build_weyl(ct);
        let table = character_table(&w);
        let ok = crate::coxeter::regular_rep_matches_flag(&w, &table).unwrap_or(false);
        c.item(format!("{ct}: regular representation"), ok);
    }
    c
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPolynomial {
    let vars = ["x", "y", "z"];
    let n_terms = rng.gen_range(0..=4);
    let mut p = LaurentPolynomial::zero();
    for _ in 0..n_terms {
        let coef = rng.gen_range(-9..=9);
        let powers: Vec<(&str, i64)> =
            vars.iter().map(|&v| (v, rng.gen_range(-3..=3))).collect();
        p = p + LaurentPolynomial::monomial(&powers, coef);
    }
    p
}

fn ring_laws(cases: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let a = random_laurent(&mut rng);
        let b = random_laurent(&mut rng);
        let c = random_laurent(&mut rng);
        let assoc_add = (a.add_ref(&b)).add_ref(&c) == a.add_ref(&b.add_ref(&c));
        let comm_add = a.add_ref(&b) == b.add_ref(&a);
        let assoc_mul = (a.mul_ref(&b)).mul_ref(&c) == a.mul_ref(&b.mul_ref(&c));
        let comm_mul = a.mul_ref(&b) == b.mul_ref(&a);
        let distrib = a.mul_ref(&b.add_ref(&c)) == a.mul_ref(&b).add_ref(&a.mul_ref(&c));
        let inverse = a.add_ref(&a.neg_ref()).is_zero();
        let unit = a.mul_ref(&LaurentPolynomial::one()) == a;
        if !(assoc_add && comm_add && assoc_mul && comm_mul && distrib && inverse && unit) {
            return false;
        }
    }
    true
}

fn submodularity(m: &Matroid, rng: &mut ChaCha8Rng, samples: usize) -> bool {
    let n = m.len();
    for _ in 0..samples {
        let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> {
            (0..n).filter(|_| rng.gen_bool(0.5)).collect()
        };
        let a = pick(rng);
        let b = pick(rng);
        let union: Vec<usize> = (0..n).filter(|e| a.contains(e) || b.contains(e)).collect();
        let inter: Vec<usize> = (0..n).filter(|e| a.contains(e) && b.contains(e)).collect();
        if m.rank_of(&union) + m.rank_of(&inter) > m.rank_of(&a) + m.rank_of(&b) {
            return false;
        }
    }
    true
}

/// Count subsets that are independent and contain no broken circuit under
/// the given element ordering, by cardinality.
fn nbc_counts(m: &Matroid, order: &[usize]) -> Vec<BigInt> {
    let circuits = m.circuits().expect("small ground set");
    let position: Vec<usize> = {
        let mut pos = vec![0; order.len()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        pos
    };
    let broken: Vec<Vec<usize>> = circuits
        .iter()
        .map(|c| {
            let min = *c.iter().min_by_key(|&&e| position[e]).expect("circuits are nonempty");
            c.iter().copied().filter(|&e| e != min).collect()
        })
        .collect();
    let n = m.len();
    let mut counts = vec![BigInt::from(0); m.rank() + 1];
    for mask in 0u64..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&e| mask >> e & 1 == 1).collect();
        if m.rank_of(&set) < set.len() {
            continue;
        }
        if broken.iter().any(|b| b.iter().all(|e| set.contains(e))) {
            continue;
        }
        counts[set.len()] += 1;
    }
    counts
}

/// Absolute values of the characteristic polynomial's coefficients, indexed
/// so that entry k matches the count of no-broken-circuit sets of size k.
fn char_coefficient_magnitudes(m: &Matroid) -> Vec<BigInt> {
    let chi = m.char_poly();
    let r = m.rank();
    (0..=r)
        .map(|k| {
            let exps = vec![(r - k) as i64];
            chi.iter_terms()
                .find(|(e, _)| *e == exps.as_slice())
                .map(|(_, c)| if c.sign() == num_bigint::Sign::Minus { -c } else { c.clone() })
                .unwrap_or_else(|| BigInt::from(0))
        })
        .collect()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// Randomized and exhaustive structural properties: ring laws, rank
/// submodularity, ordering-independence of broken-circuit counts, agreement
/// of the two Tutte routes, the flat-sum convolution identity, double
/// duality, and both stratum assemblies.
fn suite_properties(corpus: &[(String, Matroid)]) -> Check {
    let mut c = Check::new();
    let seed = 0x5eed_cafe;

    c.item("ring laws, 10000 random triples", ring_laws(10_000, seed));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
    for (name, m) in corpus.iter().filter(|(_, m)| m.len() <= 12) {
        c.item(format!("{name}: rank submodularity"), submodularity(m, &mut rng, 200));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
    for (name, m) in corpus.iter().filter(|(_, m)| m.len() <= 8) {
        let expected = char_coefficient_magnitudes(m);
        let n = m.len();
        let orderings: Vec<Vec<usize>> = if n <= 6 {
            all_permutations(n)
        } else {
            (0..1000)
                .map(|_| {
                    let mut p: Vec<usize> = (0..n).collect();
                    for i in (1..n).rev() {
                        p.swap(i, rng.gen_range(0..=i));
                    }
                    p
                })
                .collect()
        };
        let total = orderings.len();
        let ok = orderings.into_iter().all(|ord| nbc_counts(m, &ord) == expected);
        c.item(
            format!("{name}: broken-circuit counts over {total} orderings == |χ| coefficients"),
            ok,
        );
    }

    for (name, m) in corpus.iter().filter(|(_, m)| m.len() <= 12) {
        let ok = match m.tutte_corank_nullity() {
            Ok(direct) => direct == m.tutte_deletion_contraction(),
            Err(_) => false,
        };
        c.item(format!("{name}: Tutte enumeration == deletion/contraction"), ok);
    }

    for (name, m) in corpus {
        let phi = denham_phi(m);
        let collapsed = phi
            .substitute("x", &(LaurentPolynomial::var("x") + one()))
            .and_then(|p| p.substitute("y", &(LaurentPolynomial::var("y") + one())))
            .and_then(|p| p.substitute("b", &one()))
            .expect("polynomial substitutions");
        c.item(format!("{name}: Φ(x+1,y+1,1) == T(x,y)"), collapsed == m.tutte());

        let dd = m.dual().dual();
        let mut same_ranks = dd.len() == m.len() && dd.rank() == m.rank();
        if same_ranks && m.len() <= 8 {
            for mask in 0u64..(1 << m.len()) {
                let set: Vec<usize> = (0..m.len()).filter(|&e| mask >> e & 1 == 1).collect();
                if m.rank_of(&set) != dd.rank_of(&set) {
                    same_ranks = false;
                    break;
                }
            }
        }
        c.item(
            format!("{name}: double dual preserves the rank function"),
            same_ranks && dd.tutte() == m.tutte(),
        );

        let strata_ok = hypertoric_strata(m)
            .ok()
            .and_then(|s| assemble_poincare(&s).ok())
            .map(|assembled| assembled == hypertoric_poincare(m))
            .unwrap_or(false);
        c.item(format!("{name}: strata assemble to the polynomial"), strata_ok);
    }

    for ct in [CartanType::A(2), CartanType::B2, CartanType::G2] {
        let w = build_weyl(ct);
        let table = character_table(&w);
        let ok = strata_from_springer(&w, &table)
            .and_then(|s| assemble_poincare(&s))
            .and_then(|assembled| Ok(assembled == conjecture_poincare(&w, &table)?))
            .unwrap_or(false);
        c.item(format!("{ct}: orbit strata assemble to the cone polynomial"), ok);
    }
    c
}

/// Run one suite by name over the given matroid corpus.
pub fn run_suite(name: &str, corpus: &[(String, Matroid)]) -> Option<SuiteOutcome> {
    let static_name = SUITE_NAMES.iter().find(|&&n| n == name)?;
    let start = Instant::now();
    let check = match *static_name {
        "laplacian" => suite_laplacian(corpus),
        "y-one" => suite_y_one(corpus),
        "gale" => suite_gale(corpus),
        "kostka-oracle" => suite_kostka_oracle(),
        "weyl-kostka" => suite_weyl_kostka(),
        "cone-pair" => suite_cone_pair(),
        "rank-two" => suite_rank_two(),
        "subregular" => suite_subregular(),
        "palindromicity" => suite_palindromicity(),
        "regular-rep" => suite_regular_rep(),
        "properties" => suite_properties(corpus),
        _ => unreachable!("name filtered above"),
    };
    Some(SuiteOutcome {
        name: static_name,
        passed: check.passed,
        details: check.details,
        elapsed: start.elapsed(),
    })
}

fn thread_cap() -> usize {
    std::env::var("POISSON_POINCARE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .min(SUITE_NAMES.len())
}

/// Run every suite, fanning out over up to `POISSON_POINCARE_THREADS`
/// workers; results come back in the fixed suite order.
pub fn run_all(corpus: &[(String, Matroid)]) -> Vec<SuiteOutcome> {
    let threads = thread_cap();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<SuiteOutcome>>> =
        Mutex::new(vec![None; SUITE_NAMES.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= SUITE_NAMES.len() {
                    break;
                }
                let outcome = run_suite(SUITE_NAMES[i], corpus).expect("known name");
                slots.lock().expect("no poisoned workers")[i] = Some(outcome);
            });
        }
    });
    slots
        .into_inner()
        .expect("workers joined")
        .into_iter()
        .map(|o| o.expect("every suite ran"))
        .collect()
}

/// The default corpus used by `verify` when no override is given.
pub fn default_corpus() -> Vec<(String, Matroid)> {
    corpus::default_corpus()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_corpus() -> Vec<(String, Matroid)> {
        ["graphic:cycle_3", "graphic:K4", "dual:graphic:K4"]
            .iter()
            .map(|s| corpus::load_matroid(s).unwrap())
            .collect()
    }

    #[test]
    fn suite_names_resolve() {
        let corpus = small_corpus();
        for name in SUITE_NAMES {
            assert!(run_suite(name, &corpus).is_some(), "{name}");
        }
        assert!(run_suite("nope", &corpus).is_none());
    }

    #[test]
    fn matroid_suites_pass_on_small_corpus() {
        let corpus = small_corpus();
        for name in ["laplacian", "y-one", "gale"] {
            let outcome = run_suite(name, &corpus).unwrap();
            assert!(outcome.passed, "{name}: {:#?}", outcome.details);
        }
    }

    #[test]
    fn nbc_counts_match_on_the_three_point_line() {
        let (_, m) = corpus::load_matroid("graphic:cycle_3").unwrap();
        let expected = char_coefficient_magnitudes(&m);
        assert_eq!(expected, vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)]);
        for order in all_permutations(3) {
            assert_eq!(nbc_counts(&m, &order), expected);
        }
    }

    #[test]
    fn f_vector_of_the_three_point_line() {
        let (_, m) = corpus::load_matroid("graphic:cycle_3").unwrap();
        assert_eq!(
            independence_f_vector(&m),
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(3)]
        );
    }

    #[test]
    fn ring_law_sample() {
        assert!(ring_laws(200, 7));
    }
}
