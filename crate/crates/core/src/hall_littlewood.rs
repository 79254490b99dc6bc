//! Kostka polynomials by a route independent of tableaux and charge.
//!
//! For r variables, expand `Φ_r = Π_{i<j} (x_i - t x_j)` once. For each
//! partition μ of r, the antisymmetrization of `x^μ Φ_r` decomposes over the
//! alternants `a_β` (β strictly decreasing): a term `c · x^α` with distinct
//! exponents contributes `±c` to `a_β`, β the descending sort of α, with the
//! sign of the sorting permutation; terms with repeated exponents cancel.
//! Dividing by the Vandermonde alternant turns `a_β` into the Schur function
//! `s_{β-δ}`, so after exact division by `v_μ(t) = Π_i [m_i]_t!` (m_i the
//! multiplicity of i among the parts of μ padded with zeros to length r)
//! this yields the transition matrix B with `P_μ = Σ_κ B[κ][μ] s_κ`. B is
//! unitriangular for the dominance order, and inverting it by
//! back-substitution gives the Kostka matrix `K` with `s_λ = Σ_μ K[λ][μ] P_μ`.
//!
//! No monomial-basis expansion, no tableaux, and no charge statistic are
//! involved, which makes this a genuinely independent cross-check of
//! [`crate::partitions::kostka`].

use std::collections::HashMap;

use crate::laurent::LaurentPolynomial;
use crate::partitions::{dominance_leq, Partition, PartitionError};

/// The expansion of `Φ_r` has up to `2^(r choose 2)` raw terms.
pub const MAX_RANK: u32 = 8;

/// Kostka polynomials for all pairs of partitions of `r`, indexed by the
/// descending-lex order of [`Partition::all_of`].
pub struct KostkaTable {
    pub partitions: Vec<Partition>,
    /// `k[i][j] = K_{λ_i λ_j}(t)`.
    pub k: Vec<Vec<LaurentPolynomial>>,
}

impl KostkaTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentPolynomial> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == mu)?;
        Some(&self.k[i][j])
    }
}

/// `Π_{i<j} (x_i - t x_j)` as a map from x-exponent vectors to coefficients
/// in t.
fn phi_expansion(r: usize) -> HashMap<Vec<u8>, LaurentPolynomial> {
    let mut terms: HashMap<Vec<u8>, LaurentPolynomial> = HashMap::new();
    terms.insert(vec![0u8; r], LaurentPolynomial::one());
    let minus_t = LaurentPolynomial::monomial(&[("t", 1)], -1);
    for i in 0..r {
        for j in i + 1..r {
            let mut next: HashMap<Vec<u8>, LaurentPolynomial> = HashMap::new();
            for (exp, coef) in &terms {
                let mut with_i = exp.clone();
                with_i[i] += 1;
                let entry = next.entry(with_i).or_insert_with(LaurentPolynomial::zero);
                *entry = entry.add_ref(coef);
                let mut with_j = exp.clone();
                with_j[j] += 1;
                let entry = next.entry(with_j).or_insert_with(LaurentPolynomial::zero);
                *entry = entry.add_ref(&coef.mul_ref(&minus_t));
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
    }
    terms
}

/// Parity of the permutation sorting `alpha` (distinct entries) into
/// descending order: the number of out-of-order pairs.
fn descending_sort_sign(alpha: &[u8]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            if alpha[i] < alpha[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `[m]_t! = Π_{k=1..m} (1 + t + … + t^{k-1})`.
fn t_factorial(m: usize) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for k in 2..=m {
        let bracket = (0..k).fold(LaurentPolynomial::zero(), |s, e| {
            s + LaurentPolynomial::monomial(&[("t", e as i64)], 1)
        });
        acc = acc * bracket;
    }
    acc
}

fn v_mu(mu: &Partition, r: usize) -> LaurentPolynomial {
    let mut multiplicity: HashMap<u32, usize> = HashMap::new();
    for i in 0..r {
        *multiplicity.entry(mu.part(i)).or_insert(0) += 1;
    }
    multiplicity.values().fold(LaurentPolynomial::one(), |acc, &m| acc * t_factorial(m))
}

pub fn kostka_table(r: u32) -> Result<KostkaTable, PartitionError> {
    if r > MAX_RANK {
        return Err(PartitionError::ScaleExceeded { size: r, limit: MAX_RANK });
    }
    let partitions = Partition::all_of(r);
    let n = partitions.len();
    let rr = r as usize;
    let phi = phi_expansion(rr);
    let index: HashMap<&Partition, usize> =
        partitions.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // b[kappa][mu]: Schur expansion coefficients of the μ-th function.
    let mut b = vec![vec![LaurentPolynomial::zero(); n]; n];
    for (mu_idx, mu) in partitions.iter().enumerate() {
        let shift: Vec<u8> = (0..rr).map(|i| mu.part(i) as u8).collect();
        let mut by_kappa: HashMap<Partition, LaurentPolynomial> = HashMap::new();
        for (exp, coef) in &phi {
            let alpha: Vec<u8> = exp.iter().zip(&shift).map(|(e, s)| e + s).collect();
            let mut sorted = alpha.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let kappa = Partition::new(
                sorted
                    .iter()
                    .enumerate()
                    .map(|(k, &beta)| beta as u32 - (rr - 1 - k) as u32)
                    .collect(),
            );
            let signed = if descending_sort_sign(&alpha) == 1 { coef.clone() } else { coef.neg_ref() };
            let entry = by_kappa.entry(kappa).or_insert_with(LaurentPolynomial::zero);
            *entry = entry.add_ref(&signed);
        }
        let v = v_mu(mu, rr);
        for (kappa, c) in by_kappa {
            if c.is_zero() {
                continue;
            }
            let quotient = c
                .div_exact_univariate(&v, "t")
                .expect("alternant coefficients divide exactly by v_mu");
            b[index[&kappa]][mu_idx] = quotient;
        }
        assert!(b[mu_idx][mu_idx].is_one(), "transition matrix must have unit diagonal");
        for (kappa_idx, kappa) in partitions.iter().enumerate() {
            if !dominance_leq(kappa, mu) {
                assert!(
                    b[kappa_idx][mu_idx].is_zero(),
                    "transition matrix must be dominance-triangular"
                );
            }
        }
    }

    // Back-substitution: K[λ][λ] = 1 and, walking κ down the lex list,
    // K[λ][κ] = -Σ_{κ ◁ μ ⊴ λ} B[κ][μ] K[λ][μ].
    let mut k = vec![vec![LaurentPolynomial::zero(); n]; n];
    for lam_idx in 0..n {
        k[lam_idx][lam_idx] = LaurentPolynomial::one();
        for kappa_idx in lam_idx + 1..n {
            let mut sum = LaurentPolynomial::zero();
            for mu_idx in lam_idx..kappa_idx {
                if dominance_leq(&partitions[kappa_idx], &partitions[mu_idx])
                    && dominance_leq(&partitions[mu_idx], &partitions[lam_idx])
                {
                    sum = sum + b[kappa_idx][mu_idx].mul_ref(&k[lam_idx][mu_idx]);
                }
            }
            k[lam_idx][kappa_idx] = -sum;
        }
    }
    Ok(KostkaTable { partitions, k })
}

/// Single Kostka polynomial `K_{λμ}(t)` through the transition-matrix route.
pub fn kostka_oracle_hl(
    lambda: &Partition,
    mu: &Partition,
) -> Result<LaurentPolynomial, PartitionError> {
    let (ls, ms) = (lambda.size(), mu.size());
    if ls != ms {
        return Err(PartitionError::SizeMismatch { left: ls, right: ms });
    }
    let table = kostka_table(ls)?;
    Ok(table.get(lambda, mu).expect("all partitions of r are present").clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::kostka;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn t(e: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(&[("t", e)], 1)
    }

    #[test]
    fn t_factorials() {
        assert!(t_factorial(0).is_one());
        assert!(t_factorial(1).is_one());
        assert_eq!(t_factorial(2), t(1) + LaurentPolynomial::one());
        assert_eq!(
            t_factorial(3),
            (t(1) + LaurentPolynomial::one()) * (t(2) + t(1) + LaurentPolynomial::one())
        );
    }

    #[test]
    fn rank_two_table() {
        let table = kostka_table(2).unwrap();
        assert_eq!(table.partitions, vec![p(&[2]), p(&[1, 1])]);
        assert!(table.get(&p(&[2]), &p(&[2])).unwrap().is_one());
        assert_eq!(table.get(&p(&[2]), &p(&[1, 1])).unwrap(), &t(1));
        assert!(table.get(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
        assert!(table.get(&p(&[1, 1]), &p(&[1, 1])).unwrap().is_one());
    }

    #[test]
    fn pinned_values() {
        assert_eq!(kostka_oracle_hl(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), t(1) + t(2));
        assert_eq!(kostka_oracle_hl(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), t(2) + t(4));
        assert_eq!(kostka_oracle_hl(&p(&[3]), &p(&[1, 1, 1])).unwrap(), t(3));
        assert!(kostka_oracle_hl(&p(&[2, 2]), &p(&[3, 1])).unwrap().is_zero());
    }

    #[test]
    fn matches_charge_route_up_to_rank_four() {
        for r in 1..=4u32 {
            let table = kostka_table(r).unwrap();
            for lam in &table.partitions {
                for mu in &table.partitions {
                    assert_eq!(
                        table.get(lam, mu).unwrap(),
                        &kostka(lam, mu).unwrap(),
                        "K[{lam}][{mu}] differs between routes"
                    );
                }
            }
        }
    }
}
