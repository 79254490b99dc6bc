//! Two-variable Poincaré polynomials for the affine varieties attached to a
//! dominance-ordered pair of partitions λ ⊵ μ of the same size, assembled
//! stratum by stratum from Kostka polynomials.
//!
//! Strata are indexed by the dominance interval [μ, λ]. The ν-stratum
//! contributes its intersection-cohomology polynomial in `x` (a Kostka
//! polynomial for the pair (ν, μ)) times the lowest-weight series of the
//! transverse slice in `y` (a Kostka polynomial for the conjugate pair),
//! with an overall monomial fixed by the n-statistics.

use crate::laurent::LaurentPolynomial;
use crate::partitions::{dominance_leq, kostka, Partition, PartitionError};

/// A pair of partitions of the same size with `mu ⊴ lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S3Pair {
    pub lambda: Partition,
    pub mu: Partition,
}

impl S3Pair {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self, PartitionError> {
        if lambda.size() != mu.size() {
            return Err(PartitionError::SizeMismatch { left: lambda.size(), right: mu.size() });
        }
        if !dominance_leq(&mu, &lambda) {
            return Err(PartitionError::NotDominated {
                lower: mu.to_string(),
                upper: lambda.to_string(),
            });
        }
        Ok(S3Pair { lambda, mu })
    }

    /// Half the complex dimension of the variety: n(μ) - n(λ).
    pub fn half_dim(&self) -> i64 {
        self.mu.n_stat() - self.lambda.n_stat()
    }
}

/// Intersection-cohomology Poincaré polynomial in `x`, normalized so the
/// constant term is 1: `x^{2(n(μ)-n(λ))} K_{λμ}(x⁻²)`.
pub fn s3_ih_poly(pair: &S3Pair) -> LaurentPolynomial {
    let k = kostka(&pair.lambda, &pair.mu).expect("sizes validated at construction");
    let shift = 2 * pair.half_dim();
    k.substitute("t", &LaurentPolynomial::monomial(&[("x", -2)], 1))
        .expect("x⁻² is an invertible monomial")
        .shift("x", shift)
}

/// Degree-zero part in `y`: `y^{2(n(λᵗ)-n(μᵗ))} K_{μᵗλᵗ}(y⁻²)`. Equals the
/// full Poincaré polynomial evaluated at x = 0.
pub fn s3_p_zero(pair: &S3Pair) -> LaurentPolynomial {
    let lt = pair.lambda.conjugate();
    let mt = pair.mu.conjugate();
    let k = kostka(&mt, &lt).expect("conjugates keep the size");
    let shift = 2 * (lt.n_stat() - mt.n_stat());
    k.substitute("t", &LaurentPolynomial::monomial(&[("y", -2)], 1))
        .expect("y⁻² is an invertible monomial")
        .shift("y", shift)
}

/// The two-variable Poincaré polynomial
/// `y^{2(n(λᵗ)-n(μ))} Σ_{ν ∈ [μ,λ]} y^{2(n(ν)-n(νᵗ))} K_{νμ}(x²) K_{νᵗλᵗ}(y⁻²)`.
pub fn s3_poincare(pair: &S3Pair) -> Result<LaurentPolynomial, PartitionError> {
    let lt = pair.lambda.conjugate();
    let x_sq = LaurentPolynomial::monomial(&[("x", 2)], 1);
    let y_inv_sq = LaurentPolynomial::monomial(&[("y", -2)], 1);
    let mut total = LaurentPolynomial::zero();
    for nu in Partition::interval(&pair.mu, &pair.lambda)? {
        let nt = nu.conjugate();
        let ih = kostka(&nu, &pair.mu)?
            .substitute("t", &x_sq)
            .expect("x² is a polynomial substitution");
        let slice = kostka(&nt, &lt)?
            .substitute("t", &y_inv_sq)
            .expect("y⁻² is an invertible monomial");
        let term = ih.mul_ref(&slice).shift("y", 2 * (nu.n_stat() - nt.n_stat()));
        total = total + term;
    }
    Ok(total.shift("y", 2 * (lt.n_stat() - pair.mu.n_stat())))
}
