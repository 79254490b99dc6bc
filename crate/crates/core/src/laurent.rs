//! Sparse multivariate Laurent polynomials with exact `BigInt` coefficients.
//!
//! A [`LaurentPolynomial`] is a finite map from signed exponent vectors to
//! nonzero coefficients, together with a sorted list of variable names.
//! Polynomials over different variable sets combine by silently extending
//! both to the union, so `x + 1` and `y^-2` can be multiplied directly.
//! Term order (lexicographic on exponent vectors, printed descending) is
//! canonical, which makes serialization byte-deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("substitution into negative powers of `{var}` requires an invertible monomial replacement")]
    NegativeExponentComposition { var: String },
    #[error("division by zero: `{var}` has a negative exponent but is evaluated at 0")]
    DivisionByZero { var: String },
    #[error("no value supplied for variable `{var}`")]
    UnboundVariable { var: String },
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("expected a polynomial in the single variable `{var}`")]
    NotUnivariate { var: String },
}

/// Sparse Laurent polynomial in named variables over `BigInt`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    /// Sorted, deduplicated; every variable occurs in at least one term.
    vars: Vec<String>,
    /// Exponent vector (aligned with `vars`) → nonzero coefficient.
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(&[(name, 1)], 1)
    }

    /// `coef * Π var^exp`. Repeated variable names have their exponents added.
    pub fn monomial(powers: &[(&str, i64)], coef: impl Into<BigInt>) -> Self {
        let coef: BigInt = coef.into();
        if coef.is_zero() {
            return Self::zero();
        }
        let mut by_var: BTreeMap<&str, i64> = BTreeMap::new();
        for &(v, e) in powers {
            *by_var.entry(v).or_insert(0) += e;
        }
        by_var.retain(|_, e| *e != 0);
        let vars: Vec<String> = by_var.keys().map(|v| v.to_string()).collect();
        let exps: Vec<i64> = by_var.values().copied().collect();
        let mut terms = BTreeMap::new();
        terms.insert(exps, coef);
        Self { vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.vars.is_empty() && self.terms.values().next().unwrap().is_one()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Constant (all-exponents-zero) coefficient.
    pub fn constant_term(&self) -> BigInt {
        let key = vec![0i64; self.vars.len()];
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Highest exponent of `var`, or `None` for the zero polynomial or a
    /// variable that does not occur.
    pub fn degree(&self, var: &str) -> Option<i64> {
        let i = self.vars.iter().position(|v| v == var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Lowest exponent of `var` (can be negative).
    pub fn valuation(&self, var: &str) -> Option<i64> {
        let i = self.vars.iter().position(|v| v == var)?;
        self.terms.keys().map(|e| e[i]).min()
    }

    /// True when every exponent of every variable is ≥ 0.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Build from raw (vars, terms) data, restoring all invariants:
    /// sorts variables, merges duplicate keys, prunes zeros and unused vars.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let sorted_vars: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        debug_assert!(sorted_vars.windows(2).all(|w| w[0] < w[1]), "duplicate variable names");
        let mut map: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (exps, coef) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            let key: Vec<i64> = order.iter().map(|&i| exps[i]).collect();
            let entry = map.entry(key).or_insert_with(BigInt::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        Self { vars: sorted_vars, terms: map }.compress()
    }

    /// Drop variables that no longer occur in any term.
    fn compress(mut self) -> Self {
        let n = self.vars.len();
        let mut used = vec![false; n];
        for exps in self.terms.keys() {
            for (i, &e) in exps.iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let old = std::mem::take(&mut self.terms);
        for (exps, coef) in old {
            let key: Vec<i64> = keep.iter().map(|&i| exps[i]).collect();
            self.terms.insert(key, coef);
        }
        self
    }

    /// Remap both polynomials onto the union of their variable lists.
    fn aligned(&self, other: &Self) -> (Vec<String>, BTreeMap<Vec<i64>, BigInt>, BTreeMap<Vec<i64>, BigInt>) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let mut union: Vec<String> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        union.sort();
        union.dedup();
        let remap = |p: &Self| -> BTreeMap<Vec<i64>, BigInt> {
            let pos: Vec<usize> = p
                .vars
                .iter()
                .map(|v| union.binary_search(v).expect("variable in union"))
                .collect();
            p.terms
                .iter()
                .map(|(exps, coef)| {
                    let mut key = vec![0i64; union.len()];
                    for (i, &e) in exps.iter().enumerate() {
                        key[pos[i]] = e;
                    }
                    (key, coef.clone())
                })
                .collect()
        };
        (union.clone(), remap(self), remap(other))
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (vars, mut a, b) = self.aligned(other);
        for (exps, coef) in b {
            let entry = a.entry(exps).or_insert_with(BigInt::zero);
            *entry += coef;
        }
        a.retain(|_, c| !c.is_zero());
        Self { vars, terms: a }.compress()
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (vars, a, b) = self.aligned(other);
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let key: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.entry(key).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { vars, terms: out }.compress()
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * &c)).collect(),
        }
    }

    /// Multiply by the monomial `var^k`.
    pub fn shift(&self, var: &str, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        self.mul_ref(&Self::monomial(&[(var, k)], 1))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// `q^e` for signed `e`; negative powers require `q` to be an invertible
    /// monomial (single term, coefficient ±1).
    fn pow_signed(q: &Self, e: i64, var_for_error: &str) -> Result<Self, LaurentError> {
        if e >= 0 {
            return Ok(q.pow(e as u32));
        }
        if q.terms.len() != 1 {
            return Err(LaurentError::NegativeExponentComposition { var: var_for_error.to_string() });
        }
        let (exps, coef) = q.terms.iter().next().unwrap();
        if !coef.abs().is_one() {
            return Err(LaurentError::NegativeExponentComposition { var: var_for_error.to_string() });
        }
        // (c·m)^e = c^e · m^e with c = ±1, so c^e = c^{|e|}.
        let sign = if coef.is_negative() && e % 2 != 0 { -1 } else { 1 };
        let key: Vec<i64> = exps.iter().map(|&x| x.checked_mul(e).expect("exponent overflow")).collect();
        let mut terms = BTreeMap::new();
        terms.insert(key, BigInt::from(sign));
        Ok(Self { vars: q.vars.clone(), terms }.compress())
    }

    /// Simultaneous substitution of `q` for `var`. Negative powers of `var`
    /// are only composable when `q` is an invertible monomial.
    pub fn substitute(&self, var: &str, q: &Self) -> Result<Self, LaurentError> {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        let mut power_cache: BTreeMap<i64, Self> = BTreeMap::new();
        let mut acc = Self::zero();
        for (exps, coef) in &self.terms {
            let e = exps[idx];
            let mut rest = exps.clone();
            rest[idx] = 0;
            let rest_mono = Self {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(rest, coef.clone())]),
            }
            .compress();
            if !power_cache.contains_key(&e) {
                let p = Self::pow_signed(q, e, var)?;
                power_cache.insert(e, p);
            }
            acc = acc.add_ref(&rest_mono.mul_ref(&power_cache[&e]));
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point; every variable of the
    /// polynomial must be bound.
    pub fn evaluate(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational, LaurentError> {
        for v in &self.vars {
            if !point.contains_key(v) {
                return Err(LaurentError::UnboundVariable { var: v.clone() });
            }
        }
        let values: Vec<&BigRational> = self.vars.iter().map(|v| &point[v]).collect();
        let mut total = BigRational::zero();
        'term: for (exps, coef) in &self.terms {
            let mut prod = BigRational::from_integer(coef.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if values[i].is_zero() {
                    if e < 0 {
                        return Err(LaurentError::DivisionByZero { var: self.vars[i].clone() });
                    }
                    continue 'term;
                }
                prod *= rat_pow(values[i], e);
            }
            total += prod;
        }
        Ok(total)
    }

    /// Coefficients of a polynomial in the single variable `var`, as a dense
    /// vector indexed by exponent. Errors unless all exponents are ≥ 0 and no
    /// other variable occurs.
    pub fn univariate_coeffs(&self, var: &str) -> Result<Vec<BigInt>, LaurentError> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let bad = || LaurentError::NotUnivariate { var: var.to_string() };
        if !(self.vars.is_empty() || self.vars == [var.to_string()]) {
            return Err(bad());
        }
        let deg = self.degree(var).unwrap_or(0);
        if self.valuation(var).unwrap_or(0) < 0 {
            return Err(bad());
        }
        let mut out = vec![BigInt::zero(); deg as usize + 1];
        for (exps, coef) in &self.terms {
            let e = if exps.is_empty() { 0 } else { exps[0] };
            out[e as usize] = coef.clone();
        }
        Ok(out)
    }

    /// Rebuild from dense univariate coefficients.
    pub fn from_univariate(var: &str, coeffs: &[BigInt]) -> Self {
        let mut acc = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add_ref(&Self::monomial(&[(var, e as i64)], c.clone()));
            }
        }
        acc
    }

    /// Exact division of polynomials in the single variable `var`; errors if
    /// the division leaves a remainder or the quotient is not integral.
    pub fn div_exact_univariate(&self, den: &Self, var: &str) -> Result<Self, LaurentError> {
        let n = self.univariate_coeffs(var)?;
        let d = den.univariate_coeffs(var)?;
        if d.is_empty() {
            return Err(LaurentError::ZeroDenominator);
        }
        if n.is_empty() {
            return Ok(Self::zero());
        }
        if n.len() < d.len() {
            return Err(LaurentError::InexactDivision);
        }
        let mut rem: Vec<BigRational> = n.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let lead = BigRational::from_integer(d.last().unwrap().clone());
        let dlen = d.len();
        let qlen = n.len() - dlen + 1;
        let mut quot = vec![BigRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dlen - 1] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.iter().enumerate() {
                    let delta = &c * BigRational::from_integer(dj.clone());
                    rem[k + j] -= delta;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::InexactDivision);
        }
        let mut int_coeffs = Vec::with_capacity(qlen);
        for c in quot {
            if !c.denom().is_one() {
                return Err(LaurentError::InexactDivision);
            }
            int_coeffs.push(c.numer().clone());
        }
        Ok(Self::from_univariate(var, &int_coeffs))
    }

    /// Divide every coefficient by `k`, exactly.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Result<Self, LaurentError> {
        if k.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        let mut terms = BTreeMap::new();
        for (exps, coef) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(coef, k);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            terms.insert(exps.clone(), q);
        }
        Ok(Self { vars: self.vars.clone(), terms })
    }

    /// Canonical JSON form: `{"vars": [...], "terms": [{"exp": [...], "coef": "..."}]}`,
    /// terms in descending lexicographic exponent order, coefficients as
    /// decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(exps, coef)| {
                serde_json::json!({ "exp": exps, "coef": coef.to_string() })
            })
            .collect();
        serde_json::json!({ "vars": self.vars, "terms": terms })
    }
}

fn rat_pow(base: &BigRational, e: i64) -> BigRational {
    let mut result = BigRational::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            result *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    result
}

impl fmt::Display for LaurentPolynomial {
    /// Human text form, e.g. `x^4*y^-4 + x^2*y^-4 + 1`, descending term order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coef)) in self.terms.iter().rev().enumerate() {
            let negative = coef.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coef.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in self.vars.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$impl_fn(rhs)
            }
        }
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                self.$impl_fn(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn mul_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = self.mul_ref(rhs);
    }
}

/// Quotient of two Laurent polynomials, unreduced; equality is by
/// cross-multiplication. Used for Molien sums, where the final division is
/// performed exactly and asserted to cancel.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() }
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        Self { num: p, den: LaurentPolynomial::one() }
    }

    pub fn num(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn den(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul_ref(&other.den).add_ref(&other.num.mul_ref(&self.den)),
            den: self.den.mul_ref(&other.den),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { num: self.num.mul_ref(&other.num), den: self.den.mul_ref(&other.den) }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eq_cross(&self, other: &Self) -> bool {
        self.num.mul_ref(&other.den) == other.num.mul_ref(&self.den)
    }

    /// Collapse to a polynomial in the single variable `var` by exact division.
    pub fn into_polynomial(&self, var: &str) -> Result<LaurentPolynomial, LaurentError> {
        self.num.div_exact_univariate(&self.den, var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[(&[(&str, i64)], i64)]) -> LaurentPolynomial {
        s.iter().fold(LaurentPolynomial::zero(), |acc, &(powers, c)| {
            acc + LaurentPolynomial::monomial(powers, c)
        })
    }

    #[test]
    fn difference_of_squares() {
        let x = LaurentPolynomial::var("x");
        let one = LaurentPolynomial::one();
        let lhs = (x.clone() + one.clone()) * (x.clone() - one);
        assert_eq!(lhs, p(&[(&[("x", 2)], 1), (&[], -1)]));
    }

    #[test]
    fn additive_identity() {
        let q = p(&[(&[("x", 3), ("y", -2)], 5), (&[], -7)]);
        assert_eq!(q.clone() + LaurentPolynomial::zero(), q);
    }

    #[test]
    fn symmetric_square() {
        let s = p(&[(&[("y", -1)], 1), (&[("y", 1)], 1)]);
        let sq = s.clone() * s;
        assert_eq!(sq, p(&[(&[("y", -2)], 1), (&[], 2), (&[("y", 2)], 1)]));
    }

    #[test]
    fn substitute_polynomial() {
        // (x² + x) with x := x² + 1 gives x⁴ + 3x² + 2.
        let q = p(&[(&[("x", 2)], 1), (&[("x", 1)], 1)]);
        let r = q
            .substitute("x", &p(&[(&[("x", 2)], 1), (&[], 1)]))
            .unwrap();
        assert_eq!(r, p(&[(&[("x", 4)], 1), (&[("x", 2)], 3), (&[], 2)]));
    }

    #[test]
    fn substitute_monomial_power() {
        let q = p(&[(&[("y", 3)], 1)]);
        let r = q.substitute("y", &p(&[(&[("y", -2)], 1)])).unwrap();
        assert_eq!(r, p(&[(&[("y", -6)], 1)]));
    }

    #[test]
    fn substitute_negative_power_rejects_non_monomial() {
        let q = p(&[(&[("x", -1)], 1)]);
        let err = q.substitute("x", &p(&[(&[("x", 1)], 1), (&[], 1)])).unwrap_err();
        assert_eq!(err, LaurentError::NegativeExponentComposition { var: "x".into() });
    }

    #[test]
    fn substitute_negative_power_of_negated_monomial() {
        // (x^{-1}) at x := -y is -y^{-1}.
        let q = p(&[(&[("x", -1)], 1)]);
        let r = q.substitute("x", &p(&[(&[("y", 1)], -1)])).unwrap();
        assert_eq!(r, p(&[(&[("y", -1)], -1)]));
    }

    #[test]
    fn substitute_constant_one_collapses_laurent_part() {
        let q = p(&[(&[("x", 2), ("y", -4)], 1), (&[("y", -2)], 3)]);
        let r = q.substitute("y", &LaurentPolynomial::one()).unwrap();
        assert_eq!(r, p(&[(&[("x", 2)], 1), (&[], 3)]));
    }

    #[test]
    fn substitute_identity_is_noop() {
        let q = p(&[(&[("x", 2), ("y", -1)], 4), (&[("x", -3)], -2), (&[], 9)]);
        assert_eq!(q.substitute("x", &LaurentPolynomial::var("x")).unwrap(), q);
    }

    #[test]
    fn evaluate_rationals() {
        let q = p(&[(&[("x", 2), ("y", -2)], 1)]);
        let pt: BTreeMap<String, BigRational> = [
            ("x".to_string(), BigRational::from_integer(2.into())),
            ("y".to_string(), BigRational::from_integer(2.into())),
        ]
        .into();
        assert_eq!(q.evaluate(&pt).unwrap(), BigRational::one());
        let z = p(&[(&[("x", 1)], 1), (&[("y", 1)], 1)]);
        let origin: BTreeMap<String, BigRational> = [
            ("x".to_string(), BigRational::zero()),
            ("y".to_string(), BigRational::zero()),
        ]
        .into();
        assert_eq!(z.evaluate(&origin).unwrap(), BigRational::zero());
    }

    #[test]
    fn evaluate_zero_at_negative_power_fails() {
        let q = p(&[(&[("y", -1)], 1)]);
        let pt: BTreeMap<String, BigRational> = [("y".to_string(), BigRational::zero())].into();
        assert_eq!(q.evaluate(&pt).unwrap_err(), LaurentError::DivisionByZero { var: "y".into() });
    }

    #[test]
    fn display_canonical() {
        let q = p(&[(&[("x", 4), ("y", -4)], 1), (&[("x", 2), ("y", -4)], 1), (&[], 1)]);
        assert_eq!(q.to_string(), "x^4*y^-4 + x^2*y^-4 + 1");
        let c = p(&[(&[("x", 2)], 1), (&[("x", 1)], -3), (&[], 2)]);
        assert_eq!(c.to_string(), "x^2 - 3*x + 2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_canonical() {
        let q = p(&[(&[("x", 2), ("y", -4)], 1), (&[], 7)]);
        assert_eq!(
            q.to_json().to_string(),
            r#"{"terms":[{"coef":"1","exp":[2,-4]},{"coef":"7","exp":[0,0]}],"vars":["x","y"]}"#
        );
    }

    #[test]
    fn exact_univariate_division() {
        // (q⁴ - 1) / (q - 1) = q³ + q² + q + 1
        let num = p(&[(&[("q", 4)], 1), (&[], -1)]);
        let den = p(&[(&[("q", 1)], 1), (&[], -1)]);
        let quot = num.div_exact_univariate(&den, "q").unwrap();
        assert_eq!(quot, p(&[(&[("q", 3)], 1), (&[("q", 2)], 1), (&[("q", 1)], 1), (&[], 1)]));
        let bad = p(&[(&[("q", 4)], 1), (&[], 1)]);
        assert_eq!(bad.div_exact_univariate(&den, "q").unwrap_err(), LaurentError::InexactDivision);
    }

    #[test]
    fn rational_function_cross_equality() {
        let x = LaurentPolynomial::var("x");
        let one = LaurentPolynomial::one();
        // x/(x+1) + 1/(x+1) = 1
        let a = RationalFunction::new(x.clone(), x.clone() + one.clone()).unwrap();
        let b = RationalFunction::new(one.clone(), x.clone() + one.clone()).unwrap();
        assert!(a.add(&b).eq_cross(&RationalFunction::from_poly(one)));
    }

    mod random {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
            let term = (
                prop::collection::vec(-4i64..=4, 2),
                -9i64..=9,
            );
            prop::collection::vec(term, 0..5).prop_map(|ts| {
                ts.into_iter().fold(LaurentPolynomial::zero(), |acc, (exps, c)| {
                    acc + LaurentPolynomial::monomial(&[("x", exps[0]), ("y", exps[1])], c)
                })
            })
        }

        proptest! {
            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
                prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
                prop_assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
            }

            #[test]
            fn substitute_then_evaluate_commutes(a in arb_poly(), q in arb_poly()) {
                // Restrict to nonneg exponents of x so arbitrary q is legal,
                // and evaluate at nonzero points.
                let a = a.substitute("x", &LaurentPolynomial::monomial(&[("x", 2)], 1)).unwrap_or(a);
                let a = if a.valuation("x").unwrap_or(0) < 0 { return Ok(()); } else { a };
                let pt: BTreeMap<String, BigRational> = [
                    ("x".to_string(), BigRational::new(3.into(), 2.into())),
                    ("y".to_string(), BigRational::new((-2).into(), 5.into())),
                ].into();
                let qv = match q.evaluate(&pt) { Ok(v) => v, Err(_) => return Ok(()) };
                if qv.is_zero() && a.vars().contains(&"x".to_string()) {
                    return Ok(());
                }
                let composed = match a.substitute("x", &q) { Ok(c) => c, Err(_) => return Ok(()) };
                let lhs = match composed.evaluate(&pt) { Ok(v) => v, Err(_) => return Ok(()) };
                let mut pt2 = pt.clone();
                pt2.insert("x".to_string(), qv);
                prop_assert_eq!(lhs, a.evaluate(&pt2).unwrap());
            }
        }
    }
}
