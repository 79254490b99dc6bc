//! Two-variable Poincaré polynomials of nilpotent cones in types A1–A5, B2,
//! and G2, assembled from graded multiplicities in the coinvariant algebra,
//! together with a generic stratum-by-stratum assembly that also covers the
//! hypertoric case.
//!
//! Each Weyl-group character χ corresponds to a nilpotent orbit with a local
//! system; the cone's polynomial is `Σ_χ K_χ(x²) K_χ(y⁻²)`. The stratum
//! datum view exposes the same sum as `Σ x^{dim} y^{-dim} ih(x⁻¹) p₀(y)`,
//! making the nilpotent and hypertoric assemblies two instances of one shape.

use num_traits::One;
use thiserror::Error;

use crate::coxeter::{
    self, build_weyl, character_table, generalized_kostka, CartanType, CharacterTable,
    CoxeterError, WeylGroup,
};
use crate::hypertoric;
use crate::laurent::LaurentPolynomial;
use crate::matroid::{Matroid, MatroidError};
use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NilconeError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("no character named `{0}` in the table")]
    UnknownCharacter(String),
    #[error("strata disagree on the grading: {0}")]
    InconsistentWeight(String),
}

/// Orbit attached to a Weyl-group character: its dimension and the rank of
/// the accompanying local system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpringerDatum {
    pub character: String,
    pub orbit_dim: i64,
    pub local_system_rank: u32,
}

/// The orbit/local-system datum for every character, in table row order.
///
/// In type A the character of S_r indexed by ν corresponds to the orbit of
/// Jordan type ν, of dimension `r(r-1) - 2n(ν)`, always with the trivial
/// local system. In B2 and G2 the assignment is finite and fixed: the
/// regular orbit carries `triv`, the zero orbit `sgn`, and the subregular
/// orbit carries both the reflection character (trivial local system) and
/// `sgn_short` (the two-dimensional local system in G2, rank one in B2).
pub fn springer_table(w: &WeylGroup, table: &CharacterTable) -> Vec<SpringerDatum> {
    match w.cartan_type {
        CartanType::A(n) => {
            let r = i64::from(n) + 1;
            table
                .rows
                .iter()
                .map(|row| {
                    let nu = row.partition.as_ref().expect("type A rows carry partitions");
                    SpringerDatum {
                        character: row.name.clone(),
                        orbit_dim: r * (r - 1) - 2 * nu.n_stat(),
                        local_system_rank: 1,
                    }
                })
                .collect()
        }
        CartanType::B2 => fixed_table(
            table,
            &[("triv", 8, 1), ("sgn", 0, 1), ("sgn_short", 6, 1), ("sgn_long", 4, 1), ("refl", 6, 1)],
        ),
        CartanType::G2 => fixed_table(
            table,
            &[
                ("triv", 12, 1),
                ("sgn", 0, 1),
                ("sgn_short", 10, 2),
                ("sgn_long", 6, 1),
                ("refl", 10, 1),
                ("refl_twist", 8, 1),
            ],
        ),
    }
}

fn fixed_table(table: &CharacterTable, data: &[(&str, i64, u32)]) -> Vec<SpringerDatum> {
    table
        .rows
        .iter()
        .map(|row| {
            let &(_, dim, rank) = data
                .iter()
                .find(|(name, _, _)| *name == row.name)
                .expect("every rank-two character is assigned an orbit");
            SpringerDatum { character: row.name.clone(), orbit_dim: dim, local_system_rank: rank }
        })
        .collect()
}

/// `Σ_χ K_χ(x²) K_χ(y⁻²)` over all characters: the two-variable Poincaré
/// polynomial of the nilpotent cone.
pub fn conjecture_poincare(
    w: &WeylGroup,
    table: &CharacterTable,
) -> Result<LaurentPolynomial, NilconeError> {
    let x_sq = LaurentPolynomial::monomial(&[("x", 2)], 1);
    let y_inv_sq = LaurentPolynomial::monomial(&[("y", -2)], 1);
    let mut total = LaurentPolynomial::zero();
    for row in &table.rows {
        let k = generalized_kostka(w, &row.values)?;
        let ih = k.substitute("t", &x_sq).expect("x² is a polynomial substitution");
        let slice = k.substitute("t", &y_inv_sq).expect("y⁻² is an invertible monomial");
        total = total + ih.mul_ref(&slice);
    }
    Ok(total)
}

/// Graded multiplicity series of one character in `y`: `K_χ(y⁻²)`.
pub fn h_multiplicity(
    w: &WeylGroup,
    table: &CharacterTable,
    character: &str,
) -> Result<LaurentPolynomial, NilconeError> {
    let row = table
        .row(character)
        .ok_or_else(|| NilconeError::UnknownCharacter(character.to_string()))?;
    let k = generalized_kostka(w, &row.values)?;
    Ok(k.substitute("t", &LaurentPolynomial::monomial(&[("y", -2)], 1))
        .expect("y⁻² is an invertible monomial"))
}

/// One stratum of a graded affine cone: its dimension, the weight of the
/// grading on the slice, an intersection-cohomology polynomial in `x`, and
/// the degree-zero series of the transverse slice in `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDatum {
    pub name: String,
    pub dim: i64,
    pub weight: i64,
    pub ih: LaurentPolynomial,
    pub slice_p0: LaurentPolynomial,
    /// Whether `ih` starts at 1; false signals a nontrivial local system.
    pub unit_constant: bool,
}

/// `Σ_strata x^{dim} y^{-weight·dim/2} · ih(x⁻¹) · p₀(y)`.
pub fn assemble_poincare(strata: &[StratumDatum]) -> Result<LaurentPolynomial, NilconeError> {
    let mut total = LaurentPolynomial::zero();
    let weight = strata.first().map_or(2, |s| s.weight);
    for s in strata {
        if s.weight != weight {
            return Err(NilconeError::InconsistentWeight(format!(
                "stratum `{}` has weight {}, expected {weight}",
                s.name, s.weight
            )));
        }
        if (s.weight * s.dim) % 2 != 0 {
            return Err(NilconeError::InconsistentWeight(format!(
                "stratum `{}`: weight {} times dimension {} is odd",
                s.name, s.weight, s.dim
            )));
        }
        let inv = LaurentPolynomial::monomial(&[("x", -1)], 1);
        let ih_inverted = s.ih.substitute("x", &inv).expect("x⁻¹ is an invertible monomial");
        let term = ih_inverted
            .mul_ref(&s.slice_p0)
            .shift("x", s.dim)
            .shift("y", -s.weight * s.dim / 2);
        total = total + term;
    }
    Ok(total)
}

/// Strata of the nilpotent cone, one per character (so orbits with several
/// local systems appear once per local system). The grading has weight 2.
pub fn strata_from_springer(
    w: &WeylGroup,
    table: &CharacterTable,
) -> Result<Vec<StratumDatum>, NilconeError> {
    let springer = springer_table(w, table);
    let x_inv_sq = LaurentPolynomial::monomial(&[("x", -2)], 1);
    let y_inv_sq = LaurentPolynomial::monomial(&[("y", -2)], 1);
    springer
        .iter()
        .zip(&table.rows)
        .map(|(datum, row)| {
            let k = generalized_kostka(w, &row.values)?;
            let ih = k
                .substitute("t", &x_inv_sq)
                .expect("x⁻² is an invertible monomial")
                .shift("x", datum.orbit_dim);
            let slice_p0 = k
                .substitute("t", &y_inv_sq)
                .expect("y⁻² is an invertible monomial")
                .shift("y", datum.orbit_dim);
            let unit_constant = ih.constant_term().is_one();
            Ok(StratumDatum {
                name: datum.character.clone(),
                dim: datum.orbit_dim,
                weight: 2,
                ih,
                slice_p0,
                unit_constant,
            })
        })
        .collect()
}

/// Strata of a hypertoric cone: one per flat whose localization is
/// coloop-free, of dimension twice the corank, with the contraction's
/// intersection-cohomology polynomial and the localization's degree-zero
/// series on the slice.
pub fn hypertoric_strata(m: &Matroid) -> Result<Vec<StratumDatum>, MatroidError> {
    let rank = m.rank() as i64;
    let mut out = Vec::new();
    for flat in m.flats() {
        let local = m.localize(&flat)?;
        if !local.coloops().is_empty() {
            continue;
        }
        let contraction = m.restrict_flat(&flat)?;
        let ih = hypertoric::q_ih(&contraction);
        let slice_p0 = hypertoric::p_zero(&local);
        let dim = 2 * (rank - m.rank_of(&flat) as i64);
        let unit_constant = ih.constant_term().is_one();
        let members: Vec<String> = flat.iter().map(|e| e.to_string()).collect();
        out.push(StratumDatum {
            name: format!("flat {{{}}}", members.join(",")),
            dim,
            weight: 2,
            ih,
            slice_p0,
            unit_constant,
        });
    }
    Ok(out)
}

/// `K_{g,χ_ν}(t²) = t^{dim O_ν - dim O_{νᵗ}} K_{g,χ_{νᵗ}}(t²)` for every
/// partition ν of r: conjugating the orbit reflects the multiplicity series
/// up to the dimension shift.
pub fn verify_palindromicity(r: u32) -> Result<bool, NilconeError> {
    assert!((2..=6).contains(&r), "supported symmetric group sizes are 2..=6");
    let w = build_weyl(CartanType::A(r as u8 - 1));
    let table = character_table(&w);
    let t_sq = LaurentPolynomial::monomial(&[("t", 2)], 1);
    let springer = springer_table(&w, &table);
    for nu in Partition::all_of(r) {
        let row = table.row_for_partition(&nu).expect("all partitions are rows");
        let row_conj = table.row_for_partition(&nu.conjugate()).expect("conjugate row");
        let dim = springer.iter().find(|d| d.character == row.name).unwrap().orbit_dim;
        let dim_conj =
            springer.iter().find(|d| d.character == row_conj.name).unwrap().orbit_dim;
        let lhs = generalized_kostka(&w, &row.values)?
            .substitute("t", &t_sq)
            .expect("t² is a polynomial substitution");
        let rhs = generalized_kostka(&w, &row_conj.values)?
            .substitute("t", &t_sq)
            .expect("t² is a polynomial substitution")
            .shift("t", dim - dim_conj);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-zero slice series of a simple surface singularity with the given
/// invariant degrees: `Σ_i y^{2(d_i - 2)}`.
pub fn subregular_p0(degrees: &[u32]) -> LaurentPolynomial {
    degrees.iter().fold(LaurentPolynomial::zero(), |acc, &d| {
        acc + LaurentPolynomial::monomial(&[("y", 2 * (i64::from(d) - 2))], 1)
    })
}

/// The transverse slice to the subregular orbit is a simple surface
/// singularity: type A3 for B2 and type D4 for G2 (the folding partners),
/// recorded here by their invariant degrees.
pub fn subregular_slice_degrees(cartan_type: CartanType) -> Option<&'static [u32]> {
    match cartan_type {
        CartanType::B2 => Some(&[2, 3, 4]),
        CartanType::G2 => Some(&[2, 4, 4, 6]),
        CartanType::A(_) => None,
    }
}

/// Outcome of the fixed rank-two checks; `details` holds one line per check.
#[derive(Debug, Clone)]
pub struct RankTwoVerification {
    pub cartan_type: CartanType,
    pub kostka_values_ok: bool,
    pub h_series_ok: bool,
    pub subregular_slice_ok: bool,
    pub regular_rep_ok: bool,
    pub details: Vec<String>,
}

impl RankTwoVerification {
    pub fn all_ok(&self) -> bool {
        self.kostka_values_ok && self.h_series_ok && self.subregular_slice_ok && self.regular_rep_ok
    }
}

fn t_poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
    pairs.iter().fold(LaurentPolynomial::zero(), |acc, &(e, c)| {
        acc + LaurentPolynomial::monomial(&[("t", e)], c)
    })
}

fn y_poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
    pairs.iter().fold(LaurentPolynomial::zero(), |acc, &(e, c)| {
        acc + LaurentPolynomial::monomial(&[("y", e)], c)
    })
}

/// Check the B2 or G2 cone against its closed-form values: the multiplicity
/// polynomials per character, the `h`-series per character, the subregular
/// slice series against the surface-singularity degrees, and the
/// regular-representation decomposition.
pub fn verify_springer_case(cartan_type: CartanType) -> Result<RankTwoVerification, NilconeError> {
    assert!(
        matches!(cartan_type, CartanType::B2 | CartanType::G2),
        "fixed verification data exists for B2 and G2 only"
    );
    let w = build_weyl(cartan_type);
    let table = character_table(&w);
    let springer = springer_table(&w, &table);
    let mut details = Vec::new();

    let expected_k: Vec<(&str, LaurentPolynomial)> = match cartan_type {
        CartanType::B2 => vec![
            ("triv", t_poly(&[(4, 1)])),
            ("sgn", LaurentPolynomial::one()),
            ("sgn_short", t_poly(&[(2, 1)])),
            ("sgn_long", t_poly(&[(2, 1)])),
            ("refl", t_poly(&[(1, 1), (3, 1)])),
        ],
        CartanType::G2 => vec![
            ("triv", t_poly(&[(6, 1)])),
            ("sgn", LaurentPolynomial::one()),
            ("sgn_short", t_poly(&[(3, 1)])),
            ("sgn_long", t_poly(&[(3, 1)])),
            ("refl", t_poly(&[(1, 1), (5, 1)])),
            ("refl_twist", t_poly(&[(2, 1), (4, 1)])),
        ],
        CartanType::A(_) => unreachable!(),
    };
    let mut kostka_values_ok = true;
    for (name, expected) in &expected_k {
        let row = table.row(name).expect("fixed character names");
        let got = generalized_kostka(&w, &row.values)?;
        let ok = got == *expected;
        kostka_values_ok &= ok;
        details.push(format!(
            "K[{name}] = {got} {} {expected}",
            if ok { "==" } else { "!=" }
        ));
    }

    let expected_h: Vec<(&str, LaurentPolynomial)> = match cartan_type {
        CartanType::B2 => vec![
            ("sgn", LaurentPolynomial::one()),
            ("triv", y_poly(&[(-8, 1)])),
            ("refl", y_poly(&[(-2, 1), (-6, 1)])),
        ],
        CartanType::G2 => vec![
            ("sgn", LaurentPolynomial::one()),
            ("triv", y_poly(&[(-12, 1)])),
            ("refl", y_poly(&[(-2, 1), (-10, 1)])),
            ("refl_twist", y_poly(&[(-4, 1), (-8, 1)])),
        ],
        CartanType::A(_) => unreachable!(),
    };
    let mut h_series_ok = true;
    for (name, expected) in &expected_h {
        let got = h_multiplicity(&w, &table, name)?;
        let ok = got == *expected;
        h_series_ok &= ok;
        details.push(format!("h[{name}] = {got} {} {expected}", if ok { "==" } else { "!=" }));
    }

    let subreg_dim = 2 * cartan_type.num_reflections() as i64 - 2;
    let mut slice_sum = LaurentPolynomial::zero();
    for datum in &springer {
        if datum.orbit_dim != subreg_dim {
            continue;
        }
        let h = h_multiplicity(&w, &table, &datum.character)?;
        slice_sum = slice_sum + h.scale(i64::from(datum.local_system_rank));
    }
    let shifted = slice_sum.shift("y", subreg_dim);
    let degrees = subregular_slice_degrees(cartan_type).expect("rank-two type");
    let expected_slice = subregular_p0(degrees);
    let subregular_slice_ok = shifted == expected_slice;
    details.push(format!(
        "subregular slice: y^{subreg_dim}·Σ rank·h = {shifted} {} {expected_slice}",
        if subregular_slice_ok { "==" } else { "!=" }
    ));

    let regular_rep_ok = coxeter::regular_rep_matches_flag(&w, &table)?;
    details.push(format!(
        "Σ dim(χ)·K_χ {} flag Poincaré polynomial",
        if regular_rep_ok { "==" } else { "!=" }
    ));

    Ok(RankTwoVerification {
        cartan_type,
        kostka_values_ok,
        h_series_ok,
        subregular_slice_ok,
        regular_rep_ok,
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::s3::{s3_poincare, S3Pair};

    fn weyl_with_table(ct: CartanType) -> (WeylGroup, CharacterTable) {
        let w = build_weyl(ct);
        let t = character_table(&w);
        (w, t)
    }

    #[test]
    fn springer_dimensions_type_a() {
        let (w, table) = weyl_with_table(CartanType::A(2));
        let springer = springer_table(&w, &table);
        let dim_of = |name: &str| {
            springer.iter().find(|d| d.character == name).unwrap().orbit_dim
        };
        assert_eq!(dim_of("(3)"), 6);
        assert_eq!(dim_of("(2,1)"), 4);
        assert_eq!(dim_of("(1,1,1)"), 0);
        assert!(springer.iter().all(|d| d.local_system_rank == 1));
    }

    #[test]
    fn cone_matches_pair_polynomial_small_ranks() {
        for r in 2..=4u32 {
            let (w, table) = weyl_with_table(CartanType::A(r as u8 - 1));
            let cone = conjecture_poincare(&w, &table).unwrap();
            let pair = S3Pair::new(Partition::row(r), Partition::column(r)).unwrap();
            assert_eq!(cone, s3_poincare(&pair).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn smallest_cone_explicitly() {
        let (w, table) = weyl_with_table(CartanType::A(1));
        let cone = conjecture_poincare(&w, &table).unwrap();
        assert_eq!(cone.to_string(), "x^2*y^-2 + 1");
    }

    #[test]
    fn rank_two_cone_explicitly() {
        // 1 + 2x⁴y⁻⁴ + x⁸y⁻⁸ + (x² + x⁶)(y⁻² + y⁻⁶), expanded and ordered.
        let (w, table) = weyl_with_table(CartanType::B2);
        let cone = conjecture_poincare(&w, &table).unwrap();
        assert_eq!(
            cone.to_string(),
            "x^8*y^-8 + x^6*y^-2 + x^6*y^-6 + 2*x^4*y^-4 + x^2*y^-2 + x^2*y^-6 + 1"
        );
    }

    #[test]
    fn cone_at_y_one_is_the_flag_polynomial() {
        for ct in [CartanType::A(2), CartanType::A(3), CartanType::B2, CartanType::G2] {
            let (w, table) = weyl_with_table(ct);
            let cone = conjecture_poincare(&w, &table).unwrap();
            let at_y1 = cone.substitute("y", &LaurentPolynomial::one()).unwrap();
            let flag_x_sq = crate::coxeter::flag_poincare(ct)
                .substitute("t", &LaurentPolynomial::monomial(&[("x", 2)], 1))
                .unwrap();
            assert_eq!(at_y1, flag_x_sq, "{ct}");
        }
    }

    #[test]
    fn cone_coefficients_are_swap_symmetric() {
        // Each summand K(x²)K(y⁻²) is fixed by swapping x² ↔ y⁻², so the
        // coefficient of x^{2a}y^{-2b} equals that of x^{2b}y^{-2a}.
        for ct in [CartanType::A(3), CartanType::G2] {
            let (w, table) = weyl_with_table(ct);
            let cone = conjecture_poincare(&w, &table).unwrap();
            let vars = cone.vars().to_vec();
            assert_eq!(vars, ["x", "y"]);
            for (exps, coef) in cone.iter_terms() {
                let swapped = [-exps[1], -exps[0]];
                let mirror = cone
                    .iter_terms()
                    .find(|(e, _)| *e == swapped)
                    .map(|(_, c)| c.clone());
                assert_eq!(mirror, Some(coef.clone()), "{ct}: {exps:?}");
            }
        }
    }

    #[test]
    fn springer_strata_assemble_to_the_cone() {
        for ct in [CartanType::A(2), CartanType::B2, CartanType::G2] {
            let (w, table) = weyl_with_table(ct);
            let strata = strata_from_springer(&w, &table).unwrap();
            let assembled = assemble_poincare(&strata).unwrap();
            let direct = conjecture_poincare(&w, &table).unwrap();
            assert_eq!(assembled, direct, "{ct}");
            // Exactly the characters with nontrivial local systems are flagged.
            let flagged: Vec<&str> = strata
                .iter()
                .filter(|s| !s.unit_constant)
                .map(|s| s.name.as_str())
                .collect();
            match ct {
                CartanType::A(_) => assert!(flagged.is_empty()),
                CartanType::B2 | CartanType::G2 => assert_eq!(flagged, ["sgn_short"]),
            }
        }
    }

    #[test]
    fn hypertoric_strata_assemble_to_the_cone() {
        use num_bigint::BigInt;
        let m = Matroid::from_matrix(vec![
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ])
        .unwrap();
        let strata = hypertoric_strata(&m).unwrap();
        assert_eq!(strata.len(), 2, "only ∅ and the full flat are coloop-free");
        let assembled = assemble_poincare(&strata).unwrap();
        assert_eq!(assembled, hypertoric::hypertoric_poincare(&m));
    }

    #[test]
    fn assembly_rejects_mixed_weights() {
        let unit = StratumDatum {
            name: "a".into(),
            dim: 2,
            weight: 2,
            ih: LaurentPolynomial::one(),
            slice_p0: LaurentPolynomial::one(),
            unit_constant: true,
        };
        let mut odd = unit.clone();
        odd.name = "b".into();
        odd.weight = 4;
        assert!(matches!(
            assemble_poincare(&[unit.clone(), odd]),
            Err(NilconeError::InconsistentWeight(_))
        ));
        let mut half = unit.clone();
        half.name = "c".into();
        half.dim = 1;
        half.weight = 3;
        assert!(matches!(
            assemble_poincare(&[half]),
            Err(NilconeError::InconsistentWeight(_))
        ));
    }

    #[test]
    fn palindromicity_small_ranks() {
        for r in 2..=4 {
            assert!(verify_palindromicity(r).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn rank_two_verifications_pass() {
        for ct in [CartanType::B2, CartanType::G2] {
            let report = verify_springer_case(ct).unwrap();
            assert!(report.all_ok(), "{ct}: {:#?}", report.details);
        }
    }

    #[test]
    fn subregular_series_shapes() {
        assert_eq!(subregular_p0(&[2, 3, 4]).to_string(), "y^4 + y^2 + 1");
        assert_eq!(subregular_p0(&[2, 4, 4, 6]).to_string(), "y^8 + 2*y^4 + 1");
    }
}
