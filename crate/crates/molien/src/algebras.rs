//! Closed Hilbert series for two families of relatively free algebras,
//! together with their known Schur multiplicities.
//!
//! Both families are graded algebras on `m` generic generators:
//!
//! - `Grassmann`: the relatively free algebra satisfying the identity
//!   [[x, y], z] = 0 (the T-ideal of the infinite-dimensional Grassmann
//!   algebra);
//! - `UpperTriangular2`: the relatively free algebra satisfying
//!   [x, y][u, v] = 0 (the T-ideal of 2x2 upper triangular matrices).
//!
//! Each family provides its Hilbert series as a rational form and,
//! through a separate code path, the multiplicity of every irreducible
//! from the known cocharacter sequence. Agreement of the two routes is
//! checked in tests and backs the dual-route invariant computations
//! downstream.

use crate::multiplicity::MultTable;
use crate::polyring::{
    one_plus_var_z, rat, DenomFactor, Monomial, Rat, RationalForm, RationalTerm, TPoly, ZPoly,
};
use crate::symfunc::{partitions_of, Partition};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum AlgebraFamily {
    #[serde(rename = "grassmann")]
    Grassmann,
    #[serde(rename = "ut2")]
    UpperTriangular2,
}

impl AlgebraFamily {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraFamily::Grassmann => "grassmann",
            AlgebraFamily::UpperTriangular2 => "ut2",
        }
    }
}

/// One algebra of a family on `m` generators, graded by total degree in
/// the generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub family: AlgebraFamily,
    pub m: usize,
}

impl AlgebraSpec {
    pub fn new(family: AlgebraFamily, m: usize) -> Self {
        assert!(m >= 1, "an algebra needs at least one generator");
        AlgebraSpec { family, m }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={})", self.family.name(), self.m)
    }
}

/// Product of the geometric factors `1/(1 - t_i z)^mult`.
fn geometric_factors(m: usize, mult: usize) -> Vec<DenomFactor> {
    (0..m)
        .map(|i| DenomFactor::new(Monomial::var(m, i), 1, mult))
        .collect()
}

/// The Hilbert series of the algebra in its generator variables, as an
/// exact rational form.
pub fn hilbert_form(spec: &AlgebraSpec) -> RationalForm {
    let m = spec.m;
    match spec.family {
        // 1/2 + (1/2) prod (1 + t_i z)/(1 - t_i z)
        AlgebraFamily::Grassmann => {
            let mut numerator = ZPoly::one(m);
            for i in 0..m {
                numerator = &numerator * &one_plus_var_z(m, i);
            }
            RationalForm::from_terms(
                m,
                vec![
                    RationalTerm::new(rat(1, 2), ZPoly::one(m), Vec::new()),
                    RationalTerm::new(rat(1, 2), numerator, geometric_factors(m, 1)),
                ],
            )
        }
        // 2 prod 1/(1 - t_i z)
        //   + ((t_1 + ... + t_m) z - 1) prod 1/(1 - t_i z)^2
        AlgebraFamily::UpperTriangular2 => {
            let mut e1 = TPoly::zero(m);
            for i in 0..m {
                e1 = &e1 + &TPoly::variable(m, i);
            }
            let numerator = ZPoly::from_coeffs(m, vec![TPoly::constant(m, -Rat::one()), e1]);
            RationalForm::from_terms(
                m,
                vec![
                    RationalTerm::new(
                        Rat::one() + Rat::one(),
                        ZPoly::one(m),
                        geometric_factors(m, 1),
                    ),
                    RationalTerm::new(Rat::one(), numerator, geometric_factors(m, 2)),
                ],
            )
        }
    }
}

/// The multiplicity of the irreducible labelled `lambda` in degree
/// `lambda.size()` of the algebra:
///
/// - `Grassmann`: 1 exactly on hooks `(p, 1^q)` and the empty partition;
/// - `UpperTriangular2`: 1 on the empty and single-row partitions, and
///   `lambda_1 - lambda_2 + 1` on `(lambda_1, lambda_2)` with
///   `lambda_2 >= 1` and on `(lambda_1, lambda_2, 1)`.
///
/// Partitions with more than `d` rows label the zero module and get
/// multiplicity 0.
pub fn known_multiplicity(family: AlgebraFamily, d: usize, lambda: &Partition) -> u64 {
    if lambda.len() > d {
        return 0;
    }
    let parts = lambda.parts();
    match family {
        AlgebraFamily::Grassmann => {
            let is_hook = parts.len() <= 1 || parts[1..].iter().all(|&p| p == 1);
            u64::from(is_hook)
        }
        AlgebraFamily::UpperTriangular2 => match parts.len() {
            0 | 1 => 1,
            2 => (parts[0] - parts[1] + 1) as u64,
            3 if parts[2] == 1 => (parts[0] - parts[1] + 1) as u64,
            _ => 0,
        },
    }
}

fn cocharacter_table(family: AlgebraFamily, d: usize, order: usize) -> MultTable {
    let mut table = MultTable::new(d, order);
    for n in 0..=order {
        for lambda in partitions_of(n, d) {
            let m = known_multiplicity(family, d, &lambda);
            if m > 0 {
                table.insert(n, lambda, m);
            }
        }
    }
    table
}

/// Multiplicity table of the Grassmann family in `d` variables: hooks
/// with at most `d` rows, each with multiplicity 1.
pub fn grassmann_cocharacter_table(d: usize, order: usize) -> MultTable {
    cocharacter_table(AlgebraFamily::Grassmann, d, order)
}

/// Multiplicity table of the upper triangular family in `d` variables.
pub fn triangular_cocharacter_table(d: usize, order: usize) -> MultTable {
    cocharacter_table(AlgebraFamily::UpperTriangular2, d, order)
}

/// Table for an algebra spec, filled from `known_multiplicity` without
/// any series expansion; the variable count equals the generator count.
pub fn known_table(spec: &AlgebraSpec, order: usize) -> MultTable {
    cocharacter_table(spec.family, spec.m, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::multiplicity_table;
    use num_traits::ToPrimitive;

    #[test]
    fn closed_form_expansion_matches_known_multiplicities() {
        let order = 8;
        for family in [AlgebraFamily::Grassmann, AlgebraFamily::UpperTriangular2] {
            for m in 1..=4usize {
                let spec = AlgebraSpec::new(family, m);
                let expanded = hilbert_form(&spec).expand(order);
                let table = known_table(&spec, order);
                assert_eq!(
                    expanded,
                    table.to_schur_series(),
                    "{spec}: closed form vs known multiplicities"
                );
                assert_eq!(
                    multiplicity_table(&expanded).unwrap(),
                    table,
                    "{spec}: decomposition recovers the known table"
                );
            }
        }
    }

    #[test]
    fn one_generator_algebras_are_polynomial_rings() {
        // With one generator both defining identities are vacuous and
        // the algebra is K[x]: dimension 1 in every degree.
        for family in [AlgebraFamily::Grassmann, AlgebraFamily::UpperTriangular2] {
            let spec = AlgebraSpec::new(family, 1);
            let ones = vec![crate::polyring::VarImage::Scalar(Rat::one())];
            let dims = hilbert_form(&spec)
                .expand(6)
                .substitute(&ones)
                .unwrap()
                .counting_coeffs()
                .unwrap();
            assert_eq!(dims, vec![1; 7], "{spec}");
        }
    }

    #[test]
    fn grassmann_dimensions_on_two_generators() {
        // Hooks with at most two rows in degree n are (n) and (n-1,1),
        // of dimensions (n+1) and (n-1): total 2n for n >= 1.
        let spec = AlgebraSpec::new(AlgebraFamily::Grassmann, 2);
        let ones = vec![crate::polyring::VarImage::Scalar(Rat::one()); 2];
        let dims = hilbert_form(&spec)
            .expand(6)
            .substitute(&ones)
            .unwrap()
            .counting_coeffs()
            .unwrap();
        assert_eq!(dims, vec![1, 2, 4, 6, 8, 10, 12]);
    }

    #[test]
    fn ut2_dimensions_match_direct_basis_count() {
        // On two generators a basis is: ordered monomials x1^a x2^b,
        // together with x1^a x2^b [x2, x1] x1^c x2^e. Degree n therefore
        // holds n + 1 monomials plus one element per composition
        // a + b + c + e = n - 2, i.e. binomial(n + 1, 3) commutator terms.
        let spec = AlgebraSpec::new(AlgebraFamily::UpperTriangular2, 2);
        let ones = vec![crate::polyring::VarImage::Scalar(Rat::one()); 2];
        let dims = hilbert_form(&spec)
            .expand(6)
            .substitute(&ones)
            .unwrap()
            .counting_coeffs()
            .unwrap();
        let mut expected = Vec::new();
        for n in 0..=6u64 {
            let ordered = n + 1;
            let commutator = if n >= 2 { (n + 1) * n * (n - 1) / 6 } else { 0 };
            expected.push(ordered + commutator);
        }
        assert_eq!(dims, expected);
    }

    #[test]
    fn known_multiplicities_respect_row_limits() {
        use AlgebraFamily::{Grassmann, UpperTriangular2};
        assert_eq!(known_multiplicity(Grassmann, 2, &Partition::of(&[3, 1])), 1);
        assert_eq!(known_multiplicity(Grassmann, 2, &Partition::of(&[3, 1, 1])), 0);
        assert_eq!(known_multiplicity(Grassmann, 3, &Partition::of(&[3, 1, 1])), 1);
        assert_eq!(known_multiplicity(Grassmann, 2, &Partition::of(&[2, 2])), 0);

        assert_eq!(known_multiplicity(UpperTriangular2, 3, &Partition::of(&[4, 2])), 3);
        assert_eq!(
            known_multiplicity(UpperTriangular2, 3, &Partition::of(&[4, 2, 1])),
            3
        );
        assert_eq!(
            known_multiplicity(UpperTriangular2, 2, &Partition::of(&[4, 2, 1])),
            0
        );
        assert_eq!(
            known_multiplicity(UpperTriangular2, 3, &Partition::of(&[4, 2, 2])),
            0
        );
        assert_eq!(
            known_multiplicity(UpperTriangular2, 4, &Partition::of(&[2, 1, 1, 1])),
            0
        );
    }

    #[test]
    fn cocharacter_tables_list_expected_partitions() {
        let g = grassmann_cocharacter_table(2, 3);
        let degree3: Vec<_> = g
            .entries()
            .filter(|(n, _, _)| *n == 3)
            .map(|(_, l, m)| (l.clone(), m))
            .collect();
        assert_eq!(
            degree3,
            vec![(Partition::of(&[2, 1]), 1), (Partition::of(&[3]), 1)]
        );

        let t = triangular_cocharacter_table(2, 4);
        assert_eq!(t.get(4, &Partition::of(&[3, 1])), 3);
        assert_eq!(t.get(4, &Partition::of(&[2, 2])), 1);
        assert_eq!(t.get(4, &Partition::of(&[2, 1, 1])), 0);
    }

    #[test]
    fn dimensions_agree_with_weyl_formula_totals() {
        // Sum of multiplicity times irreducible dimension equals the
        // coefficient sum of the expanded series.
        let order = 6;
        for family in [AlgebraFamily::Grassmann, AlgebraFamily::UpperTriangular2] {
            for m in 2..=3usize {
                let spec = AlgebraSpec::new(family, m);
                let expanded = hilbert_form(&spec).expand(order);
                let table = known_table(&spec, order);
                for n in 0..=order {
                    let via_series = expanded.coeff(n).coeff_sum();
                    let via_table: Rat = table
                        .entries()
                        .filter(|(k, _, _)| *k == n)
                        .map(|(_, lambda, mult)| {
                            crate::symfunc::schur_poly(lambda, m).coeff_sum()
                                * Rat::from_integer(mult.into())
                        })
                        .sum();
                    assert_eq!(via_series, via_table, "{spec} degree {n}");
                    assert!(via_series.to_integer().to_i64().unwrap() >= 0);
                }
            }
        }
    }
}
