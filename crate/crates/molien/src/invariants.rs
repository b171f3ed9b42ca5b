//! Invariant counting for classical subgroups of GL_d acting on a
//! graded module with known multiplicity table.
//!
//! Two independent routes compute the Hilbert series of the invariant
//! subspace:
//!
//! - the partition filter sums multiplicities over the partitions whose
//!   irreducible carries a nonzero invariant vector for the subgroup;
//! - the substitution route evaluates one of the two generating series
//!   of the table at group-specific scalar values, averaging over signs
//!   where the invariant condition is parity-based.
//!
//! `dual_check` runs both and insists they agree degree by degree,
//! which exercises the whole decomposition pipeline.

use crate::error::{Error, Result};
use crate::multiplicity::MultTable;
use crate::polyring::{rat, rat_int, GradedSeries, Monomial, VarImage};
use crate::symfunc::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GroupKind {
    Sp,
    O,
    SO,
    SL,
    UT,
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Sp => "Sp",
            GroupKind::O => "O",
            GroupKind::SO => "SO",
            GroupKind::SL => "SL",
            GroupKind::UT => "UT",
        }
    }

    pub const ALL: [GroupKind; 5] = [
        GroupKind::Sp,
        GroupKind::O,
        GroupKind::SO,
        GroupKind::SL,
        GroupKind::UT,
    ];
}

/// A classical subgroup of GL_d: the symplectic, orthogonal, special
/// orthogonal, or special linear group, or the group of unitriangular
/// matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub d: usize,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, d: usize) -> Self {
        GroupSpec { kind, d }
    }

    fn validate(&self, nvars: usize) -> Result<()> {
        if self.d != nvars {
            return Err(Error::VarMismatch {
                expected: self.d,
                found: nvars,
            });
        }
        if self.kind == GroupKind::Sp && self.d % 2 != 0 {
            return Err(Error::SpOddDimension { d: self.d });
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.name(), self.d)
    }
}

/// Hilbert series of an invariant subspace: nonnegative integer
/// dimension counts per degree, `coeffs[n]` for `z^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSeries {
    pub group: GroupSpec,
    pub coeffs: Vec<u64>,
}

impl InvariantSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Whether the irreducible labelled by `lambda` contains a nonzero
/// vector fixed by the group. Partitions with more than `d` parts label
/// the zero module and never contribute.
pub fn admits_invariant(group: &GroupSpec, lambda: &Partition) -> Result<bool> {
    if group.kind == GroupKind::Sp && group.d % 2 != 0 {
        return Err(Error::SpOddDimension { d: group.d });
    }
    if lambda.len() > group.d {
        return Ok(false);
    }
    let padded = lambda.padded(group.d);
    let ok = match group.kind {
        // Columns pair up: equal parts in positions (1,2), (3,4), ...
        GroupKind::Sp => (0..group.d / 2).all(|i| padded[2 * i] == padded[2 * i + 1]),
        GroupKind::O => lambda.parts().iter().all(|&p| p % 2 == 0),
        GroupKind::SO => {
            lambda.parts().iter().all(|&p| p % 2 == 0)
                || (lambda.len() == group.d
                    && lambda.parts().iter().all(|&p| p % 2 == 1))
        }
        GroupKind::SL => {
            lambda.is_empty()
                || (lambda.len() == group.d
                    && lambda.parts().iter().all(|&p| p == lambda.parts()[0]))
        }
        GroupKind::UT => true,
    };
    Ok(ok)
}

/// Invariant series by summing admitted multiplicities degree by degree.
pub fn filter_invariants(table: &MultTable, group: &GroupSpec) -> Result<InvariantSeries> {
    group.validate(table.nvars())?;
    let mut coeffs = vec![0u64; table.order() + 1];
    for (n, lambda, mult) in table.entries() {
        if admits_invariant(group, lambda)? {
            coeffs[n] += mult;
        }
    }
    Ok(InvariantSeries {
        group: *group,
        coeffs,
    })
}

/// Invariant series by scalar substitution into a generating series of
/// the table.
pub fn substitute_invariants(table: &MultTable, group: &GroupSpec) -> Result<InvariantSeries> {
    group.validate(table.nvars())?;
    let d = group.d;
    let scalar_series = match group.kind {
        // Difference coordinates vanish on odd positions and are free on
        // even ones exactly for the paired-column partitions.
        GroupKind::Sp => {
            let images: Vec<VarImage> = (0..d)
                .map(|i| VarImage::Scalar(rat_int(if i % 2 == 1 { 1 } else { 0 })))
                .collect();
            table.to_mprime_series().substitute(&images)?
        }
        // Averaging a variable over {-1, +1} keeps exactly the terms of
        // even exponent; doing it for each variable keeps the all-even
        // partitions.
        GroupKind::O => {
            let mut s = table.to_m_series();
            for _ in 0..d {
                s = half_sum_over_signs(&s)?;
            }
            s
        }
        // In difference coordinates the parity pattern of a partition
        // with all parts even, or all parts odd with full length, is
        // detected by averaging the first d-1 coordinates and setting
        // the last to 1.
        GroupKind::SO => {
            let mut s = table.to_mprime_series();
            for _ in 0..d.saturating_sub(1) {
                s = half_sum_over_signs(&s)?;
            }
            s.substitute(&[VarImage::Scalar(rat_int(1))])?
        }
        // Only the last difference coordinate survives, marking the
        // rectangular partitions of full length.
        GroupKind::SL => {
            let images: Vec<VarImage> = (0..d)
                .map(|i| VarImage::Scalar(rat_int(if i + 1 == d { 1 } else { 0 })))
                .collect();
            table.to_mprime_series().substitute(&images)?
        }
        GroupKind::UT => {
            let images = vec![VarImage::Scalar(rat_int(1)); d];
            table.to_m_series().substitute(&images)?
        }
    };
    Ok(InvariantSeries {
        group: *group,
        coeffs: scalar_series.counting_coeffs()?,
    })
}

/// Replaces the first variable by +1 and by -1 and halves the sum,
/// leaving a series in the remaining variables.
fn half_sum_over_signs(s: &GradedSeries) -> Result<GradedSeries> {
    let d = s.nvars();
    assert!(d >= 1, "no variable left to average");
    let images = |sign: i64| -> Vec<VarImage> {
        let mut v = Vec::with_capacity(d);
        v.push(VarImage::Scalar(rat_int(sign)));
        for i in 1..d {
            v.push(VarImage::Monomial(Monomial::var(d - 1, i - 1)));
        }
        v
    };
    let plus = s.substitute(&images(1))?;
    let minus = s.substitute(&images(-1))?;
    Ok((&plus + &minus).scale(&rat(1, 2)))
}

/// Runs both routes and returns the common series, or the first degree
/// where they disagree.
pub fn dual_check(table: &MultTable, group: &GroupSpec) -> Result<InvariantSeries> {
    let filtered = filter_invariants(table, group)?;
    let substituted = substitute_invariants(table, group)?;
    for (degree, (a, b)) in filtered
        .coeffs
        .iter()
        .zip(substituted.coeffs.iter())
        .enumerate()
    {
        if a != b {
            return Err(Error::DualCheckMismatch {
                group: *group,
                degree,
                filtered: *a,
                substituted: *b,
            });
        }
    }
    Ok(filtered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::multiplicity_table;
    use crate::polyring::{DenomFactor, RationalForm, RationalTerm, Rat, TPoly, ZPoly};
    use num_traits::One;

    fn sp(d: usize) -> GroupSpec {
        GroupSpec::new(GroupKind::Sp, d)
    }
    fn o(d: usize) -> GroupSpec {
        GroupSpec::new(GroupKind::O, d)
    }
    fn so(d: usize) -> GroupSpec {
        GroupSpec::new(GroupKind::SO, d)
    }
    fn sl(d: usize) -> GroupSpec {
        GroupSpec::new(GroupKind::SL, d)
    }
    fn ut(d: usize) -> GroupSpec {
        GroupSpec::new(GroupKind::UT, d)
    }

    /// Table of the polynomial algebra on the standard d-dimensional
    /// module: multiplicity 1 for the single-row partition in each
    /// degree.
    fn symmetric_algebra_table(d: usize, order: usize) -> MultTable {
        let factors = (0..d)
            .map(|i| DenomFactor::new(Monomial::var(d, i), 1, 1))
            .collect();
        let form = RationalForm::from_terms(
            d,
            vec![RationalTerm::new(Rat::one(), ZPoly::one(d), factors)],
        );
        multiplicity_table(&form.expand(order)).unwrap()
    }

    /// Table of the exterior algebra on the standard module:
    /// multiplicity 1 for the single-column partition per degree.
    fn exterior_algebra_table(d: usize, order: usize) -> MultTable {
        let mut numerator = ZPoly::one(d);
        for i in 0..d {
            numerator = &numerator
                * &ZPoly::from_coeffs(d, vec![TPoly::one(d), TPoly::variable(d, i)]);
        }
        let form = RationalForm::from_zpoly(numerator);
        multiplicity_table(&form.expand(order)).unwrap()
    }

    #[test]
    fn admits_matches_known_partition_shapes() {
        let cases = [
            (sp(4), Partition::of(&[3, 3, 1, 1]), true),
            (sp(4), Partition::of(&[2, 2]), true),
            (sp(4), Partition::of(&[2, 1, 1]), false),
            (o(3), Partition::of(&[4, 2]), true),
            (o(3), Partition::of(&[3, 2]), false),
            (so(3), Partition::of(&[3, 1, 1]), true),
            (so(3), Partition::of(&[3, 1]), false),
            (so(3), Partition::of(&[2, 2]), true),
            (sl(3), Partition::of(&[2, 2, 2]), true),
            (sl(3), Partition::of(&[2, 2]), false),
            (sl(3), Partition::empty(), true),
            (ut(2), Partition::of(&[5, 3]), true),
        ];
        for (group, lambda, expected) in cases {
            assert_eq!(
                admits_invariant(&group, &lambda).unwrap(),
                expected,
                "{group} on {lambda}"
            );
        }
        // More parts than d labels the zero module.
        assert!(!admits_invariant(&ut(2), &Partition::of(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn symplectic_rejects_odd_dimension() {
        let table = symmetric_algebra_table(3, 2);
        assert!(matches!(
            filter_invariants(&table, &sp(3)),
            Err(Error::SpOddDimension { d: 3 })
        ));
        assert!(matches!(
            substitute_invariants(&table, &sp(3)),
            Err(Error::SpOddDimension { d: 3 })
        ));
        assert!(matches!(
            admits_invariant(&sp(3), &Partition::empty()),
            Err(Error::SpOddDimension { d: 3 })
        ));
    }

    #[test]
    fn group_must_match_table_dimension() {
        let table = symmetric_algebra_table(2, 2);
        assert!(matches!(
            filter_invariants(&table, &o(3)),
            Err(Error::VarMismatch { .. })
        ));
    }

    #[test]
    fn polynomial_algebra_invariants_match_classical_results() {
        let order = 8;
        let table = symmetric_algebra_table(2, order);
        // Only the quadratic form survives the orthogonal groups.
        let even: Vec<u64> = (0..=order).map(|n| u64::from(n % 2 == 0)).collect();
        assert_eq!(dual_check(&table, &o(2)).unwrap().coeffs, even);
        assert_eq!(dual_check(&table, &so(2)).unwrap().coeffs, even);
        // Sp_2 = SL_2 leaves no invariants beyond constants.
        let mut trivial = vec![0u64; order + 1];
        trivial[0] = 1;
        assert_eq!(dual_check(&table, &sp(2)).unwrap().coeffs, trivial);
        assert_eq!(dual_check(&table, &sl(2)).unwrap().coeffs, trivial);
        // One multiplicity per degree survives the unitriangular group.
        assert_eq!(
            dual_check(&table, &ut(2)).unwrap().coeffs,
            vec![1u64; order + 1]
        );
    }

    #[test]
    fn exterior_algebra_determinant_separates_so_from_o() {
        let d = 2;
        let table = exterior_algebra_table(d, d);
        let o_series = dual_check(&table, &o(d)).unwrap();
        let so_series = dual_check(&table, &so(d)).unwrap();
        assert_eq!(o_series.coeffs, vec![1, 0, 0]);
        // The top exterior power is the determinant representation.
        assert_eq!(so_series.coeffs, vec![1, 0, 1]);
        let sl_series = dual_check(&table, &sl(d)).unwrap();
        assert_eq!(sl_series.coeffs, vec![1, 0, 1]);
    }

    #[test]
    fn routes_agree_on_composite_modules() {
        let order = 6;
        for d in 1..=3usize {
            let factors = (0..d)
                .flat_map(|i| {
                    [
                        DenomFactor::new(Monomial::var(d, i), 1, 2),
                        DenomFactor::new(Monomial::var(d, i), 2, 1),
                    ]
                })
                .collect();
            let form = RationalForm::from_terms(
                d,
                vec![RationalTerm::new(Rat::one(), ZPoly::one(d), factors)],
            );
            let table = multiplicity_table(&form.expand(order)).unwrap();
            for kind in GroupKind::ALL {
                let group = GroupSpec::new(kind, d);
                if kind == GroupKind::Sp && d % 2 != 0 {
                    continue;
                }
                dual_check(&table, &group).unwrap_or_else(|e| {
                    panic!("routes disagree for {group}: {e}")
                });
            }
        }
    }

    #[test]
    fn iterated_averaging_equals_full_sign_sum() {
        let d = 3;
        let order = 5;
        let table = symmetric_algebra_table(d, order);
        let m = table.to_m_series();
        let mut iterated = m.clone();
        for _ in 0..d {
            iterated = super::half_sum_over_signs(&iterated).unwrap();
        }
        let mut direct = GradedSeries::zero(0, order);
        for mask in 0..(1u32 << d) {
            let images: Vec<VarImage> = (0..d)
                .map(|i| {
                    VarImage::Scalar(rat_int(if mask >> i & 1 == 1 { -1 } else { 1 }))
                })
                .collect();
            direct = &direct + &m.substitute(&images).unwrap();
        }
        direct = direct.scale(&rat(1, 1 << d));
        assert_eq!(iterated, direct);
    }

    #[test]
    fn subgroup_inclusions_show_in_counts() {
        // Invariants grow when the group shrinks: SO inside O, UT and Sp
        // inside SL.
        let order = 6;
        for d in [2usize, 3, 4] {
            let table = symmetric_algebra_table(d, order);
            let o_series = filter_invariants(&table, &o(d)).unwrap();
            let so_series = filter_invariants(&table, &so(d)).unwrap();
            let sl_series = filter_invariants(&table, &sl(d)).unwrap();
            let ut_series = filter_invariants(&table, &ut(d)).unwrap();
            for n in 0..=order {
                assert!(so_series.coeffs[n] >= o_series.coeffs[n]);
                assert!(ut_series.coeffs[n] >= sl_series.coeffs[n]);
            }
            if d % 2 == 0 {
                let sp_series = filter_invariants(&table, &sp(d)).unwrap();
                for n in 0..=order {
                    assert!(sp_series.coeffs[n] >= sl_series.coeffs[n]);
                }
            }
        }
    }

    #[test]
    fn display_names_groups_with_dimension() {
        assert_eq!(sp(4).to_string(), "Sp_4");
        assert_eq!(so(3).to_string(), "SO_3");
        assert_eq!(ut(2).to_string(), "UT_2");
    }
}
