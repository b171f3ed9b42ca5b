//! JSON encodings for every value the crate exchanges with files and
//! pipes.
//!
//! Conventions, kept stable so equal values always serialize to equal
//! bytes:
//!
//! - rationals are `{"num": "...", "den": "..."}` with decimal string
//!   payloads, so arbitrarily large values survive the trip;
//! - exponent tuples and partitions are plain integer arrays;
//! - term lists are sorted canonically (polynomials by the internal
//!   monomial order, tables by degree then decreasing lexicographic
//!   partition order), never by insertion order.
//!
//! Deserialization validates shape invariants (variable counts, factor
//! exponents, table bounds) and reports violations as errors rather
//! than panicking.

use crate::error::{Error, Result};
use crate::invariants::{GroupSpec, InvariantSeries};
use crate::multiplicity::MultTable;
use crate::polyring::{DenomFactor, GradedSeries, Monomial, Rat, RationalForm, RationalTerm, TPoly, ZPoly};
use crate::symfunc::{Partition, SchurExpansion};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Serializes any crate value as pretty-printed JSON with a trailing
/// newline.
pub fn to_pretty_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Json(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Parses a crate value from JSON text.
pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct RatJson {
    num: String,
    den: String,
}

impl From<&Rat> for RatJson {
    fn from(r: &Rat) -> Self {
        RatJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<RatJson> for Rat {
    type Error = Error;

    fn try_from(j: RatJson) -> Result<Rat> {
        let num: BigInt = j
            .num
            .parse()
            .map_err(|_| Error::Json(format!("bad numerator '{}'", j.num)))?;
        let den: BigInt = j
            .den
            .parse()
            .map_err(|_| Error::Json(format!("bad denominator '{}'", j.den)))?;
        if den == BigInt::from(0) {
            return Err(Error::Json("zero denominator".into()));
        }
        Ok(Rat::new(num, den))
    }
}

fn de_err<'de, D: Deserializer<'de>>(e: Error) -> D::Error {
    serde::de::Error::custom(e)
}

#[derive(Serialize, Deserialize)]
struct TPolyTermJson {
    exponents: Vec<u32>,
    coeff: RatJson,
}

#[derive(Serialize, Deserialize)]
struct TPolyJson {
    nvars: usize,
    terms: Vec<TPolyTermJson>,
}

impl From<&TPoly> for TPolyJson {
    fn from(p: &TPoly) -> Self {
        TPolyJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(m, c)| TPolyTermJson {
                    exponents: m.exponents().to_vec(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<TPolyJson> for TPoly {
    type Error = Error;

    fn try_from(j: TPolyJson) -> Result<TPoly> {
        let mut p = TPoly::zero(j.nvars);
        for term in j.terms {
            if term.exponents.len() != j.nvars {
                return Err(Error::Json(format!(
                    "exponent tuple {:?} does not have {} entries",
                    term.exponents, j.nvars
                )));
            }
            p.add_term(Monomial::new(term.exponents), term.coeff.try_into()?);
        }
        Ok(p)
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TPolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        TPolyJson::deserialize(d)?.try_into().map_err(de_err::<D>)
    }
}

#[derive(Serialize, Deserialize)]
struct GradedSeriesJson {
    nvars: usize,
    order: usize,
    coeffs: Vec<TPolyJson>,
}

impl Serialize for GradedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradedSeriesJson {
            nvars: self.nvars(),
            order: self.order(),
            coeffs: self.coeffs().iter().map(TPolyJson::from).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GradedSeriesJson::deserialize(d)?;
        if j.coeffs.len() != j.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "series of order {} must list {} coefficients, found {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            )));
        }
        let nvars = j.nvars;
        let coeffs: Result<Vec<TPoly>> = j.coeffs.into_iter().map(TPoly::try_from).collect();
        let coeffs = coeffs.map_err(de_err::<D>)?;
        for c in &coeffs {
            if c.nvars() != nvars {
                return Err(serde::de::Error::custom(Error::VarMismatch {
                    expected: nvars,
                    found: c.nvars(),
                }));
            }
        }
        Ok(GradedSeries::from_coeffs(nvars, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct DenomFactorJson {
    monomial: Vec<u32>,
    zpow: usize,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct RationalTermJson {
    scalar: RatJson,
    numerator: Vec<TPolyJson>,
    denominators: Vec<DenomFactorJson>,
}

#[derive(Serialize, Deserialize)]
struct RationalFormJson {
    nvars: usize,
    terms: Vec<RationalTermJson>,
}

impl Serialize for RationalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFormJson {
            nvars: self.nvars(),
            terms: self
                .terms()
                .iter()
                .map(|t| RationalTermJson {
                    scalar: (&t.scalar).into(),
                    numerator: t.numerator.coeffs().iter().map(TPolyJson::from).collect(),
                    denominators: t
                        .denominators
                        .iter()
                        .map(|f| DenomFactorJson {
                            monomial: f.monomial().exponents().to_vec(),
                            zpow: f.zpow(),
                            mult: f.mult(),
                        })
                        .collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RationalFormJson::deserialize(d)?;
        let nvars = j.nvars;
        let mut terms = Vec::new();
        for term in j.terms {
            let scalar: Rat = term.scalar.try_into().map_err(de_err::<D>)?;
            let coeffs: Result<Vec<TPoly>> =
                term.numerator.into_iter().map(TPoly::try_from).collect();
            let coeffs = coeffs.map_err(de_err::<D>)?;
            for c in &coeffs {
                if c.nvars() != nvars {
                    return Err(serde::de::Error::custom(Error::VarMismatch {
                        expected: nvars,
                        found: c.nvars(),
                    }));
                }
            }
            let numerator = ZPoly::from_coeffs(nvars, coeffs);
            let mut denominators = Vec::new();
            for f in term.denominators {
                if f.monomial.len() != nvars {
                    return Err(serde::de::Error::custom(Error::VarMismatch {
                        expected: nvars,
                        found: f.monomial.len(),
                    }));
                }
                if f.zpow == 0 || f.mult == 0 {
                    return Err(serde::de::Error::custom(
                        "denominator factors need zpow >= 1 and mult >= 1",
                    ));
                }
                denominators.push(DenomFactor::new(Monomial::new(f.monomial), f.zpow, f.mult));
            }
            terms.push(RationalTerm::new(scalar, numerator, denominators));
        }
        Ok(RationalForm::from_terms(nvars, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct SchurTermJson {
    partition: Vec<u32>,
    mult: RatJson,
}

#[derive(Serialize, Deserialize)]
struct SchurExpansionJson {
    degree: usize,
    nvars: usize,
    terms: Vec<SchurTermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<(&Partition, &Rat)> = self.multiplicities.iter().collect();
        terms.sort_by(|a, b| b.0.parts().cmp(a.0.parts()));
        SchurExpansionJson {
            degree: self.degree,
            nvars: self.nvars,
            terms: terms
                .into_iter()
                .map(|(l, m)| SchurTermJson {
                    partition: l.parts().to_vec(),
                    mult: m.into(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SchurExpansionJson::deserialize(d)?;
        let mut multiplicities = std::collections::BTreeMap::new();
        for term in j.terms {
            let lambda = Partition::new(term.partition).map_err(de_err::<D>)?;
            if lambda.size() != j.degree {
                return Err(serde::de::Error::custom(format!(
                    "partition {lambda} does not have size {}",
                    j.degree
                )));
            }
            if lambda.len() > j.nvars {
                return Err(serde::de::Error::custom(Error::PartitionTooLong {
                    partition: lambda,
                    d: j.nvars,
                }));
            }
            let mult: Rat = term.mult.try_into().map_err(de_err::<D>)?;
            if multiplicities.insert(lambda, mult).is_some() {
                return Err(serde::de::Error::custom("duplicate partition"));
            }
        }
        Ok(SchurExpansion {
            degree: j.degree,
            nvars: j.nvars,
            multiplicities,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct MultEntryJson {
    n: usize,
    partition: Vec<u32>,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct MultTableJson {
    nvars: usize,
    order: usize,
    entries: Vec<MultEntryJson>,
}

impl Serialize for MultTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultTableJson {
            nvars: self.nvars(),
            order: self.order(),
            entries: self
                .entries_display_order()
                .into_iter()
                .map(|(n, l, m)| MultEntryJson {
                    n,
                    partition: l.parts().to_vec(),
                    mult: m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MultTableJson::deserialize(d)?;
        let mut table = MultTable::new(j.nvars, j.order);
        for e in j.entries {
            let lambda = Partition::new(e.partition).map_err(de_err::<D>)?;
            if e.n > j.order {
                return Err(serde::de::Error::custom(format!(
                    "entry degree {} exceeds table order {}",
                    e.n, j.order
                )));
            }
            if lambda.len() > j.nvars {
                return Err(serde::de::Error::custom(Error::PartitionTooLong {
                    partition: lambda,
                    d: j.nvars,
                }));
            }
            if table.get(e.n, &lambda) != 0 {
                return Err(serde::de::Error::custom("duplicate table entry"));
            }
            table.insert(e.n, lambda, e.mult);
        }
        Ok(table)
    }
}

#[derive(Serialize, Deserialize)]
struct InvariantSeriesJson {
    group: GroupSpec,
    order: usize,
    coeffs: Vec<u64>,
}

impl Serialize for InvariantSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InvariantSeriesJson {
            group: self.group,
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InvariantSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = InvariantSeriesJson::deserialize(d)?;
        if j.coeffs.len() != j.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "series of order {} must list {} coefficients, found {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            )));
        }
        Ok(InvariantSeries {
            group: j.group,
            coeffs: j.coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{hilbert_form, AlgebraFamily, AlgebraSpec};
    use crate::invariants::GroupKind;
    use crate::polyring::{rat, rat_int};
    use crate::regrade::ModuleSpec;
    use crate::symfunc::schur_decompose;

    fn round_trip<T>(value: &T) -> T
    where
        T: Serialize + DeserializeOwned,
    {
        from_str(&to_pretty_string(value).unwrap()).unwrap()
    }

    #[test]
    fn rationals_use_decimal_strings() {
        let p = TPoly::constant(0, rat(-7, 3));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"nvars":0,"terms":[{"exponents":[],"coeff":{"num":"-7","den":"3"}}]}"#
        );
        assert_eq!(round_trip(&p), p);
    }

    #[test]
    fn tpoly_round_trips_and_validates() {
        let p = TPoly::from_terms(
            2,
            [
                (Monomial::new(vec![2, 0]), rat_int(1)),
                (Monomial::new(vec![0, 1]), rat(-1, 2)),
            ],
        );
        assert_eq!(round_trip(&p), p);

        let bad = r#"{"nvars":2,"terms":[{"exponents":[1],"coeff":{"num":"1","den":"1"}}]}"#;
        assert!(from_str::<TPoly>(bad).is_err());
        let bad_den = r#"{"nvars":0,"terms":[{"exponents":[],"coeff":{"num":"1","den":"0"}}]}"#;
        assert!(from_str::<TPoly>(bad_den).is_err());
    }

    #[test]
    fn series_round_trips_and_checks_length() {
        let s = hilbert_form(&AlgebraSpec::new(AlgebraFamily::Grassmann, 2)).expand(4);
        assert_eq!(round_trip(&s), s);

        let bad = r#"{"nvars":0,"order":2,"coeffs":[{"nvars":0,"terms":[]}]}"#;
        assert!(from_str::<GradedSeries>(bad).is_err());
    }

    #[test]
    fn rational_form_round_trips() {
        for family in [AlgebraFamily::Grassmann, AlgebraFamily::UpperTriangular2] {
            let f = hilbert_form(&AlgebraSpec::new(family, 3));
            assert_eq!(round_trip(&f), f);
        }
        let bad = r#"{"nvars":1,"terms":[{"scalar":{"num":"1","den":"1"},"numerator":[],"denominators":[{"monomial":[1],"zpow":0,"mult":1}]}]}"#;
        assert!(from_str::<RationalForm>(bad).is_err());
    }

    #[test]
    fn schur_expansion_lists_partitions_in_decreasing_order() {
        let square = {
            let p = &TPoly::variable(2, 0) + &TPoly::variable(2, 1);
            &p * &p
        };
        let e = schur_decompose(&square).unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            concat!(
                r#"{"degree":2,"nvars":2,"terms":["#,
                r#"{"partition":[2],"mult":{"num":"1","den":"1"}},"#,
                r#"{"partition":[1,1],"mult":{"num":"1","den":"1"}}]}"#
            )
        );
        assert_eq!(round_trip(&e), e);

        let bad_size = r#"{"degree":3,"nvars":2,"terms":[{"partition":[2],"mult":{"num":"1","den":"1"}}]}"#;
        assert!(from_str::<SchurExpansion>(bad_size).is_err());
    }

    #[test]
    fn mult_table_entries_sort_by_degree_then_declex() {
        let mut t = MultTable::new(2, 3);
        t.insert(2, Partition::of(&[1, 1]), 1);
        t.insert(2, Partition::of(&[2]), 3);
        t.insert(0, Partition::empty(), 1);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"nvars":2,"order":3,"entries":["#,
                r#"{"n":0,"partition":[],"mult":1},"#,
                r#"{"n":2,"partition":[2],"mult":3},"#,
                r#"{"n":2,"partition":[1,1],"mult":1}]}"#
            )
        );
        assert_eq!(round_trip(&t), t);

        let bad = r#"{"nvars":2,"order":1,"entries":[{"n":2,"partition":[2],"mult":1}]}"#;
        assert!(from_str::<MultTable>(bad).is_err());
        let too_long = r#"{"nvars":1,"order":3,"entries":[{"n":2,"partition":[1,1],"mult":1}]}"#;
        assert!(from_str::<MultTable>(too_long).is_err());
        let not_partition = r#"{"nvars":2,"order":3,"entries":[{"n":2,"partition":[1,2],"mult":1}]}"#;
        assert!(from_str::<MultTable>(not_partition).is_err());
    }

    #[test]
    fn invariant_series_json_shape() {
        let s = InvariantSeries {
            group: GroupSpec::new(GroupKind::Sp, 4),
            coeffs: vec![1, 0, 1],
        };
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"group":{"kind":"Sp","d":4},"order":2,"coeffs":[1,0,1]}"#
        );
        assert_eq!(round_trip(&s), s);

        let bad = r#"{"group":{"kind":"O","d":2},"order":3,"coeffs":[1]}"#;
        assert!(from_str::<InvariantSeries>(bad).is_err());
    }

    #[test]
    fn spec_types_use_expected_field_names() {
        let a: AlgebraSpec = from_str(r#"{"family":"grassmann","m":3}"#).unwrap();
        assert_eq!(a, AlgebraSpec::new(AlgebraFamily::Grassmann, 3));
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"family":"grassmann","m":3}"#
        );
        let b: AlgebraSpec = from_str(r#"{"family":"ut2","m":4}"#).unwrap();
        assert_eq!(b.family, AlgebraFamily::UpperTriangular2);

        let m: ModuleSpec = from_str(r#"{"d":2,"summands":[{"partition":[2],"mult":1}]}"#).unwrap();
        assert_eq!(m.d, 2);
        assert_eq!(m.summands.len(), 1);
        assert_eq!(m.summands[0].partition, Partition::of(&[2]));

        let g: GroupSpec = from_str(r#"{"kind":"UT","d":5}"#).unwrap();
        assert_eq!(g, GroupSpec::new(GroupKind::UT, 5));
    }

    #[test]
    fn pretty_output_is_stable() {
        let t = crate::algebras::known_table(&AlgebraSpec::new(AlgebraFamily::Grassmann, 2), 4);
        let a = to_pretty_string(&t).unwrap();
        let b = to_pretty_string(&round_trip(&t)).unwrap();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
