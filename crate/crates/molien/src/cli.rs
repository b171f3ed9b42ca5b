//! Job configuration, report types and the drivers behind the command
//! line, plus the bundled catalog of reference series.
//!
//! A job names a source series (a built-in algebra family or an inline
//! expression), an optional regrading module, the groups to compute
//! invariants for, and optional reference series to compare against.
//! Drivers always obtain invariant series through the dual check, so
//! every reported value has been computed twice by independent routes.
//!
//! Exit status convention, shared by all drivers: reports know whether
//! they `passed`; callers map a failed report to status 1 and a
//! configuration error (unreadable or ill-formed input) to status 2.

use crate::algebras::{hilbert_form, AlgebraSpec};
use crate::error::{Error, Result};
use crate::invariants::{dual_check, GroupSpec, InvariantSeries};
use crate::json;
use crate::multiplicity::{multiplicity_table, MultTable};
use crate::parse::parse_form;
use crate::polyring::{GradedSeries, Rat, RationalForm};
use crate::regrade::{module_weights, regrade_form, ModuleSpec};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::rc::Rc;
use std::sync::OnceLock;

/// Truncation order used when neither the command line, the job config
/// nor [`ORDER_ENV_VAR`] specifies one.
pub const DEFAULT_ORDER: usize = 16;

/// Environment variable overriding the default truncation order.
pub const ORDER_ENV_VAR: &str = "MOLIEN_ORDER";

/// Resolves the truncation order: a command line value wins over a
/// config value, which wins over the environment, which wins over
/// [`DEFAULT_ORDER`].
pub fn resolve_order(cli: Option<usize>, config: Option<usize>) -> Result<usize> {
    if let Some(n) = cli {
        return Ok(n);
    }
    if let Some(n) = config {
        return Ok(n);
    }
    match std::env::var(ORDER_ENV_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::Config(format!(
                "{ORDER_ENV_VAR} must be a nonnegative integer, found '{text}'"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::Config(format!(
            "{ORDER_ENV_VAR} is not valid unicode"
        ))),
    }
}

/// An inline source series given as an expression in `nvars` grading
/// variables.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineForm {
    pub nvars: usize,
    pub expr: String,
}

/// Where the source series comes from.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceSpec {
    /// A built-in algebra family, e.g. `{"algebra": {"family": "grassmann", "m": 4}}`.
    Algebra(AlgebraSpec),
    /// An expression, e.g. `{"form": {"nvars": 2, "expr": "1/((1 - t1*z)*(1 - t2*z))"}}`.
    Form(InlineForm),
}

/// A reference series for one group, as an expression in `z` alone.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub group: GroupSpec,
    pub form: String,
}

/// One unit of work for the command line drivers.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub source: SourceSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regrade: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub groups: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<Expectation>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<JobConfig> {
        json::from_str(text)
    }
}

/// A source series carried through the pipeline: the closed form after
/// any regrading, its truncated expansion, and the multiplicity table
/// of the expansion.
#[derive(Clone, Debug)]
pub struct PreparedSource {
    pub form: RationalForm,
    pub series: GradedSeries,
    pub table: MultTable,
}

fn config_err(e: Error) -> Error {
    match e {
        e if e.is_config() => e,
        other => Error::Config(other.to_string()),
    }
}

/// Builds the closed form of a source, applies the regrading and
/// decomposes the expansion into a multiplicity table. Errors caused by
/// ill-formed inputs (bad expressions, mismatched module dimensions)
/// are reported as configuration errors; a series that fails to
/// decompose into nonnegative integer Schur multiplicities is a data
/// error instead.
pub fn prepare_source(
    source: &SourceSpec,
    regrade: Option<&ModuleSpec>,
    order: usize,
) -> Result<PreparedSource> {
    let base = match source {
        SourceSpec::Algebra(spec) => {
            if spec.m == 0 {
                return Err(Error::Config("an algebra needs at least one generator".into()));
            }
            hilbert_form(spec)
        }
        SourceSpec::Form(inline) => parse_form(&inline.expr, inline.nvars)?,
    };
    let form = match regrade {
        Some(module) => {
            let weights = module_weights(module).map_err(config_err)?;
            regrade_form(&base, &weights).map_err(config_err)?
        }
        None => base,
    };
    let series = form.expand(order);
    let table = multiplicity_table(&series)?;
    Ok(PreparedSource {
        form,
        series,
        table,
    })
}

/// One coefficient where a computed series differs from its reference.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Delta {
    pub degree: usize,
    pub reference: String,
    pub computed: String,
}

fn deltas_against(expected: &GradedSeries, computed: &InvariantSeries) -> Result<Vec<Delta>> {
    let reference = expected.scalar_coeffs()?;
    let mut deltas = Vec::new();
    for (n, r) in reference.iter().enumerate().take(computed.coeffs.len()) {
        let c = Rat::from_integer(computed.coeffs[n].into());
        if *r != c {
            deltas.push(Delta {
                degree: n,
                reference: r.to_string(),
                computed: computed.coeffs[n].to_string(),
            });
        }
    }
    Ok(deltas)
}

fn checked_invariants(table: &MultTable, group: &GroupSpec) -> Result<InvariantSeries> {
    dual_check(table, group).map_err(|e| match e {
        Error::VarMismatch { .. } | Error::SpOddDimension { .. } => Error::Config(e.to_string()),
        other => other,
    })
}

fn render_counting(coeffs: &[u64], order: usize) -> String {
    let mut parts = Vec::new();
    for (n, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (n, c) {
            (0, c) => c.to_string(),
            (1, 1) => "z".into(),
            (1, c) => format!("{c}*z"),
            (n, 1) => format!("z^{n}"),
            (n, c) => format!("{c}*z^{n}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        parts.push("0".into());
    }
    format!("{} + O(z^{})", parts.join(" + "), order + 1)
}

/// Result of comparing one group's series against a reference.
#[derive(Clone, Debug, Serialize)]
pub struct ExpectationReport {
    pub matched: bool,
    pub deltas: Vec<Delta>,
}

/// Invariant series for one group, with the optional reference
/// comparison.
#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub series: InvariantSeries,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expectation: Option<ExpectationReport>,
}

/// Output of the `invariants` driver.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub order: usize,
    pub results: Vec<GroupReport>,
}

impl InvariantsReport {
    pub fn passed(&self) -> bool {
        self.results
            .iter()
            .all(|r| r.expectation.as_ref().is_none_or(|e| e.matched))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        for r in &self.results {
            let _ = writeln!(
                out,
                "{}: {}",
                r.series.group,
                render_counting(&r.series.coeffs, self.order)
            );
            if let Some(e) = &r.expectation {
                if e.matched {
                    let _ = writeln!(out, "  reference: match");
                } else {
                    let _ = writeln!(out, "  reference: MISMATCH");
                    for d in &e.deltas {
                        let _ = writeln!(
                            out,
                            "    z^{}: reference {}, computed {}",
                            d.degree, d.reference, d.computed
                        );
                    }
                }
            }
        }
        out
    }
}

/// Computes the dual-checked invariant series of every group in the
/// config and compares against any reference expressions.
pub fn invariants_run(config: &JobConfig, order: usize) -> Result<InvariantsReport> {
    if config.groups.is_empty() {
        return Err(Error::Config(
            "the invariants job needs at least one group".into(),
        ));
    }
    let prepared = prepare_source(&config.source, config.regrade.as_ref(), order)?;
    let mut results = Vec::new();
    for group in &config.groups {
        let series = checked_invariants(&prepared.table, group)?;
        let expectation = match config.expected.iter().find(|e| e.group == *group) {
            Some(e) => {
                let reference = parse_form(&e.form, 0)?.expand(order);
                let deltas = deltas_against(&reference, &series)?;
                Some(ExpectationReport {
                    matched: deltas.is_empty(),
                    deltas,
                })
            }
            None => None,
        };
        results.push(GroupReport {
            series,
            expectation,
        });
    }
    Ok(InvariantsReport { order, results })
}

/// Output of the `decompose` driver: the multiplicity table of the
/// source with both of its generating series.
#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub order: usize,
    pub table: MultTable,
    pub m_series: GradedSeries,
    pub mprime_series: GradedSeries,
}

impl DecomposeReport {
    pub fn passed(&self) -> bool {
        true
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "variables: {}", self.table.nvars());
        let _ = writeln!(out, "multiplicity table:");
        let entries = self.table.entries_display_order();
        for n in 0..=self.table.order() {
            let row: Vec<String> = entries
                .iter()
                .filter(|(k, _, _)| *k == n)
                .map(|(_, lambda, mult)| format!("{lambda} x{mult}"))
                .collect();
            if !row.is_empty() {
                let _ = writeln!(out, "  z^{n}: {}", row.join(", "));
            }
        }
        let _ = writeln!(out, "M  = {}", self.m_series.render("t"));
        let _ = writeln!(out, "M' = {}", self.mprime_series.render("u"));
        out
    }
}

/// Decomposes the source series into its multiplicity table and the
/// `M` and `M'` series.
pub fn decompose_run(config: &JobConfig, order: usize) -> Result<DecomposeReport> {
    let prepared = prepare_source(&config.source, config.regrade.as_ref(), order)?;
    Ok(DecomposeReport {
        order,
        m_series: prepared.table.to_m_series(),
        mprime_series: prepared.table.to_mprime_series(),
        table: prepared.table,
    })
}

/// One reference series bundled with the crate.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogItem {
    pub id: String,
    pub title: String,
    pub source: SourceSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regrade: Option<ModuleSpec>,
    pub group: GroupSpec,
    /// The reference series as an expression in `z`.
    pub expected: String,
    /// True when the reference was transcribed from a source with
    /// suspected misprints; differences are then reported without
    /// failing the run, as long as the dual check itself passes.
    #[serde(default)]
    pub suspect: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub items: Vec<CatalogItem>,
}

/// The catalog bundled into the binary.
pub fn builtin_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        json::from_str(include_str!("../data/catalog.json")).expect("bundled catalog parses")
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    /// Dual check passed and the computed series equals the reference.
    Pass,
    /// Dual check passed; differences against a suspect reference are
    /// listed as deltas.
    Note,
    /// Dual check failed, the computation errored, or a non-suspect
    /// reference disagrees.
    Fail,
}

/// Outcome of recomputing one catalog item.
#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub id: String,
    pub title: String,
    pub group: GroupSpec,
    pub suspect: bool,
    pub status: ItemStatus,
    pub reference: Vec<String>,
    pub computed: Vec<u64>,
    pub deltas: Vec<Delta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Outcome of recomputing the whole catalog.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub order: usize,
    pub passed: bool,
    pub items: Vec<ItemReport>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        let mut pass = 0usize;
        let mut note = 0usize;
        let mut fail = 0usize;
        for item in &self.items {
            let word = match item.status {
                ItemStatus::Pass => {
                    pass += 1;
                    "PASS"
                }
                ItemStatus::Note => {
                    note += 1;
                    "NOTE"
                }
                ItemStatus::Fail => {
                    fail += 1;
                    "FAIL"
                }
            };
            let _ = writeln!(out, "{word} {} [{}] {}", item.id, item.group, item.title);
            for d in &item.deltas {
                let _ = writeln!(
                    out,
                    "     z^{}: reference {}, computed {}",
                    d.degree, d.reference, d.computed
                );
            }
            if let Some(e) = &item.error {
                let _ = writeln!(out, "     error: {e}");
            }
        }
        let _ = writeln!(
            out,
            "summary: {} items, {pass} pass, {note} noted, {fail} fail",
            self.items.len()
        );
        out
    }
}

fn source_key(source: &SourceSpec, regrade: Option<&ModuleSpec>) -> String {
    serde_json::to_string(&(source, regrade)).expect("specs serialize")
}

/// Recomputes every catalog item at the given order: prepares each
/// distinct source once, runs the dual check, and compares against the
/// reference expansion.
pub fn run_catalog(catalog: &Catalog, order: usize) -> CatalogReport {
    let mut cache: HashMap<String, Rc<std::result::Result<PreparedSource, String>>> =
        HashMap::new();
    let mut items = Vec::new();
    for item in &catalog.items {
        let key = source_key(&item.source, item.regrade.as_ref());
        let prepared = cache
            .entry(key)
            .or_insert_with(|| {
                Rc::new(
                    prepare_source(&item.source, item.regrade.as_ref(), order)
                        .map_err(|e| e.to_string()),
                )
            })
            .clone();
        let mut report = ItemReport {
            id: item.id.clone(),
            title: item.title.clone(),
            group: item.group,
            suspect: item.suspect,
            status: ItemStatus::Fail,
            reference: Vec::new(),
            computed: Vec::new(),
            deltas: Vec::new(),
            error: None,
            note: item.note.clone(),
        };
        let outcome = (|| -> Result<(Vec<Rat>, InvariantSeries)> {
            let prepared = match prepared.as_ref() {
                Ok(p) => p,
                Err(msg) => return Err(Error::Config(msg.clone())),
            };
            let series = checked_invariants(&prepared.table, &item.group)?;
            let reference = parse_form(&item.expected, 0)?.expand(order).scalar_coeffs()?;
            Ok((reference, series))
        })();
        match outcome {
            Ok((reference, series)) => {
                report.reference = reference.iter().map(|r| r.to_string()).collect();
                report.computed = series.coeffs.clone();
                for (n, r) in reference.iter().enumerate().take(series.coeffs.len()) {
                    let c = Rat::from_integer(series.coeffs[n].into());
                    if *r != c {
                        report.deltas.push(Delta {
                            degree: n,
                            reference: r.to_string(),
                            computed: series.coeffs[n].to_string(),
                        });
                    }
                }
                report.status = if report.deltas.is_empty() {
                    ItemStatus::Pass
                } else if item.suspect {
                    ItemStatus::Note
                } else {
                    ItemStatus::Fail
                };
            }
            Err(e) => {
                report.error = Some(e.to_string());
                report.status = ItemStatus::Fail;
            }
        }
        items.push(report);
    }
    let passed = items.iter().all(|i| i.status != ItemStatus::Fail);
    CatalogReport {
        order,
        passed,
        items,
    }
}

/// Runs the bundled catalog.
pub fn reproduce_run(order: usize) -> CatalogReport {
    run_catalog(builtin_catalog(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::GroupKind;

    fn job(text: &str) -> JobConfig {
        JobConfig::from_json(text).unwrap()
    }

    #[test]
    fn config_parses_both_source_kinds() {
        let a = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 4}},
            "groups": [{"kind": "Sp", "d": 4}]
        }"#);
        assert!(matches!(a.source, SourceSpec::Algebra(_)));
        assert!(a.regrade.is_none());
        assert_eq!(a.order, None);

        let b = job(r#"{
            "source": {"form": {"nvars": 2, "expr": "1/((1 - t1*z)*(1 - t2*z))"}},
            "regrade": {"d": 2, "summands": [{"partition": [1], "mult": 1}]},
            "groups": [{"kind": "O", "d": 2}],
            "order": 8,
            "expected": [{"group": {"kind": "O", "d": 2}, "form": "1/(1 - z^2)"}]
        }"#);
        assert!(matches!(b.source, SourceSpec::Form(_)));
        assert_eq!(b.order, Some(8));
        assert_eq!(b.expected.len(), 1);
    }

    #[test]
    fn unknown_config_fields_are_rejected() {
        let bad = JobConfig::from_json(
            r#"{"source": {"algebra": {"family": "grassmann", "m": 2}}, "grups": []}"#,
        );
        assert!(matches!(bad, Err(Error::Json(_))));
    }

    #[test]
    fn invariants_driver_checks_expectations() {
        let config = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 2}},
            "groups": [{"kind": "O", "d": 2}, {"kind": "SO", "d": 2}],
            "expected": [
                {"group": {"kind": "O", "d": 2}, "form": "1/(1 - z^2)"},
                {"group": {"kind": "SO", "d": 2}, "form": "1/(1 - z^2)"}
            ]
        }"#);
        let report = invariants_run(&config, 8).unwrap();
        assert_eq!(report.results.len(), 2);
        assert!(report.results[0].expectation.as_ref().unwrap().matched);
        let so = report.results[1].expectation.as_ref().unwrap();
        assert!(!so.matched);
        assert_eq!(so.deltas[0].degree, 2);
        assert_eq!(so.deltas[0].reference, "1");
        assert_eq!(so.deltas[0].computed, "2");
        assert!(!report.passed());

        let text = report.render_text();
        assert!(text.contains("O_2: 1 + z^2 + z^4 + z^6 + z^8 + O(z^9)"));
        assert!(text.contains("MISMATCH"));
    }

    #[test]
    fn invariants_driver_requires_groups() {
        let config = job(r#"{"source": {"algebra": {"family": "grassmann", "m": 2}}}"#);
        let err = invariants_run(&config, 4).unwrap_err();
        assert!(err.is_config());
    }

    #[test]
    fn mismatched_group_dimension_is_a_config_error() {
        let config = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 2}},
            "groups": [{"kind": "O", "d": 3}]
        }"#);
        let err = invariants_run(&config, 4).unwrap_err();
        assert!(err.is_config());

        let odd = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 3}},
            "groups": [{"kind": "Sp", "d": 3}]
        }"#);
        assert!(invariants_run(&odd, 4).unwrap_err().is_config());
    }

    #[test]
    fn decompose_driver_reports_table_and_series() {
        let config = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 3}},
            "regrade": {"d": 2, "summands": [{"partition": [2], "mult": 1}]}
        }"#);
        let report = decompose_run(&config, 2).unwrap();
        assert_eq!(report.table.nvars(), 2);
        assert_eq!(report.table.get(2, &crate::symfunc::Partition::of(&[3, 1])), 1);
        let text = report.render_text();
        assert!(text.contains("z^2: (4) x1, (3,1) x1, (2,2) x1"));
        assert!(text.contains("M  = "));
        assert!(text.contains("M' = "));
    }

    #[test]
    fn inline_form_source_matches_builtin_algebra() {
        let inline = job(r#"{
            "source": {"form": {"nvars": 1, "expr": "1/2 + (1 + t1*z)/(2*(1 - t1*z))"}},
            "groups": [{"kind": "UT", "d": 1}]
        }"#);
        let builtin = job(r#"{
            "source": {"algebra": {"family": "grassmann", "m": 1}},
            "groups": [{"kind": "UT", "d": 1}]
        }"#);
        let a = invariants_run(&inline, 6).unwrap();
        let b = invariants_run(&builtin, 6).unwrap();
        assert_eq!(a.results[0].series, b.results[0].series);
    }

    #[test]
    fn bad_inline_expression_is_a_config_error() {
        let config = job(r#"{
            "source": {"form": {"nvars": 1, "expr": "1/(1 + t1*z)"}},
            "groups": [{"kind": "UT", "d": 1}]
        }"#);
        assert!(invariants_run(&config, 4).unwrap_err().is_config());
    }

    #[test]
    fn asymmetric_inline_source_is_a_data_error() {
        let config = job(r#"{
            "source": {"form": {"nvars": 2, "expr": "1/(1 - t1*z)"}},
            "groups": [{"kind": "O", "d": 2}]
        }"#);
        let err = invariants_run(&config, 4).unwrap_err();
        assert!(!err.is_config());
        assert!(matches!(err, Error::CoefficientNotSymmetric { .. }));
    }

    #[test]
    fn order_resolution_prefers_cli_then_config() {
        assert_eq!(resolve_order(Some(5), Some(9)).unwrap(), 5);
        assert_eq!(resolve_order(None, Some(9)).unwrap(), 9);
    }

    #[test]
    fn builtin_catalog_is_well_formed() {
        let catalog = builtin_catalog();
        assert!(catalog.items.len() >= 50);
        let mut ids = std::collections::BTreeSet::new();
        for item in &catalog.items {
            assert!(ids.insert(item.id.clone()), "duplicate id {}", item.id);
            parse_form(&item.expected, 0).unwrap();
            if let Some(module) = &item.regrade {
                assert_eq!(module.d, item.group.d, "{}", item.id);
            }
        }
        assert!(catalog
            .items
            .iter()
            .any(|i| i.group == GroupSpec::new(GroupKind::Sp, 6)));
        assert!(catalog.items.iter().any(|i| i.suspect));
    }

    #[test]
    fn catalog_runner_flags_reference_mismatches() {
        let base = CatalogItem {
            id: "probe-pass".into(),
            title: "probe".into(),
            source: SourceSpec::Algebra(AlgebraSpec::new(
                crate::algebras::AlgebraFamily::Grassmann,
                2,
            )),
            regrade: None,
            group: GroupSpec::new(GroupKind::O, 2),
            expected: "1/(1 - z^2)".into(),
            suspect: false,
            note: None,
        };
        let mut wrong = base.clone();
        wrong.id = "probe-fail".into();
        wrong.expected = "1/(1 - z)".into();
        let mut noted = wrong.clone();
        noted.id = "probe-note".into();
        noted.suspect = true;
        let catalog = Catalog {
            items: vec![base, wrong, noted],
        };
        let report = run_catalog(&catalog, 6);
        assert_eq!(report.items[0].status, ItemStatus::Pass);
        assert_eq!(report.items[1].status, ItemStatus::Fail);
        assert_eq!(report.items[2].status, ItemStatus::Note);
        assert_eq!(report.items[1].deltas[0].degree, 1);
        assert!(!report.passed());

        let text = report.render_text();
        assert!(text.contains("PASS probe-pass"));
        assert!(text.contains("FAIL probe-fail"));
        assert!(text.contains("NOTE probe-note"));
        assert!(text.contains("summary: 3 items, 1 pass, 1 noted, 1 fail"));
    }

    #[test]
    fn catalog_runner_survives_broken_items() {
        let item = CatalogItem {
            id: "probe-broken".into(),
            title: "probe".into(),
            source: SourceSpec::Form(InlineForm {
                nvars: 1,
                expr: "1/(".into(),
            }),
            regrade: None,
            group: GroupSpec::new(GroupKind::UT, 1),
            expected: "1".into(),
            suspect: false,
            note: None,
        };
        let report = run_catalog(
            &Catalog {
                items: vec![item],
            },
            4,
        );
        assert_eq!(report.items[0].status, ItemStatus::Fail);
        assert!(report.items[0].error.is_some());
        assert!(!report.passed());
    }
}
