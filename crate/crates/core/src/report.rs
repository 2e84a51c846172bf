//! Analysis pipeline and its serializable reports.
//!
//! Reports are byte-stable for a fixed input and configuration: maps are
//! ordered, rationals are rendered as strings and wall-clock timings are only
//! recorded on request.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    self, central_generators, hilbert_series, koszul_complex_check, CertificateField, HilbertReport,
    KoszulExactnessReport, QuadraticPresentation, TripleDerivation,
};
use crate::error::{Error, Result};
use crate::field::{format_rational, PrimeField, Rational, DEFAULT_PRIMES};
use crate::forms::{fixed_catalog, CatalogName, ExteriorThreeForm, FormFile, LoadedForm};
use crate::matrix::Matrix;
use crate::random::DEFAULT_SEED;
use crate::regularity::{self, LieClosureReport, RegularityVerdict};

pub const SCHEMA_VERSION: u32 = 1;
pub const WEDGE_TRIALS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisConfig {
    /// Truncation degree of the Hilbert series.
    pub max_degree: usize,
    /// Highest slice of the Koszul complex checked.
    pub koszul_degree: usize,
    pub primes: [u64; 2],
    pub seed: u64,
    pub skip_hilbert: bool,
    pub skip_koszul: bool,
    pub skip_lie: bool,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            max_degree: algebra::DEFAULT_HILBERT_DEGREE,
            koszul_degree: algebra::DEFAULT_KOSZUL_DEGREE,
            primes: DEFAULT_PRIMES,
            seed: DEFAULT_SEED,
            skip_hilbert: false,
            skip_koszul: false,
            skip_lie: false,
            timings: false,
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        for d in [self.max_degree, self.koszul_degree] {
            if d < 2 {
                return Err(Error::DegreeTooSmall(d));
            }
            if d > algebra::hilbert::MAX_SUPPORTED_DEGREE {
                return Err(Error::DegreeTooLarge(d));
            }
        }
        if self.primes[0] == self.primes[1] {
            return Err(Error::RepeatedPrime);
        }
        for p in self.primes {
            PrimeField::new(p)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormSummary {
    pub source: String,
    pub name: Option<String>,
    pub f_label: Option<String>,
    pub n: usize,
    pub terms: Vec<(usize, usize, usize, String)>,
    pub display: String,
}

impl FormSummary {
    pub fn new(loaded: &LoadedForm) -> Self {
        FormSummary {
            source: loaded.source.clone(),
            name: loaded.name.clone(),
            f_label: loaded.f_label.map(str::to_string),
            n: loaded.form.dim(),
            terms: FormFile::from_form(&loaded.form).terms,
            display: loaded.form.to_string(),
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntertwinerPair {
    pub m: Vec<Vec<String>>,
    pub n: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularitySection {
    pub nondegenerate: bool,
    pub witness: Option<Vec<String>>,
    pub intertwiner_dimension: usize,
    pub intertwiner_basis: Vec<IntertwinerPair>,
    pub three_regular: bool,
    pub reason: Option<String>,
}

impl RegularitySection {
    pub fn new(v: &RegularityVerdict) -> Self {
        RegularitySection {
            nondegenerate: v.nondegenerate,
            witness: v.witness.as_deref().map(strings),
            intertwiner_dimension: v.intertwiner_dimension,
            intertwiner_basis: v
                .intertwiner_basis
                .iter()
                .map(|(m, n)| IntertwinerPair { m: Matrix::to_strings(m), n: Matrix::to_strings(n) })
                .collect(),
            three_regular: v.three_regular,
            reason: v.reason(),
        }
    }
}

/// Field used for the rank computations that fed the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportCertificate {
    pub field: CertificateField,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtraChecks {
    pub central_generators: Vec<usize>,
    pub dropped_relations: Vec<usize>,
    /// Only for `β`.
    pub matrix_identity: Option<bool>,
    /// Only for `β`, with generators `1..=4` in the first part.
    pub bigrading: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub form: FormSummary,
    pub config: AnalysisConfig,
    pub regularity: RegularitySection,
    pub lie: Option<LieClosureReport>,
    pub hilbert: Option<HilbertReport>,
    pub koszul: Option<KoszulExactnessReport>,
    pub certificate: ReportCertificate,
    pub checks: ExtraChecks,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

struct Stopwatch {
    enabled: bool,
    times: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn run<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.times.insert(stage.to_string(), start.elapsed().as_millis() as u64);
        }
        out
    }
}

fn is_beta(loaded: &LoadedForm) -> bool {
    loaded.name.as_deref() == Some("beta7")
}

pub fn analyze(loaded: &LoadedForm, config: &AnalysisConfig) -> Result<AnalysisReport> {
    config.validate()?;
    let alpha = &loaded.form;
    let mut clock = Stopwatch { enabled: config.timings, times: BTreeMap::new() };
    let mut warnings = Vec::new();

    let verdict = clock.run("regularity", || regularity::is_three_regular(alpha));
    if !verdict.three_regular {
        warnings.push("form is not 3-regular; the Koszul prediction assumes it".to_string());
    }
    let lie = if config.skip_lie { None } else { Some(clock.run("lie", || regularity::lie_closure_of_form(alpha))) };

    let pres = QuadraticPresentation::from_form(alpha);
    let dropped = pres.zero_relations();
    if !dropped.is_empty() {
        warnings.push(format!("dropped {} zero relation(s) before rank computations", dropped.len()));
    }
    let hilbert = if config.skip_hilbert {
        None
    } else {
        Some(clock.run("hilbert", || hilbert_series(&pres, config.max_degree, config.primes))?)
    };
    let koszul = if config.skip_koszul {
        None
    } else {
        Some(clock.run("koszul", || koszul_complex_check(alpha, config.koszul_degree, config.primes))?)
    };
    if let (Some(h), Some(k)) = (&hilbert, &koszul) {
        let depth = h.actual.len().min(k.max_degree + 1) - 1;
        let series_ok = h.first_mismatch.is_none_or(|d| d > depth);
        let complex_ok = k.exact_up_to >= depth;
        if series_ok != complex_ok {
            warnings.push(format!("Hilbert series and Koszul exactness disagree through degree {depth}"));
        }
    }

    let dual = hilbert.iter().any(|h| h.certificate.field == CertificateField::DualPrime)
        || koszul.iter().any(|k| k.certificate.field == CertificateField::DualPrime);
    let certificate = if dual {
        ReportCertificate { field: CertificateField::DualPrime, primes: config.primes.to_vec() }
    } else {
        ReportCertificate { field: CertificateField::Rational, primes: Vec::new() }
    };

    let checks = clock.run("checks", || -> Result<ExtraChecks> {
        let beta = is_beta(loaded);
        Ok(ExtraChecks {
            central_generators: central_generators(&pres),
            dropped_relations: dropped.clone(),
            matrix_identity: if beta { Some(algebra::verify_matrix_identity_lemma(&pres)?) } else { None },
            bigrading: if beta { Some(algebra::bigrading_check(&pres, 4, 4).passed) } else { None },
        })
    })?;

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        form: FormSummary::new(loaded),
        config: config.clone(),
        regularity: RegularitySection::new(&verdict),
        lie,
        hilbert,
        koszul,
        certificate,
        checks,
        warnings,
        timings_ms: config.timings.then_some(clock.times),
    })
}

/// One line of the catalog listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub n: usize,
    pub f_label: Option<String>,
    pub monomials: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub pattern: String,
    pub dims: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogListing {
    pub entries: Vec<CatalogRow>,
    pub families: Vec<FamilyRow>,
    pub note: Option<String>,
}

pub fn catalog_listing(dim: Option<usize>) -> CatalogListing {
    let entries: Vec<CatalogRow> = fixed_catalog()
        .into_iter()
        .filter(|e| dim.is_none_or(|d| d == e.form.dim()))
        .map(|e| CatalogRow {
            name: e.name.to_string(),
            n: e.form.dim(),
            f_label: e.f_label.map(str::to_string),
            monomials: e.form.to_string(),
        })
        .collect();
    let mut families = Vec::new();
    if dim.is_none_or(|d| d >= 3 && d % 2 == 1) {
        families.push(FamilyRow {
            pattern: "alpha_p:<p>".into(),
            dims: "2p+1".into(),
            description: "sum of θm∧θ(m+p)∧θ(2p+1) for m = 1..p".into(),
        });
    }
    if dim.is_none_or(|d| d == 7) {
        families.push(FamilyRow {
            pattern: "alpha_plane:<t0>,<t1>,<t2>".into(),
            dims: "7".into(),
            description: "t0·alpha3 + t1·alpha3_prime + t2·alpha3_double_prime with t0+t1+t2 = 1".into(),
        });
    }
    let note = match dim {
        Some(d) if d < 3 => Some(format!("there are no nonzero 3-forms on K^{d}")),
        Some(4) => Some("every 3-form on K^4 is degenerate, so none is 3-regular".to_string()),
        Some(d) if entries.is_empty() && families.is_empty() => {
            Some(format!("no representatives are cataloged for n = {d}"))
        }
        _ => None,
    };
    CatalogListing { entries, families, note }
}

/// One row of the reproduction table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproduceRow {
    pub name: String,
    pub f_label: Option<String>,
    pub n: usize,
    pub nondegenerate: bool,
    pub three_regular: bool,
    pub intertwiner_dimension: usize,
    pub lie_closure_dimension: Option<usize>,
    pub stabilizer_dimension: Option<usize>,
    pub hilbert_match_depth: Option<usize>,
    pub hilbert_first_mismatch: Option<usize>,
    pub koszul_exact_depth: Option<usize>,
}

impl ReproduceRow {
    pub fn new(report: &AnalysisReport) -> Self {
        ReproduceRow {
            name: report.form.name.clone().unwrap_or_else(|| report.form.source.clone()),
            f_label: report.form.f_label.clone(),
            n: report.form.n,
            nondegenerate: report.regularity.nondegenerate,
            three_regular: report.regularity.three_regular,
            intertwiner_dimension: report.regularity.intertwiner_dimension,
            lie_closure_dimension: report.lie.as_ref().map(|l| l.dimension),
            stabilizer_dimension: report.lie.as_ref().and_then(|l| l.stabilizer_dimension),
            hilbert_match_depth: report.hilbert.as_ref().map(HilbertReport::match_depth),
            hilbert_first_mismatch: report.hilbert.as_ref().and_then(|h| h.first_mismatch),
            koszul_exact_depth: report.koszul.as_ref().map(|k| k.exact_up_to),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationRow {
    pub derivation: TripleDerivation,
    pub descends: bool,
}

/// Checks that do not belong to a single catalog form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalChecks {
    pub matrix_identity: bool,
    pub matrix_identity_perturbed: bool,
    pub bigrading: bool,
    /// Generator `2p+1` central in the `α^(p)` algebra, `p = 1, 2, 3`.
    pub top_generator_central: Vec<bool>,
    pub derivations: Vec<DerivationRow>,
    /// `p = 1, 2, 3` at the Koszul degree.
    pub tensor_factorization: Vec<bool>,
    pub commutator_wedge: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproduceReport {
    pub schema_version: u32,
    pub config: AnalysisConfig,
    pub rows: Vec<ReproduceRow>,
    pub checks: GlobalChecks,
    pub reports: Vec<AnalysisReport>,
}

pub fn global_checks(config: &AnalysisConfig) -> Result<GlobalChecks> {
    let beta = QuadraticPresentation::from_form(&CatalogName::Beta7.build()?.form);
    let symplectic = QuadraticPresentation::symplectic(3)?;
    let mut top_generator_central = Vec::new();
    let mut tensor_factorization = Vec::new();
    let mut commutator_wedge = Vec::new();
    for p in 1..=3 {
        let pres = QuadraticPresentation::from_form(&CatalogName::AlphaP(p).build()?.form);
        top_generator_central.push(algebra::centrality_check(&pres, 2 * p + 1)?);
        tensor_factorization.push(algebra::tensor_factorization_check(p, config.koszul_degree)?.passed);
        commutator_wedge.push(regularity::commutator_wedge_check(p, WEDGE_TRIALS, config.seed).passed);
    }
    let derivations = TripleDerivation::ALL
        .iter()
        .map(|&d| Ok(DerivationRow { derivation: d, descends: algebra::derivation_descends(&symplectic, &d.derivation())? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(GlobalChecks {
        matrix_identity: algebra::verify_matrix_identity_lemma(&beta)?,
        matrix_identity_perturbed: algebra::matrix_identity_report(&beta, Some((0, 0)))?.holds,
        bigrading: algebra::bigrading_check(&beta, 4, 4).passed,
        top_generator_central,
        derivations,
        tensor_factorization,
        commutator_wedge,
    })
}

/// Analyzes the nine fixed catalog forms concurrently; rows come back in
/// catalog order.
pub fn reproduce(config: &AnalysisConfig) -> Result<ReproduceReport> {
    config.validate()?;
    let reports = CatalogName::FIXED
        .par_iter()
        .map(|name| {
            let loaded = crate::forms::FormSource::Catalog(name.clone()).load()?;
            analyze(&loaded, config)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReproduceReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        rows: reports.iter().map(ReproduceRow::new).collect(),
        checks: global_checks(config)?,
        reports,
    })
}

/// Loads a form given directly, for callers that build forms in code.
pub fn loaded(form: ExteriorThreeForm, source: &str) -> LoadedForm {
    LoadedForm { source: source.to_string(), name: None, f_label: None, form }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::FormSource;

    fn quick() -> AnalysisConfig {
        AnalysisConfig { max_degree: 3, koszul_degree: 3, ..AnalysisConfig::default() }
    }

    #[test]
    fn report_is_byte_stable() {
        let loaded = FormSource::parse("catalog:gamma6").unwrap().load().unwrap();
        let a = to_json(&analyze(&loaded, &quick()).unwrap());
        let b = to_json(&analyze(&loaded, &quick()).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"schema_version\": 1"));
        assert!(!a.contains("timings_ms"));
    }

    #[test]
    fn not_regular_carries_reason() {
        let loaded = FormSource::parse("catalog:omega6").unwrap().load().unwrap();
        let r = analyze(&loaded, &quick()).unwrap();
        assert!(!r.regularity.three_regular);
        assert!(r.regularity.reason.is_some());
        assert!(r.regularity.intertwiner_basis.len() >= 2);
    }

    #[test]
    fn timings_only_on_request() {
        let loaded = FormSource::parse("catalog:alpha1").unwrap().load().unwrap();
        let cfg = AnalysisConfig { timings: true, ..quick() };
        let r = analyze(&loaded, &cfg).unwrap();
        assert!(r.timings_ms.unwrap().contains_key("regularity"));
    }

    #[test]
    fn invalid_config() {
        let cfg = AnalysisConfig { primes: [7, 11], ..AnalysisConfig::default() };
        assert!(matches!(cfg.validate(), Err(Error::InvalidPrime(7))));
        let cfg = AnalysisConfig { max_degree: 1, ..AnalysisConfig::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn listing_by_dimension() {
        assert_eq!(catalog_listing(None).entries.len(), 9);
        assert_eq!(catalog_listing(Some(7)).entries.len(), 5);
        let four = catalog_listing(Some(4));
        assert!(four.entries.is_empty() && four.families.is_empty());
        assert!(four.note.is_some());
    }
}
