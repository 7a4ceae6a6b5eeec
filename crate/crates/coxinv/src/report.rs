//! Machine-readable reports: canonical key-sorted JSON and a flat TSV view.
//! Bodies are byte-stable across runs: fixed ordering everywhere, no
//! timestamps.

use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::DominantCharacter;
use crate::multiplicity::KostantOracle;
use crate::parallel;
use crate::ringanalysis::GeneratorInference;
use crate::rootsystem::{RootSystem, Weight};
use crate::Result;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Worker count env var for the classification batch.
pub const THREADS_ENV: &str = "COXINV_THREADS";

#[derive(Debug, Clone, Serialize)]
pub struct SpecInfo {
    pub family: String,
    pub rank: usize,
}

impl SpecInfo {
    pub fn of(rs: &RootSystem) -> SpecInfo {
        SpecInfo {
            family: rs.family().to_string(),
            rank: rs.rank(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weyl_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
}

/// One classified character. Verdict fields are absent for enumerate-only
/// rows.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterRow {
    pub chi_weight: Vec<i64>,
    pub chi_root: Vec<i64>,
    pub height: i64,
    pub indecomposable: bool,
    pub witness_count: usize,
    pub witness_words: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_weight_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub krull_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_prefix: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_degrees: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_inconsistent_at: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial_by_theorem: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_consistent: Option<bool>,
}

/// A named verification row: a mathematical claim with expected and computed
/// values.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn compare<T: PartialEq + std::fmt::Debug>(
        name: &str,
        claim: &str,
        expected: T,
        actual: T,
    ) -> Check {
        Check {
            name: name.to_string(),
            claim: claim.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        }
    }

    pub fn assert(name: &str, claim: &str, expected: &str, actual: &str, pass: bool) -> Check {
        Check {
            name: name.to_string(),
            claim: claim.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub spec: Option<SpecInfo>,
    pub parameters: Parameters,
    pub rows: Vec<CharacterRow>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(spec: Option<SpecInfo>, parameters: Parameters) -> Report {
        Report {
            tool_version: TOOL_VERSION.to_string(),
            spec,
            parameters,
            rows: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Key-sorted JSON with a trailing newline.
    pub fn canonical_json(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("report serializes"))
    }

    /// Flat human-diffable view: one row per character, one per check.
    pub fn tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("tool_version\t{}\n", self.tool_version));
        if let Some(spec) = &self.spec {
            out.push_str(&format!("spec\t{}{}\n", spec.family, spec.rank));
        }
        let p = &self.parameters;
        out.push_str(&format!(
            "parameters\theight_bound={}\tdegree_bound={}\tweyl_cap={}\trank_cap={}\tmax_rank={}\n",
            fmt_opt(p.height_bound),
            fmt_opt(p.degree_bound),
            fmt_opt(p.weyl_cap),
            fmt_opt(p.rank_cap),
            fmt_opt(p.max_rank),
        ));
        if !self.rows.is_empty() {
            out.push_str(
                "row\tchi_root\tchi_weight\theight\tindecomposable\twitness_count\twitness_words\tzero_weight_dim\tkrull_dim\thilbert_prefix\tgenerator_degrees\tpolynomial_by_theorem\thilbert_consistent\n",
            );
        }
        for r in &self.rows {
            out.push_str(&format!(
                "row\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                join_ints(&r.chi_root),
                join_ints(&r.chi_weight),
                r.height,
                r.indecomposable,
                r.witness_count,
                r.witness_words
                    .iter()
                    .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join("."))
                    .collect::<Vec<_>>()
                    .join(";"),
                r.zero_weight_dim.map_or("-".into(), |v| v.to_string()),
                r.krull_dim.map_or("-".into(), |v| v.to_string()),
                r.hilbert_prefix
                    .as_ref()
                    .map_or("-".into(), |v| join_list(v)),
                match (&r.generator_degrees, r.hilbert_inconsistent_at) {
                    (Some(d), _) => join_list(d),
                    (None, Some(at)) => format!("inconsistent@{at}"),
                    (None, None) => "-".into(),
                },
                r.polynomial_by_theorem.map_or("-".into(), |v| v.to_string()),
                r.hilbert_consistent.map_or("-".into(), |v| v.to_string()),
            ));
        }
        if !self.checks.is_empty() {
            out.push_str("check\tname\tpass\texpected\tactual\tclaim\n");
        }
        for c in &self.checks {
            out.push_str(&format!(
                "check\t{}\t{}\t{}\t{}\t{}\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.expected,
                c.actual,
                c.claim
            ));
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.canonical_json(),
            OutputFormat::Tsv => self.tsv(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Tsv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            other => Err(format!("unknown format {other:?} (expected json or tsv)")),
        }
    }
}

/// serde_json's Value keeps objects in a BTreeMap, so a Value round-trip
/// sorts every key.
pub fn canonical_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

fn join_ints(v: &[i64]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn join_list<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn rational_strings(coeffs: &[crate::rootsystem::Rational]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

/// Root-data dump: Cartan matrix, positive roots in both bases, fundamental
/// weights, ρ, and the highest long root.
pub fn roots_value(rs: &RootSystem) -> Value {
    let positive: Vec<Value> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(idx, r)| {
            json!({
                "root": r.integer_coeffs().expect("roots are integral"),
                "weight": rs.positive_root_weight(idx).coords(),
            })
        })
        .collect();
    let rho_rc = rs.to_root_coords(rs.rho());
    json!({
        "tool_version": TOOL_VERSION,
        "spec": {"family": rs.family().to_string(), "rank": rs.rank()},
        "cartan": rs.cartan(),
        "symmetrizers": rs.symmetrizers(),
        "positive_root_count": rs.num_positive_roots(),
        "positive_roots": positive,
        "fundamental_weights": (0..rs.rank())
            .map(|i| rational_strings(rs.fundamental_weight(i).coeffs()))
            .collect::<Vec<_>>(),
        "rho": {"weight": rs.rho().coords(), "root": rational_strings(rho_rc.coeffs())},
        "highest_long_root": {
            "weight": rs.highest_long_root().coords(),
            "root": rs.highest_long_root_coords().integer_coeffs().expect("integral"),
        },
    })
}

pub fn roots_tsv(rs: &RootSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!("tool_version\t{TOOL_VERSION}\n"));
    out.push_str(&format!("spec\t{}\n", rs.spec()));
    for row in rs.cartan() {
        out.push_str(&format!("cartan_row\t{}\n", join_ints(row)));
    }
    out.push_str(&format!("symmetrizers\t{}\n", join_ints(rs.symmetrizers())));
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        out.push_str(&format!(
            "positive_root\t{}\t{}\n",
            join_ints(&r.integer_coeffs().expect("integral")),
            join_ints(rs.positive_root_weight(idx).coords()),
        ));
    }
    for i in 0..rs.rank() {
        out.push_str(&format!(
            "fundamental_weight\t{}\n",
            rational_strings(rs.fundamental_weight(i).coeffs()).join(",")
        ));
    }
    out.push_str(&format!(
        "rho\t{}\n",
        join_ints(rs.rho().coords())
    ));
    out.push_str(&format!(
        "highest_long_root\t{}\t{}\n",
        join_ints(&rs.highest_long_root_coords().integer_coeffs().expect("integral")),
        join_ints(rs.highest_long_root().coords()),
    ));
    out
}

/// Coxeter elements with canonical words, lengths, and descent sets
/// (1-based in the output).
pub fn coxeter_value(rs: &RootSystem, rank_cap: usize) -> Result<Value> {
    let elements = rs.coxeter_elements_with_cap(rank_cap)?;
    let rows: Vec<Value> = elements
        .iter()
        .map(|c| {
            let descents: Vec<usize> = rs
                .right_descents(c.element())
                .into_iter()
                .map(|i| i + 1)
                .collect();
            json!({
                "word": c.word_one_based(),
                "length": rs.length(c.element()),
                "descents": descents,
                "matrix": c.element().matrix(),
            })
        })
        .collect();
    Ok(json!({
        "tool_version": TOOL_VERSION,
        "spec": {"family": rs.family().to_string(), "rank": rs.rank()},
        "parameters": {"rank_cap": rank_cap},
        "count": rows.len(),
        "elements": rows,
    }))
}

/// λ, μ ↦ multiplicity, optionally cross-checked by the alternating-sum
/// oracle.
pub fn multiplicity_value(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    oracle: bool,
    weyl_cap: usize,
) -> Result<Value> {
    let m = rs.weight_multiplicity(lambda, mu)?;
    let mut body = json!({
        "tool_version": TOOL_VERSION,
        "spec": {"family": rs.family().to_string(), "rank": rs.rank()},
        "highest_weight": lambda.coords(),
        "weight": mu.coords(),
        "multiplicity": m,
    });
    if oracle {
        let mut k = KostantOracle::new(rs, weyl_cap)?;
        let o = k.multiplicity(lambda, mu)?;
        body["oracle"] = json!(o);
        body["oracle_match"] = json!(o == m);
        body["parameters"] = json!({"weyl_cap": weyl_cap});
    }
    Ok(body)
}

fn enumerate_rows(
    rs: &RootSystem,
    height_bound: i64,
    rank_cap: usize,
) -> Result<Vec<(DominantCharacter, Vec<crate::weyl::CoxeterElement>, CharacterRow)>> {
    let found = rs.enumerate_semistable_indecomposables(height_bound, rank_cap)?;
    Ok(found
        .into_iter()
        .map(|s| {
            let row = CharacterRow {
                chi_weight: s.character.weight().coords().to_vec(),
                chi_root: s.character.root_coords().to_vec(),
                height: s.character.height(),
                indecomposable: true,
                witness_count: s.witnesses.len(),
                witness_words: s.witnesses.iter().map(|w| w.word_one_based()).collect(),
                zero_weight_dim: None,
                rank: None,
                krull_dim: None,
                hilbert_prefix: None,
                generator_degrees: None,
                hilbert_inconsistent_at: None,
                polynomial_by_theorem: None,
                hilbert_consistent: None,
            };
            (s.character, s.witnesses, row)
        })
        .collect())
}

/// Indecomposable semistable characters only, no ring data.
pub fn enumerate_report(rs: &RootSystem, height_bound: i64, rank_cap: usize) -> Result<Report> {
    let mut report = Report::new(
        Some(SpecInfo::of(rs)),
        Parameters {
            height_bound: Some(height_bound),
            rank_cap: Some(rank_cap),
            ..Parameters::default()
        },
    );
    report.rows = enumerate_rows(rs, height_bound, rank_cap)?
        .into_iter()
        .map(|(_, _, row)| row)
        .collect();
    Ok(report)
}

/// Full pipeline: enumerate, then verdict per character (worker pool), then
/// an internal cross-check of every h(1) against the alternating-sum oracle
/// when |W| fits under the cap.
pub fn classify_report(
    rs: &RootSystem,
    height_bound: i64,
    degree_bound: u32,
    weyl_cap: usize,
    rank_cap: usize,
    threads: usize,
) -> Result<Report> {
    let mut report = Report::new(
        Some(SpecInfo::of(rs)),
        Parameters {
            height_bound: Some(height_bound),
            degree_bound: Some(degree_bound),
            weyl_cap: Some(weyl_cap),
            rank_cap: Some(rank_cap),
            ..Parameters::default()
        },
    );
    let entries = enumerate_rows(rs, height_bound, rank_cap)?;
    let verdicts = parallel::map_ordered(&entries, threads, |(chi, witnesses, _)| {
        rs.ring_verdict_unchecked(chi, witnesses, degree_bound)
    });
    let mut rows = Vec::with_capacity(entries.len());
    for ((chi, _, mut row), verdict) in entries.into_iter().zip(verdicts) {
        let v = verdict?;
        row.zero_weight_dim = Some(v.zero_weight_dim);
        row.rank = Some(v.rank);
        row.krull_dim = Some(v.krull_dim);
        row.hilbert_prefix = Some(v.hilbert.values().to_vec());
        match &v.generators {
            GeneratorInference::Consistent { degrees } => {
                row.generator_degrees = Some(degrees.clone());
            }
            GeneratorInference::Inconsistent { degree } => {
                row.hilbert_inconsistent_at = Some(*degree);
            }
        }
        row.polynomial_by_theorem = Some(v.polynomial_by_theorem);
        row.hilbert_consistent = Some(v.hilbert_consistent);
        rows.push((chi, row));
    }

    // oracle cross-check on h(1), skipped when the group is too large
    if let Ok(mut oracle) = KostantOracle::new(rs, weyl_cap) {
        let zero = Weight::zero(rs.rank());
        for (chi, row) in &rows {
            let expected = oracle.multiplicity(chi.weight(), &zero)?;
            let actual = row.zero_weight_dim.expect("classified row");
            report.checks.push(Check::compare(
                &format!("oracle_zero_weight_{}", join_ints(chi.root_coords()).replace(',', "_")),
                "h(1) from the recursion equals the alternating-sum oracle",
                expected,
                actual,
            ));
        }
    }
    report.rows = rows.into_iter().map(|(_, row)| row).collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    #[test]
    fn classify_a2_is_all_polynomial() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let report = classify_report(&a2, 12, 4, 2000, 9, 1).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report
            .rows
            .iter()
            .all(|r| r.polynomial_by_theorem == Some(true)));
        assert!(report.all_pass());
    }

    #[test]
    fn classify_b2_is_all_polynomial() {
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        let report = classify_report(&b2, 12, 4, 2000, 9, 1).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report
            .rows
            .iter()
            .all(|r| r.polynomial_by_theorem == Some(true)));
    }

    #[test]
    fn classify_a4_flags_the_nonpolynomial_witness() {
        let a4 = RootSystem::new(Family::A, 4).unwrap();
        let report = classify_report(&a4, 20, 4, 2000, 9, 2).unwrap();
        let hook = report
            .rows
            .iter()
            .find(|r| r.chi_weight == vec![2, 0, 1, 0])
            .expect("2ω1+ω3 is enumerated");
        assert_eq!(hook.polynomial_by_theorem, Some(false));
        assert_eq!(hook.zero_weight_dim, Some(6));
        assert_eq!(hook.krull_dim, Some(5));
        assert!(report.all_pass());
    }

    #[test]
    fn canonical_json_is_key_sorted_and_stable() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let r1 = classify_report(&a2, 12, 3, 2000, 9, 1).unwrap();
        let r2 = classify_report(&a2, 12, 3, 2000, 9, 3).unwrap();
        assert_eq!(r1.canonical_json(), r2.canonical_json());
        let json = r1.canonical_json();
        let checks_pos = json.find("\"checks\"").unwrap();
        let rows_pos = json.find("\"rows\"").unwrap();
        assert!(checks_pos < rows_pos, "keys are sorted");
        assert!(!r1.tsv().is_empty());
    }

    #[test]
    fn roots_value_shape() {
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        let v = roots_value(&b3);
        assert_eq!(v["positive_root_count"], 9);
        assert_eq!(v["highest_long_root"]["weight"], json!([0, 1, 0]));
        assert_eq!(v["highest_long_root"]["root"], json!([1, 2, 2]));
    }
}
