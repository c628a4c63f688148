//! Case records for the spaces carrying a homogeneous G2-structure, loaded from
//! `data/catalog.json`, and the sweep that verifies each of them.

pub mod checks;
pub mod filters;
pub mod models;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::homspace::{maurer_cartan, verify_case_g2_structure, CaseReport, HomogeneousSpace};
use crate::liealg::{match_isotropy, LieAlgebra, Splitting, Symmetry, WeightModule};
use crate::linalg::{QMatrix, QVector};
use crate::rational::q;

pub use checks::{aloff_wallach_check, qklm_check, qklm_oracle, qklm_report, AloffWallachReport, QklmReport};
pub use filters::{
    center_bound_filter, enumerate_candidates, isotropy_type, rank_parity_filter, CandidateFilterResult,
    CompactAlgebra, IsotropyType, SimpleFactor,
};

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    Reducible,
    Irreducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    U1,
    Su2,
    Su3,
    So5,
    G2,
    Su4,
    So7,
}

/// One summand of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub algebra: FactorKind,
    /// Label prefix (`A` gives `A.s1`); `u(1)` generators are unprefixed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix: Option<String>,
    /// Number of `u(1)` generators.
    #[serde(default = "one_count")]
    pub count: usize,
    /// Diagonal of the invariant form for `so(5)`; identity if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<i64>>,
}

fn one_count() -> usize {
    1
}

/// A basis element of `h`, or a generator producing several.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Expr(String),
    Builtin(Builtin),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "builtin", rename_all = "snake_case")]
pub enum Builtin {
    /// `U(1)_{k,l}` in the unprefixed `su(3)`.
    AloffWallach { k: i64, l: i64 },
    /// A 2-torus of `su(3) ⊕ u(1)` containing `U(1)_{k,l}`, transversal to `su(3)`.
    AloffWallachTransversal { k: i64, l: i64 },
    /// `2u(1)_{k,l,m}` in `su(2)_A ⊕ su(2)_B ⊕ su(2)_C`.
    Qklm { k: i64, l: i64, m: i64 },
    /// Stabilizer of `x1` in the unprefixed `g2`.
    Su3InG2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub name: String,
    pub title: String,
    pub table: Table,
    pub g: Vec<FactorSpec>,
    pub h_name: String,
    #[serde(default)]
    pub h: Vec<ElementSpec>,
    /// Explicit basis of `m`; the `q`-orthogonal complement if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<String>>,
    pub symmetry: Symmetry,
    pub expected_label: String,
    pub expected_splitting: Vec<WeightModule>,
    /// Integer coframe `Φ` with `dx^i ↦ Σ_j Φ_ij e^j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_star_form: Option<String>,
    #[serde(default)]
    pub expect_cosymplectic: bool,
    #[serde(default)]
    pub metadata_only: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Deserialize)]
struct CatalogFile {
    version: u32,
    cases: Vec<CaseRecord>,
}

pub const CATALOG_VERSION: u32 = 1;

/// All records in file order.
pub fn all_cases() -> Vec<CaseRecord> {
    let file: CatalogFile = serde_json::from_str(CATALOG_JSON).expect("bundled catalog is valid JSON");
    assert_eq!(file.version, CATALOG_VERSION, "bundled catalog version");
    file.cases
}

pub fn case_names() -> Vec<String> {
    all_cases().into_iter().map(|c| c.name).collect()
}

pub fn find_case(name: &str) -> Option<CaseRecord> {
    all_cases().into_iter().find(|c| c.name == name)
}

impl CaseRecord {
    /// Canonical name of `g`, as produced by the candidate enumeration.
    pub fn g_name(&self) -> String {
        let mut simple = Vec::new();
        let mut abelian = 0;
        for f in &self.g {
            match f.algebra {
                FactorKind::U1 => abelian += f.count,
                FactorKind::Su2 => simple.push(SimpleFactor::Su2),
                FactorKind::Su3 => simple.push(SimpleFactor::Su3),
                FactorKind::So5 => simple.push(SimpleFactor::So5),
                FactorKind::G2 => simple.push(SimpleFactor::G2),
                FactorKind::Su4 => simple.push(SimpleFactor::Su4),
                FactorKind::So7 => simple.push(SimpleFactor::So7),
            }
        }
        CompactAlgebra::new(simple, abelian).to_string()
    }

    pub fn expected(&self) -> Splitting {
        Splitting::new(self.symmetry, self.expected_splitting.clone())
    }

    /// `g` with its ad-invariant inner product.
    pub fn algebra(&self) -> Result<(LieAlgebra, QMatrix)> {
        let mut parts = Vec::new();
        let mut central = Vec::new();
        let mut offset = 0;
        for f in &self.g {
            let alg = match f.algebra {
                FactorKind::U1 => {
                    central.extend(offset..offset + f.count);
                    LieAlgebra::u1(f.count)
                }
                FactorKind::Su2 => LieAlgebra::su2(),
                FactorKind::Su3 => models::su3(),
                FactorKind::So5 => {
                    let metric = f.metric.clone().unwrap_or_else(|| vec![1; 5]);
                    if metric.len() != 5 {
                        return Err(Error::InvalidInput("so(5) metric needs 5 entries".into()));
                    }
                    models::so(&metric)?
                }
                FactorKind::G2 => models::g2(),
                FactorKind::Su4 | FactorKind::So7 => {
                    return Err(Error::InvalidInput(format!(
                        "no matrix model for {:?} in case {}",
                        f.algebra, self.name
                    )))
                }
            };
            let alg = match (&f.prefix, f.algebra) {
                (Some(p), kind) if kind != FactorKind::U1 => alg.with_prefix(p),
                _ => alg,
            };
            offset += alg.dim();
            parts.push(alg);
        }
        let g = LieAlgebra::sum_of(&parts);
        let qm = models::invariant_inner_product(&g, &central);
        Ok((g, qm))
    }

    /// Basis of `h` written out, with generators expanded.
    pub fn h_expressions(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for e in &self.h {
            match e {
                ElementSpec::Expr(s) => out.push(s.clone()),
                ElementSpec::Builtin(b) => out.extend(expand(b)?),
            }
        }
        Ok(out)
    }

    pub fn space(&self) -> Result<HomogeneousSpace> {
        if self.metadata_only {
            return Err(Error::InvalidInput(format!("case {} carries metadata only", self.name)));
        }
        let (g, qm) = self.algebra()?;
        let parse = |list: &[String]| -> Result<Vec<QVector>> { list.iter().map(|s| g.parse_element(s)).collect() };
        let h = parse(&self.h_expressions()?)?;
        match &self.complement {
            Some(m) => {
                let m = parse(m)?;
                HomogeneousSpace::with_complement(g, h, m, qm, self.symmetry)
            }
            None => HomogeneousSpace::new(g, h, qm, self.symmetry),
        }
    }

    pub fn witness_matrix(&self) -> Option<QMatrix> {
        self.witness.as_ref().map(|rows| {
            let rows: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect();
            QMatrix::from_rows(rows)
        })
    }
}

pub(crate) fn expand(b: &Builtin) -> Result<Vec<String>> {
    match *b {
        Builtin::AloffWallach { k, l } => {
            if k == 0 && l == 0 {
                return Err(Error::InvalidInput("(k, l) = (0, 0) does not define a circle".into()));
            }
            Ok(vec![models::aloff_wallach_generator(k, l)])
        }
        Builtin::AloffWallachTransversal { k, l } => {
            if k == 0 && l == 0 {
                return Err(Error::InvalidInput("(k, l) = (0, 0) does not define a circle".into()));
            }
            Ok(models::aloff_wallach_transversal(k, l))
        }
        Builtin::Qklm { k, l, m } => models::qklm_torus(k, l, m),
        Builtin::Su3InG2 => Ok(models::su3_in_g2()),
    }
}

/// Result of verifying one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub case: String,
    pub title: String,
    pub table: Table,
    pub g: String,
    pub h: String,
    pub metadata_only: bool,
    pub expected_label: String,
    pub matched_label: Option<String>,
    pub expected_splitting: String,
    pub splitting: Option<String>,
    pub splitting_as_expected: bool,
    /// `d² = 0` on the left-invariant coframe of `g`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_squared_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_form_as_expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cosymplectic: Option<bool>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CaseReport>,
}

/// Verifies a record: full-data records run the homogeneous-space pipeline,
/// metadata-only records match their stated splitting against the table.
pub fn verify_record(rec: &CaseRecord) -> CaseOutcome {
    let expected = rec.expected();
    let mut out = CaseOutcome {
        case: rec.name.clone(),
        title: rec.title.clone(),
        table: rec.table,
        g: rec.g_name(),
        h: rec.h_name.clone(),
        metadata_only: rec.metadata_only,
        expected_label: rec.expected_label.clone(),
        matched_label: None,
        expected_splitting: expected.to_string(),
        splitting: None,
        splitting_as_expected: false,
        d_squared_zero: None,
        star_form_as_expected: None,
        cosymplectic: None,
        passed: false,
        error: None,
        report: None,
    };
    if rec.metadata_only {
        out.matched_label = match_isotropy(&expected).map(|m| m.label);
        out.splitting = Some(expected.to_string());
        out.splitting_as_expected = true;
        out.passed = out.matched_label.as_deref() == Some(rec.expected_label.as_str());
        return out;
    }
    if let Err(e) = run_full(rec, &mut out) {
        out.error = Some(e.to_string());
        out.passed = false;
    }
    out
}

fn run_full(rec: &CaseRecord, out: &mut CaseOutcome) -> Result<()> {
    let hs = rec.space()?;
    out.d_squared_zero = Some(maurer_cartan(hs.g()).squares_to_zero());
    let witness = rec.witness_matrix();
    let mut report = verify_case_g2_structure(&hs, witness.as_ref())?;
    report.case = rec.name.clone();
    out.matched_label = Some(report.matched_label.clone());
    out.splitting = Some(report.splitting.to_string());
    out.splitting_as_expected = report.splitting == rec.expected();
    out.cosymplectic = Some(report.cosymplectic);
    if let Some(s) = &rec.expected_star_form {
        out.star_form_as_expected = Some(report.star_form == Form::parse(7, s)?);
    }
    out.passed = out.matched_label.as_deref() == Some(rec.expected_label.as_str())
        && out.splitting_as_expected
        && out.d_squared_zero == Some(true)
        && out.star_form_as_expected != Some(false)
        && (!rec.expect_cosymplectic || report.cosymplectic);
    out.report = Some(report);
    Ok(())
}

/// Verifies every record concurrently; output is ordered by case name.
pub fn verify_all() -> Vec<CaseOutcome> {
    let mut out: Vec<CaseOutcome> = all_cases().par_iter().map(verify_record).collect();
    out.sort_by(|a, b| a.case.cmp(&b.case));
    out
}

/// Candidates for one isotropy dimension, cross-referenced with the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub dim_h: usize,
    pub h: IsotropyType,
    pub candidates: Vec<CandidateFilterResult>,
    /// Every candidate passing the filters.
    pub survivors: Vec<String>,
    /// Survivors that can act almost effectively.
    pub effective_survivors: Vec<String>,
    /// Effective survivors without a catalog record for this isotropy dimension.
    pub unresolved: Vec<String>,
}

pub const UNRESOLVED_STATUS: &str = "requires embedding analysis (manual)";

pub fn enumeration_report(dim_h: usize) -> Result<EnumerationReport> {
    let h = isotropy_type(dim_h)?;
    let mut candidates = enumerate_candidates(dim_h)?;
    let records = all_cases();
    let known = |g: &str| records.iter().any(|r| r.g_name() == g && r.symmetry.dim() == dim_h);
    let mut unresolved = Vec::new();
    for c in &mut candidates {
        if c.survives() && c.almost_effective && !known(&c.g_name) {
            c.status = UNRESOLVED_STATUS.into();
            unresolved.push(c.g_name.clone());
        }
    }
    let survivors: Vec<String> = candidates.iter().filter(|c| c.survives()).map(|c| c.g_name.clone()).collect();
    let effective_survivors =
        candidates.iter().filter(|c| c.survives() && c.almost_effective).map(|c| c.g_name.clone()).collect();
    Ok(EnumerationReport { dim_h, h, candidates, survivors, effective_survivors, unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_counts() {
        let cases = all_cases();
        assert_eq!(cases.len(), 22);
        assert_eq!(cases.iter().filter(|c| c.table == Table::Reducible).count(), 10);
        assert_eq!(cases.iter().filter(|c| c.metadata_only).count(), 2);
        let mut names = case_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 22);
    }

    #[test]
    fn dimensions_add_up() {
        for c in all_cases() {
            let h_dim = c.symmetry.dim();
            let meta_dim: usize =
                c.g.iter()
                    .map(|f| match f.algebra {
                        FactorKind::U1 => f.count,
                        FactorKind::Su2 => 3,
                        FactorKind::Su3 => 8,
                        FactorKind::So5 => 10,
                        FactorKind::G2 => 14,
                        FactorKind::Su4 => 15,
                        FactorKind::So7 => 21,
                    })
                    .sum();
            assert_eq!(meta_dim - h_dim, 7, "{}", c.name);
        }
    }

    #[test]
    fn named_records() {
        let q111 = find_case("q111").unwrap();
        assert_eq!(q111.g_name(), "3su(2)");
        assert_eq!(q111.h_expressions().unwrap().len(), 2);
        let b7 = find_case("b7").unwrap();
        assert_eq!(b7.g_name(), "so(5)");
        assert_eq!(b7.expected_label, "su(2)_6");
        assert!(find_case("nope").is_none());
    }

    #[test]
    fn cosymplectic_circle_quotient_record() {
        let out = verify_record(&find_case("su2su2-u1-t2").unwrap());
        assert!(out.passed, "{out:?}");
        assert_eq!(out.star_form_as_expected, Some(true));
        assert_eq!(out.cosymplectic, Some(true));
    }

    #[test]
    fn full_sweep_passes() {
        let all = verify_all();
        assert_eq!(all.len(), 22);
        for out in &all {
            assert!(out.passed, "{out:?}");
        }
        let names: Vec<&str> = all.iter().map(|o| o.case.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn every_effective_survivor_has_a_record() {
        for d in filters::ISOTROPY_DIMS {
            let r = enumeration_report(d).unwrap();
            assert!(r.unresolved.is_empty(), "{d}: {:?}", r.unresolved);
        }
        let r = enumeration_report(8).unwrap();
        assert_eq!(r.survivors.len(), 3);
        assert_eq!(r.effective_survivors, vec!["su(4)", "g2+u(1)"]);
    }

    #[test]
    fn metadata_records_match_rows() {
        for name in ["su4-su3", "spin7-g2"] {
            let out = verify_record(&find_case(name).unwrap());
            assert!(out.passed, "{out:?}");
        }
    }
}
