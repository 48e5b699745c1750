//! Registry of named identities, each checked by evaluating both sides
//! independently and comparing the residual against a tolerance.

mod catalog;
pub mod formulas;
pub mod tables;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::EvalResult;

pub use catalog::{build_registry, catalogue_markdown};
pub use formulas::{zeta3_from_quarter_parts, zeta3_oracle, zeta3_via_quarter, zeta3_via_sixth};
pub use tables::{table, TableName, TableRow};

/// Tag selecting every record except errata.
pub const TAG_ALL: &str = "all";
/// Tag carried by records that encode a known misprint and are expected to fail.
pub const TAG_ERRATUM: &str = "erratum";

/// Default tolerance for identities whose sides involve quadrature.
pub const TOL_QUADRATURE: f64 = 1e-9;
/// Default tolerance for identities built only from series.
pub const TOL_SERIES: f64 = 1e-11;

pub type Side = Arc<dyn Fn() -> Result<EvalResult> + Send + Sync>;

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: String,
    /// Formula the record checks, as listed in `docs/identities.md`.
    pub paper_anchor: String,
    pub lhs_desc: String,
    pub rhs_desc: String,
    pub lhs: Side,
    pub rhs: Side,
    pub tol: f64,
    pub tags: Vec<String>,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("lhs", &self.lhs_desc)
            .field("rhs", &self.rhs_desc)
            .field("tol", &self.tol)
            .field("tags", &self.tags)
            .finish()
    }
}

impl IdentityRecord {
    pub fn matches(&self, filter: &[&str]) -> bool {
        // Errata are only run when asked for by tag or id.
        let erratum = self.tags.iter().any(|t| t == TAG_ERRATUM);
        filter.iter().any(|f| {
            *f == self.id
                || if erratum {
                    *f == TAG_ERRATUM || *f == "errata"
                } else {
                    *f == TAG_ALL || self.tags.iter().any(|t| t == f)
                }
        })
    }

    pub fn evaluate(&self) -> IdentityReport {
        let start = Instant::now();
        let sides = (self.lhs)().and_then(|l| (self.rhs)().map(|r| (l, r)));
        let wall_time = start.elapsed().as_secs_f64();
        match sides {
            Ok((l, r)) => IdentityReport::from_sides(&self.id, &l, &r, self.tol, wall_time),
            Err(e) => IdentityReport::failed(&self.id, self.tol, wall_time, &e),
        }
    }
}

mod nan_null {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_some(v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// Outcome of one identity check. Non-finite numbers serialize as `null`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    #[serde(with = "nan_null")]
    pub lhs_value: f64,
    #[serde(with = "nan_null")]
    pub rhs_value: f64,
    #[serde(with = "nan_null")]
    pub abs_residual: f64,
    #[serde(with = "nan_null")]
    pub rel_residual: f64,
    #[serde(with = "nan_null")]
    pub lhs_bound: f64,
    #[serde(with = "nan_null")]
    pub rhs_bound: f64,
    pub tol: f64,
    pub pass: bool,
    /// Seconds.
    pub wall_time: f64,
    pub error: Option<String>,
}

impl IdentityReport {
    /// Passes only when the residual is within `tol` and the two bounds
    /// together are too, so a loose bound can never carry a pass.
    pub fn from_sides(id: &str, lhs: &EvalResult, rhs: &EvalResult, tol: f64, wall_time: f64) -> Self {
        let abs_residual = (lhs.value - rhs.value).abs();
        let scale = lhs.value.abs().max(rhs.value.abs());
        let rel_residual = if scale > 0.0 { abs_residual / scale } else { abs_residual };
        let bounds = lhs.error_bound + rhs.error_bound;
        IdentityReport {
            id: id.to_string(),
            lhs_value: lhs.value,
            rhs_value: rhs.value,
            abs_residual,
            rel_residual,
            lhs_bound: lhs.error_bound,
            rhs_bound: rhs.error_bound,
            tol,
            pass: abs_residual <= tol && bounds <= tol,
            wall_time,
            error: None,
        }
    }

    pub fn failed(id: &str, tol: f64, wall_time: f64, err: &Error) -> Self {
        IdentityReport {
            id: id.to_string(),
            lhs_value: f64::NAN,
            rhs_value: f64::NAN,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            lhs_bound: f64::NAN,
            rhs_bound: f64::NAN,
            tol,
            pass: false,
            wall_time,
            error: Some(err.to_string()),
        }
    }

    /// Equality of every field except `wall_time`, with NaN equal to NaN.
    pub fn same_values(&self, other: &IdentityReport) -> bool {
        let eq = |a: f64, b: f64| a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan());
        self.id == other.id
            && eq(self.lhs_value, other.lhs_value)
            && eq(self.rhs_value, other.rhs_value)
            && eq(self.abs_residual, other.abs_residual)
            && eq(self.rel_residual, other.rel_residual)
            && eq(self.lhs_bound, other.lhs_bound)
            && eq(self.rhs_bound, other.rhs_bound)
            && eq(self.tol, other.tol)
            && self.pass == other.pass
            && self.error == other.error
    }
}

/// The process-wide registry, built once.
pub fn registry() -> &'static [IdentityRecord] {
    static REGISTRY: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

/// Runs every record matching one of `filter` (tags, ids or `"all"`) on the
/// global thread pool. Reports come back sorted by id.
pub fn run_suite(filter: &[&str]) -> Vec<IdentityReport> {
    let mut out: Vec<IdentityReport> =
        registry().par_iter().filter(|r| r.matches(filter)).map(IdentityRecord::evaluate).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// [`run_suite`] on a dedicated pool of `jobs` workers.
pub fn run_suite_with_jobs(filter: &[&str], jobs: usize) -> Result<Vec<IdentityReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::domain(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(|| run_suite(filter)))
}

/// The twelve lambda-series checks.
pub fn lambda_series_family() -> Vec<IdentityReport> {
    run_suite(&["lambda-series"])
}

pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(s: &str) -> std::result::Result<Vec<IdentityReport>, serde_json::Error> {
    serde_json::from_str(s)
}

pub fn reports_to_csv(reports: &[IdentityReport]) -> std::result::Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn reports_from_csv(s: &str) -> std::result::Result<Vec<IdentityReport>, csv::Error> {
    csv::Reader::from_reader(s.as_bytes()).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_tolerances_positive() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|r| r.id.as_str()).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n, "duplicate ids");
        assert!(reg.iter().all(|r| r.tol > 0.0));
        assert!(reg.iter().filter(|r| r.matches(&[TAG_ALL])).count() >= 60);
    }

    #[test]
    fn tag_filters() {
        assert_eq!(run_suite(&["zeta3"]).len(), 2);
        assert!(run_suite(&["nonexistent-tag"]).is_empty());
        let fam = lambda_series_family();
        assert_eq!(fam.len(), 12);
        assert!(fam.iter().all(|r| r.pass), "{fam:#?}");
    }

    #[test]
    fn loose_bounds_do_not_pass() {
        let l = EvalResult::new(1.0, 1e-3, 1, "t");
        let r = EvalResult::new(1.0, 0.0, 1, "t");
        assert!(!IdentityReport::from_sides("x", &l, &r, 1e-9, 0.0).pass);
        let l = EvalResult::new(1.0, 1e-12, 1, "t");
        assert!(IdentityReport::from_sides("x", &l, &r, 1e-9, 0.0).pass);
    }

    #[test]
    fn serialization_round_trip() {
        let ok = IdentityReport::from_sides(
            "a",
            &EvalResult::new(0.1, 1e-17, 1, "t"),
            &EvalResult::new(0.1 + 1e-16, 0.0, 1, "t"),
            1e-9,
            0.25,
        );
        let bad = IdentityReport::failed("b", 1e-9, 0.0, &Error::Pole { x: 0.5 });
        let reports = vec![ok, bad];
        let json = reports_to_json(&reports);
        assert!(json.contains("\"lhs_value\": null"));
        let back = reports_from_json(&json).unwrap();
        assert!(reports.iter().zip(&back).all(|(a, b)| a.same_values(b) && a.wall_time == b.wall_time));
        let csv = reports_to_csv(&reports).unwrap();
        assert!(csv.starts_with("id,lhs_value,rhs_value,abs_residual,rel_residual,lhs_bound,rhs_bound,tol,pass,wall_time,error"));
        let back = reports_from_csv(&csv).unwrap();
        assert!(reports.iter().zip(&back).all(|(a, b)| a.same_values(b)));
    }
}
