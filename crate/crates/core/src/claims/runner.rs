//! Concurrent claim execution with an on-disk order cache.
//!
//! Orders of large groups dominate the run time, so they are cached in a
//! content-addressed store keyed by the generator set: repeated runs read
//! the cached value instead of recomputing the permutation chain.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalogue;
use crate::group::MatrixGroup;
use crate::matrix::ExactMatrix;

use super::{matches, Claim, ClaimResult, Report, Severity, Status, Totals};

/// Note carried in every report header: the one order statement that cannot
/// be checked because no generating matrices exist for the group.
const OUT_OF_SCOPE_NOTE: &str = "Not checked: the order-46,080 non-split extension of the \
     two-qubit Pauli group by S6; no generating matrices are available for it.";

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

/// Cache directory resolution when the caller does not name one: the
/// `QWEYL_CACHE_DIR` environment variable, else `qweyl-cache` under the
/// system temporary directory.
pub fn default_cache_dir() -> PathBuf {
    match std::env::var_os("QWEYL_CACHE_DIR") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => std::env::temp_dir().join("qweyl-cache"),
    }
}

/// Shared state handed to every claim computation.
pub struct RunContext {
    cache_dir: PathBuf,
}

impl RunContext {
    pub fn new(cache_dir: PathBuf) -> Self {
        RunContext { cache_dir }
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    /// Order of the group generated by catalogue names, through the cache.
    pub fn order(&self, names: &[&str]) -> Result<BigUint, String> {
        let gens = catalogue::build_all(names).map_err(|e| e.to_string())?;
        let dim = gens.first().map(ExactMatrix::dim).ok_or("empty generator list")?;
        self.order_of(dim, &gens)
    }

    /// Same as [`RunContext::order`] but yielding `u64` for claim values.
    pub fn order_u64(&self, names: &[&str]) -> Result<u64, String> {
        let order = self.order(names)?;
        order
            .to_u64()
            .ok_or_else(|| format!("order {order} exceeds the u64 claim range"))
    }

    /// Order of the group generated by explicit matrices, through the cache.
    pub fn order_of(&self, dim: usize, gens: &[ExactMatrix]) -> Result<BigUint, String> {
        let key = cache_key(dim, gens);
        if let Some(hit) = self.read_cached(&key) {
            return Ok(hit);
        }
        let group = MatrixGroup::new(dim, gens.to_vec()).map_err(|e| e.to_string())?;
        let order = group.order().map_err(|e| e.to_string())?;
        self.write_cached(&key, &order);
        Ok(order)
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.cache_dir.join(format!("{key}.json"))
    }

    fn read_cached(&self, key: &str) -> Option<BigUint> {
        let text = fs::read_to_string(self.entry_path(key)).ok()?;
        let doc: Value = serde_json::from_str(&text).ok()?;
        doc.get("order")?.as_str()?.parse().ok()
    }

    // A failed write only loses the cache benefit, so errors are dropped.
    // The temp-then-rename dance keeps concurrent writers from tearing the
    // file; both write the same content, so either rename winning is fine.
    fn write_cached(&self, key: &str, order: &BigUint) {
        if fs::create_dir_all(&self.cache_dir).is_err() {
            return;
        }
        let doc = json!({ "order": order.to_string() });
        let nonce = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = self
            .cache_dir
            .join(format!("{key}.tmp.{}.{nonce}", std::process::id()));
        if fs::write(&tmp, doc.to_string()).is_ok() {
            let _ = fs::rename(&tmp, self.entry_path(key));
        }
    }
}

/// Cache key: digest of the dimension and the sorted, deduplicated
/// canonical serializations of the generators. Names and listing order do
/// not affect the key.
fn cache_key(dim: usize, gens: &[ExactMatrix]) -> String {
    let mut texts: Vec<String> = gens
        .iter()
        .map(ExactMatrix::canonical_serialization)
        .collect();
    texts.sort();
    texts.dedup();
    let mut hasher = Sha256::new();
    hasher.update(b"order-v1:");
    hasher.update((dim as u64).to_le_bytes());
    for t in &texts {
        hasher.update(t.as_bytes());
        hasher.update([0u8]);
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Wildcard id filter: `*` matches any run of characters, everything else
/// is literal. A pattern with no `*` must match the whole id.
pub fn matches_pattern(id: &str, pattern: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return id == pattern;
    }
    let mut rest = id;
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        if i == 0 {
            match rest.strip_prefix(part) {
                Some(r) => rest = r,
                None => return false,
            }
        } else if i == parts.len() - 1 {
            return rest.ends_with(part);
        } else {
            match rest.find(part) {
                Some(pos) => rest = &rest[pos + part.len()..],
                None => return false,
            }
        }
    }
    // Pattern ends with '*', so any remainder is fine.
    true
}

fn panic_text(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_string()
    }
}

fn evaluate(claim: &Claim, ctx: &RunContext) -> ClaimResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (claim.compute)(ctx)));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (status, computed, detail) = match outcome {
        Err(payload) => (
            Status::Fail,
            None,
            Some(format!("computation panicked: {}", panic_text(payload))),
        ),
        Ok(Err(message)) => (Status::Fail, None, Some(message)),
        Ok(Ok(value)) => {
            if matches(&claim.expected, &value) {
                (Status::Pass, Some(value), None)
            } else {
                let status = match claim.severity {
                    Severity::Assert => Status::Fail,
                    Severity::Informational => Status::DiscrepancyReported,
                };
                (
                    status,
                    Some(value),
                    Some("computed value disagrees with the recorded expectation".to_string()),
                )
            }
        }
    };
    ClaimResult {
        id: claim.id.to_string(),
        description: claim.description.to_string(),
        severity: claim.severity,
        status,
        expected: claim.expected.clone(),
        computed,
        detail,
        elapsed_ms,
    }
}

/// Executes the claims (optionally id-filtered) across a worker pool and
/// assembles the report in claim-id order regardless of completion order.
pub fn run(
    claims: &[Claim],
    filter: Option<&str>,
    workers: Option<usize>,
    cache_dir: PathBuf,
) -> Report {
    let ctx = RunContext::new(cache_dir);
    let selected: Vec<&Claim> = claims
        .iter()
        .filter(|c| filter.is_none_or(|p| matches_pattern(c.id, p)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .expect("claim worker pool");
    let mut results: Vec<ClaimResult> =
        pool.install(|| selected.par_iter().map(|c| evaluate(c, &ctx)).collect());
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let mut totals = Totals::default();
    for r in &results {
        match r.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::DiscrepancyReported => totals.discrepancy_reported += 1,
        }
    }
    Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        notes: vec![OUT_OF_SCOPE_NOTE.to_string()],
        totals,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::ClaimValue;

    fn test_claim(
        id: &'static str,
        severity: Severity,
        expected: ClaimValue,
        value: Result<ClaimValue, String>,
    ) -> Claim {
        Claim {
            id,
            description: "test fixture",
            severity,
            expected,
            compute: Box::new(move |_| value.clone()),
        }
    }

    fn tmp_cache() -> tempfile::TempDir {
        tempfile::tempdir().unwrap()
    }

    #[test]
    fn wildcard_patterns_anchor_at_both_ends() {
        assert!(matches_pattern("TANGLE.CPT.TAU3", "TANGLE.*"));
        assert!(matches_pattern("TANGLE.CPT.TAU3", "*.TAU3"));
        assert!(matches_pattern("TANGLE.CPT.TAU3", "*CPT*"));
        assert!(matches_pattern("TANGLE.CPT.TAU3", "TANGLE.CPT.TAU3"));
        assert!(!matches_pattern("TANGLE.CPT.TAU3", "TANGLE"));
        assert!(!matches_pattern("TANGLE.CPT.TAU3", "ORDER.*"));
        assert!(!matches_pattern("TANGLE.CPT.TAU3", "*.ROWS"));
        assert!(matches_pattern("A.B.C", "A.*.C"));
        assert!(!matches_pattern("A.B.D", "A.*.C"));
    }

    #[test]
    fn a_corrupted_expectation_yields_exactly_one_fail() {
        let claims = vec![
            test_claim("SELF.GOOD", Severity::Assert, ClaimValue::Count(4), Ok(ClaimValue::Count(4))),
            test_claim("SELF.BAD", Severity::Assert, ClaimValue::Count(5), Ok(ClaimValue::Count(4))),
        ];
        let report = run(&claims, None, Some(1), tmp_cache().path().to_path_buf());
        assert_eq!(report.totals.fail, 1);
        assert_eq!(report.totals.pass, 1);
        assert!(!report.exit_ok());
        let bad = report.results.iter().find(|r| r.id == "SELF.BAD").unwrap();
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.computed, Some(ClaimValue::Count(4)));
    }

    #[test]
    fn informational_mismatches_report_a_discrepancy_without_failing() {
        let claims = vec![test_claim(
            "SELF.INFO",
            Severity::Informational,
            ClaimValue::Real(1.0),
            Ok(ClaimValue::Real(0.5)),
        )];
        let report = run(&claims, None, Some(1), tmp_cache().path().to_path_buf());
        assert_eq!(report.totals.discrepancy_reported, 1);
        assert_eq!(report.totals.fail, 0);
        assert!(report.exit_ok());
        assert_eq!(report.results[0].status, Status::DiscrepancyReported);
    }

    #[test]
    fn errors_and_panics_become_failures_with_the_message() {
        let claims = vec![
            test_claim(
                "SELF.ERR",
                Severity::Informational,
                ClaimValue::Nothing,
                Err("could not build".to_string()),
            ),
            Claim {
                id: "SELF.PANIC",
                description: "test fixture",
                severity: Severity::Assert,
                expected: ClaimValue::Flag(true),
                compute: Box::new(|_| panic!("boom")),
            },
        ];
        let report = run(&claims, None, Some(1), tmp_cache().path().to_path_buf());
        assert_eq!(report.totals.fail, 2);
        let err = report.results.iter().find(|r| r.id == "SELF.ERR").unwrap();
        assert_eq!(err.detail.as_deref(), Some("could not build"));
        let panicked = report.results.iter().find(|r| r.id == "SELF.PANIC").unwrap();
        assert!(panicked.detail.as_deref().unwrap().contains("boom"));
    }

    #[test]
    fn results_come_back_in_claim_id_order() {
        let claims = vec![
            test_claim("Z.LAST", Severity::Assert, ClaimValue::Flag(true), Ok(ClaimValue::Flag(true))),
            test_claim("A.FIRST", Severity::Assert, ClaimValue::Flag(true), Ok(ClaimValue::Flag(true))),
            test_claim("M.MID", Severity::Assert, ClaimValue::Flag(true), Ok(ClaimValue::Flag(true))),
        ];
        let report = run(&claims, None, Some(2), tmp_cache().path().to_path_buf());
        let ids: Vec<&str> = report.results.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["A.FIRST", "M.MID", "Z.LAST"]);
    }

    #[test]
    fn the_filter_selects_by_wildcard_id() {
        let claims = vec![
            test_claim("ORDER.ONE", Severity::Assert, ClaimValue::Count(1), Ok(ClaimValue::Count(1))),
            test_claim("TANGLE.ONE", Severity::Assert, ClaimValue::Count(1), Ok(ClaimValue::Count(1))),
        ];
        let report = run(&claims, Some("ORDER.*"), Some(1), tmp_cache().path().to_path_buf());
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.results[0].id, "ORDER.ONE");
    }

    #[test]
    fn the_order_cache_round_trips_and_is_name_independent() {
        let dir = tmp_cache();
        let ctx = RunContext::new(dir.path().to_path_buf());
        let cold = ctx.order(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        assert_eq!(cold, BigUint::from(16u32));
        // One cache entry written.
        let entries = std::fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(entries, 1);
        // Warm read agrees; generator listing order does not change the key.
        let warm = ctx.order(&["sigma_z", "sigma_x", "sigma_y"]).unwrap();
        assert_eq!(warm, cold);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn a_corrupt_cache_entry_is_ignored_and_recomputed() {
        let dir = tmp_cache();
        let ctx = RunContext::new(dir.path().to_path_buf());
        ctx.order(&["sigma_x", "sigma_y", "sigma_z"]).unwrap();
        for entry in std::fs::read_dir(dir.path()).unwrap() {
            std::fs::write(entry.unwrap().path(), "not json").unwrap();
        }
        assert_eq!(
            ctx.order(&["sigma_x", "sigma_y", "sigma_z"]).unwrap(),
            BigUint::from(16u32)
        );
    }

    #[test]
    fn reports_carry_the_out_of_scope_note() {
        let report = run(&[], None, Some(1), tmp_cache().path().to_path_buf());
        assert_eq!(report.notes.len(), 1);
        assert!(report.notes[0].contains("46,080"));
    }
}
