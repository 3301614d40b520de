//! Claim registry and verification harness.
//!
//! A claim pairs a computation over the catalogue (a group order, an
//! identification label, a normality check, an entanglement profile) with a
//! frozen expected value. Assert-severity claims gate the process exit code;
//! informational claims record mismatches as `discrepancy-reported` without
//! failing the run, so a genuine discrepancy in the source statements stays
//! visible but does not masquerade as an implementation bug.

pub mod registry;
pub mod runner;

pub use registry::builtin_claims;
pub use runner::{default_cache_dir, matches_pattern, run, RunContext};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::tangle::round_sig12;

/// Absolute tolerance for real-valued comparisons. Orders, labels and
/// booleans compare exactly.
pub const REAL_TOLERANCE: f64 = 1e-8;

/// How a mismatch is scored. `Assert` failures make the run fail;
/// `Informational` mismatches are reported and the run carries on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Assert,
    Informational,
}

/// Outcome of one claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "discrepancy-reported")]
    DiscrepancyReported,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DiscrepancyReported => "discrepancy-reported",
        }
    }
}

/// Row-uniform entanglement summary used by profile claims. `pairwise` is in
/// AB, AC, BC order and `ones` in A, B, C pivot order; `ones: None` in an
/// expected value means the claim does not pin the one-tangles.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileSummary {
    pub class: String,
    pub tau3: f64,
    pub pairwise: [f64; 3],
    pub ones: Option<[f64; 3]>,
}

/// A computed or expected claim value. `Nothing` marks report-only claims
/// that carry no pinned expectation.
#[derive(Clone, Debug, PartialEq)]
pub enum ClaimValue {
    Count(u64),
    Real(f64),
    Reals(Vec<f64>),
    Flag(bool),
    Text(String),
    Profile(ProfileSummary),
    Nothing,
}

/// Comparison rule: counts, flags and texts compare exactly; reals compare
/// within [`REAL_TOLERANCE`]; a profile compares its class exactly and its
/// tangles within tolerance, skipping one-tangles the expectation leaves
/// open; `Nothing` accepts any computed value.
pub fn matches(expected: &ClaimValue, computed: &ClaimValue) -> bool {
    use ClaimValue::*;
    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= REAL_TOLERANCE
    }
    match (expected, computed) {
        (Nothing, _) => true,
        (Count(a), Count(b)) => a == b,
        (Flag(a), Flag(b)) => a == b,
        (Text(a), Text(b)) => a == b,
        (Real(a), Real(b)) => close(*a, *b),
        (Reals(a), Reals(b)) => {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| close(*x, *y))
        }
        (Profile(a), Profile(b)) => {
            a.class == b.class
                && close(a.tau3, b.tau3)
                && a.pairwise.iter().zip(&b.pairwise).all(|(x, y)| close(*x, *y))
                && match (&a.ones, &b.ones) {
                    (None, _) => true,
                    (Some(ea), Some(cb)) => ea.iter().zip(cb).all(|(x, y)| close(*x, *y)),
                    (Some(_), None) => false,
                }
        }
        _ => false,
    }
}

impl Serialize for ClaimValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ClaimValue::Count(n) => s.serialize_u64(*n),
            ClaimValue::Real(x) => s.serialize_f64(round_sig12(*x)),
            ClaimValue::Reals(xs) => {
                let mut seq = s.serialize_seq(Some(xs.len()))?;
                for x in xs {
                    seq.serialize_element(&round_sig12(*x))?;
                }
                seq.end()
            }
            ClaimValue::Flag(b) => s.serialize_bool(*b),
            ClaimValue::Text(t) => s.serialize_str(t),
            ClaimValue::Profile(p) => {
                let n = if p.ones.is_some() { 4 } else { 3 };
                let mut map = s.serialize_map(Some(n))?;
                map.serialize_entry("class", &p.class)?;
                map.serialize_entry("tau3", &round_sig12(p.tau3))?;
                let pw: Vec<f64> = p.pairwise.iter().map(|x| round_sig12(*x)).collect();
                map.serialize_entry("pairwise", &pw)?;
                if let Some(ones) = &p.ones {
                    let os: Vec<f64> = ones.iter().map(|x| round_sig12(*x)).collect();
                    map.serialize_entry("one_tangles", &os)?;
                }
                map.end()
            }
            ClaimValue::Nothing => s.serialize_none(),
        }
    }
}

impl std::fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn real(x: f64) -> String {
            format!("{}", round_sig12(x))
        }
        match self {
            ClaimValue::Count(n) => write!(f, "{n}"),
            ClaimValue::Real(x) => write!(f, "{}", real(*x)),
            ClaimValue::Reals(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| real(*x)).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            ClaimValue::Flag(b) => write!(f, "{b}"),
            ClaimValue::Text(t) => write!(f, "{t}"),
            ClaimValue::Profile(p) => {
                let pw: Vec<String> = p.pairwise.iter().map(|x| real(*x)).collect();
                write!(f, "{} tau3={} pairwise=[{}]", p.class, real(p.tau3), pw.join(", "))?;
                if let Some(ones) = &p.ones {
                    let os: Vec<String> = ones.iter().map(|x| real(*x)).collect();
                    write!(f, " one_tangles=[{}]", os.join(", "))?;
                }
                Ok(())
            }
            ClaimValue::Nothing => write!(f, "-"),
        }
    }
}

/// Claim computation: runs against a [`RunContext`] (which carries the order
/// cache) and returns the computed value or an error message.
pub type Compute = Box<dyn Fn(&RunContext) -> Result<ClaimValue, String> + Send + Sync>;

/// One verifiable statement with a frozen expected value.
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub severity: Severity,
    pub expected: ClaimValue,
    pub compute: Compute,
}

/// Outcome of one executed claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub severity: Severity,
    pub status: Status,
    pub expected: ClaimValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<ClaimValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "discrepancy-reported")]
    pub discrepancy_reported: usize,
}

/// Full run outcome; results are always in claim-id order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub notes: Vec<String>,
    pub totals: Totals,
    pub results: Vec<ClaimResult>,
}

impl Report {
    /// Number of assert-severity failures; informational claims never count.
    pub fn assert_failures(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.severity == Severity::Assert && r.status == Status::Fail)
            .count()
    }

    /// Exit-code contract: the run succeeds iff no assert claim failed.
    pub fn exit_ok(&self) -> bool {
        self.assert_failures() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_comparisons_use_the_absolute_tolerance() {
        let e = ClaimValue::Real(0.25);
        assert!(matches(&e, &ClaimValue::Real(0.25 + 0.9e-8)));
        assert!(!matches(&e, &ClaimValue::Real(0.25 + 1.1e-8)));
        assert!(!matches(&e, &ClaimValue::Count(0)));
    }

    #[test]
    fn counts_and_texts_compare_exactly() {
        assert!(matches(&ClaimValue::Count(16), &ClaimValue::Count(16)));
        assert!(!matches(&ClaimValue::Count(16), &ClaimValue::Count(17)));
        let a = ClaimValue::Text("[16,13]".into());
        assert!(matches(&a, &ClaimValue::Text("[16,13]".into())));
        assert!(!matches(&a, &ClaimValue::Text("[16,12]".into())));
    }

    #[test]
    fn profile_matching_skips_unpinned_one_tangles() {
        let expected = ClaimValue::Profile(ProfileSummary {
            class: "W-type".into(),
            tau3: 0.0,
            pairwise: [0.25; 3],
            ones: None,
        });
        let computed = ClaimValue::Profile(ProfileSummary {
            class: "W-type".into(),
            tau3: 1e-12,
            pairwise: [0.25; 3],
            ones: Some([0.5; 3]),
        });
        assert!(matches(&expected, &computed));

        let pinned = ClaimValue::Profile(ProfileSummary {
            class: "W-type".into(),
            tau3: 0.0,
            pairwise: [0.25; 3],
            ones: Some([1.0; 3]),
        });
        assert!(!matches(&pinned, &computed));
    }

    #[test]
    fn nothing_accepts_any_computed_value() {
        assert!(matches(&ClaimValue::Nothing, &ClaimValue::Count(3840)));
        assert!(matches(&ClaimValue::Nothing, &ClaimValue::Text("anything".into())));
    }

    #[test]
    fn serialized_reals_are_rounded_to_twelve_significant_digits() {
        let v = ClaimValue::Real(1.0 / 3.0);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "0.333333333333");
        let vs = ClaimValue::Reals(vec![2.0 / 3.0]);
        assert_eq!(serde_json::to_string(&vs).unwrap(), "[0.666666666667]");
    }

    #[test]
    fn status_strings_follow_the_reporting_vocabulary() {
        assert_eq!(
            serde_json::to_string(&Status::DiscrepancyReported).unwrap(),
            "\"discrepancy-reported\""
        );
        assert_eq!(Status::Pass.as_str(), "pass");
    }
}
