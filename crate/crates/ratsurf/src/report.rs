//! Parameter reports against the published snapshot.
//!
//! The crate ships the published [n, k, d] tables for the six named
//! constructions, together with the best minimum distance known for the same
//! length and dimension at publication time.  [`report`] compares a built
//! code against that snapshot and records, per field, whether the computed
//! value matches, contradicts, or merely brackets the published one.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::code::EvaluationCode;

/// A published distance value: either pinned exactly or only bounded below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceClaim {
    Exact(u64),
    AtLeast(u64),
}

/// One row of the published tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub construction: String,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: DistanceClaim,
    /// Best minimum distance known for this [n, k] at publication time,
    /// where the source recorded one.
    pub best_known_d: Option<u64>,
}

/// The embedded snapshot: a label describing its provenance plus all rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub label: String,
    pub entries: Vec<TableEntry>,
}

static TABLES: OnceLock<Snapshot> = OnceLock::new();

/// The published parameter tables shipped with the crate.
pub fn published_tables() -> &'static Snapshot {
    TABLES.get_or_init(|| {
        serde_json::from_str(include_str!("../data/published_tables.json"))
            .expect("embedded snapshot parses")
    })
}

/// Looks up the published row for a construction tag over F_q.
pub fn lookup(construction: &str, q: u64) -> Option<&'static TableEntry> {
    published_tables()
        .entries
        .iter()
        .find(|e| e.construction == construction && e.q == q)
}

/// How a computed value relates to a published one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchState {
    /// Computed value equals (or certifies) the published claim.
    Match,
    /// Computed value contradicts the published claim.
    Mismatch,
    /// The computed bracket contains the published value but has not pinned
    /// it; tighter search caps could settle it.
    Inconclusive,
}

/// Field-by-field comparison against the published row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchFlags {
    pub n: bool,
    pub k: bool,
    pub d: MatchState,
}

/// Everything known about one built code, next to the published row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamReport {
    pub construction: String,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d_lower: u64,
    pub d_upper: Option<u64>,
    pub d_exact: Option<u64>,
    /// The published row, when the snapshot has one for (construction, q).
    pub expected: Option<TableEntry>,
    /// Comparison flags; absent exactly when `expected` is.
    pub matches: Option<MatchFlags>,
    /// True when the exact distance strictly beats the best value known at
    /// publication time.
    pub improves_best_known: Option<bool>,
}

fn distance_state(code: &EvaluationCode, claim: DistanceClaim) -> MatchState {
    match claim {
        DistanceClaim::Exact(e) => match code.d_exact() {
            Some(d) if d == e => MatchState::Match,
            Some(_) => MatchState::Mismatch,
            None => {
                let lo = code.d_lower();
                let hi = code.d_upper().unwrap_or(u64::MAX);
                if lo <= e && e <= hi {
                    MatchState::Inconclusive
                } else {
                    MatchState::Mismatch
                }
            }
        },
        DistanceClaim::AtLeast(floor) => {
            if code.d_lower() >= floor {
                MatchState::Match
            } else if code.d_upper().is_some_and(|hi| hi < floor) {
                MatchState::Mismatch
            } else {
                MatchState::Inconclusive
            }
        }
    }
}

/// Builds the report for a code under a construction tag.
pub fn report(code: &EvaluationCode, construction: &str) -> ParamReport {
    let expected = lookup(construction, code.field().order()).cloned();
    let matches = expected.as_ref().map(|e| MatchFlags {
        n: e.n == code.n(),
        k: e.k == code.k(),
        d: distance_state(code, e.d),
    });
    let improves_best_known = expected
        .as_ref()
        .and_then(|e| e.best_known_d)
        .and_then(|best| code.d_exact().map(|d| d > best));
    ParamReport {
        construction: construction.to_string(),
        q: code.field().order(),
        n: code.n(),
        k: code.k(),
        d_lower: code.d_lower(),
        d_upper: code.d_upper(),
        d_exact: code.d_exact(),
        expected,
        matches,
        improves_best_known,
    }
}

impl ParamReport {
    /// Collapses the field flags into one verdict: `Mismatch` dominates,
    /// then `Inconclusive`; reports without a published row are `Match`
    /// (there is nothing to contradict).
    pub fn overall(&self) -> MatchState {
        match &self.matches {
            None => MatchState::Match,
            Some(f) => {
                if !f.n || !f.k || f.d == MatchState::Mismatch {
                    MatchState::Mismatch
                } else if f.d == MatchState::Inconclusive {
                    MatchState::Inconclusive
                } else {
                    MatchState::Match
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_construction, Construction};
    use crate::field::Field;

    #[test]
    fn snapshot_rows_match_the_publication() {
        let t = published_tables();
        assert!(t.label.to_lowercase().contains("publication"));
        assert_eq!(t.entries.len(), 31);
        let r = lookup("Z-L4", 7).unwrap();
        assert_eq!((r.n, r.k), (57, 12));
        assert_eq!(r.d, DistanceClaim::Exact(34));
        assert_eq!(r.best_known_d, Some(33));
        let r = lookup("quadric-m3", 7).unwrap();
        assert_eq!((r.n, r.k), (50, 16));
        assert_eq!(r.d, DistanceClaim::AtLeast(22));
        assert_eq!(r.best_known_d, Some(26));
        let r = lookup("Z-L5", 8).unwrap();
        assert_eq!(r.d, DistanceClaim::Exact(39));
        assert_eq!(r.best_known_d, Some(40));
        assert!(lookup("Z-L3", 2).is_none());
    }

    #[test]
    fn record_code_report_flags_the_improvement() {
        let field = Field::of_order(7).unwrap();
        let code = build_construction(&field, Construction::ZL4).unwrap();
        let rep = report(&code, "Z-L4");
        assert_eq!(rep.d_exact, Some(34));
        let flags = rep.matches.unwrap();
        assert!(flags.n && flags.k);
        assert_eq!(flags.d, MatchState::Match);
        assert_eq!(rep.improves_best_known, Some(true));
        assert_eq!(rep.overall(), MatchState::Match);
    }

    #[test]
    fn open_bracket_reports_inconclusive_until_resolved() {
        let field = Field::of_order(4).unwrap();
        let mut code = build_construction(&field, Construction::YF4).unwrap();
        // Fresh build: floor 10, lightest generator row 11, nothing exact.
        assert_eq!(code.d_exact(), None);
        let rep = report(&code, "Y-F4");
        assert_eq!(rep.matches.unwrap().d, MatchState::Inconclusive);
        assert_eq!(rep.overall(), MatchState::Inconclusive);
        code.record_upper(10);
        let rep = report(&code, "Y-F4");
        assert_eq!(rep.d_exact, Some(10));
        assert_eq!(rep.overall(), MatchState::Match);
        assert_eq!(rep.improves_best_known, Some(false));
    }

    #[test]
    fn missing_row_leaves_expectation_empty() {
        let field = Field::of_order(2).unwrap();
        let code = build_construction(&field, Construction::ZL3).unwrap();
        let rep = report(&code, "Z-L3");
        assert!(rep.expected.is_none());
        assert!(rep.matches.is_none());
        assert_eq!(rep.overall(), MatchState::Match);
    }

    #[test]
    fn at_least_claims_match_once_the_floor_certifies_them() {
        let field = Field::of_order(7).unwrap();
        let code = build_construction(&field, Construction::QuadricM3).unwrap();
        let rep = report(&code, "quadric-m3");
        // d_lower = 22 from the cubic-section bound certifies "at least 22".
        assert_eq!(rep.d_lower, 22);
        assert_eq!(rep.matches.unwrap().d, MatchState::Match);
    }

    #[test]
    fn report_json_round_trips() {
        let field = Field::of_order(3).unwrap();
        let code = build_construction(&field, Construction::ZL3).unwrap();
        let rep = report(&code, "Z-L3");
        let back: ParamReport = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
