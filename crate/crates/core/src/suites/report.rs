//! Suite reports: one row per checked instance plus a summary.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    MatchesConjecture,
    CounterexampleCandidate,
    HeuristicUnresolved,
    /// A deviation from the conjectured list that appears among the listed exceptions.
    RemarkListed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::MatchesConjecture => "matches-conjecture",
            Status::CounterexampleCandidate => "counterexample-candidate",
            Status::HeuristicUnresolved => "heuristic-unresolved",
            Status::RemarkListed => "remark-listed",
        }
    }

    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Parameters a suite was run with. Unset fields take the suite's defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pool_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub lambda: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub certificate: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Instance {
    pub fn new(
        lambda: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        status: Status,
        certificate: impl Into<String>,
    ) -> Instance {
        Instance {
            lambda: lambda.into(),
            expected: expected.into(),
            computed: computed.into(),
            status,
            certificate: certificate.into(),
            note: None,
        }
    }

    /// An exact check: passes iff `expected == computed`.
    pub fn check(
        lambda: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        certificate: impl Into<String>,
    ) -> Instance {
        let (expected, computed) = (expected.into(), computed.into());
        let status = Status::of(expected == computed);
        Instance::new(lambda, expected, computed, status, certificate)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Instance {
        self.note = Some(note.into());
        self
    }

    pub fn failed(lambda: impl Into<String>, certificate: impl Into<String>, why: impl Into<String>) -> Instance {
        Instance::new(lambda, "-", "error", Status::Fail, certificate).with_note(why)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub counts: BTreeMap<Status, usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: SuiteParams,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

impl Report {
    /// Scans accept heuristic rows; exact suites do not.
    pub fn new(suite: &str, params: SuiteParams, instances: Vec<Instance>, scan: bool) -> Report {
        let mut counts = BTreeMap::new();
        for i in &instances {
            *counts.entry(i.status).or_insert(0) += 1;
        }
        let bad = |s: Status| counts.get(&s).copied().unwrap_or(0) > 0;
        let passed = !instances.is_empty()
            && !bad(Status::Fail)
            && !bad(Status::CounterexampleCandidate)
            && (scan || !bad(Status::HeuristicUnresolved));
        Report {
            suite: suite.to_string(),
            params,
            summary: Summary {
                total: instances.len(),
                counts,
                passed,
            },
            instances,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn count(&self, status: Status) -> usize {
        self.summary.counts.get(&status).copied().unwrap_or(0)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances
            .iter()
            .filter(|i| matches!(i.status, Status::Fail | Status::CounterexampleCandidate))
    }

    /// Merges reports of sub-runs under one name.
    pub fn merge(suite: &str, params: SuiteParams, parts: Vec<Report>, scan: bool) -> Report {
        let instances = parts.into_iter().flat_map(|r| r.instances).collect();
        Report::new(suite, params, instances, scan)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let rows = vec![
            Instance::check("1|1", "1", "1", "x"),
            Instance::new("2|2", "a", "b", Status::HeuristicUnresolved, "heuristic"),
        ];
        let exact = Report::new("t", SuiteParams::default(), rows.clone(), false);
        assert!(!exact.passed());
        let scan = Report::new("t", SuiteParams::default(), rows, true);
        assert!(scan.passed());
        assert_eq!(scan.count(Status::Pass), 1);
        let json = serde_json::to_string(&scan).unwrap();
        assert!(json.contains("\"heuristic-unresolved\":1"));
        assert!(!Report::new("t", SuiteParams::default(), vec![], false).passed());
    }
}
