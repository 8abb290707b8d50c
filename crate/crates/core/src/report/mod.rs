//! Verification suites and their reports.

mod suites;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chow::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub paper_anchor: String,
}

impl CheckResult {
    /// Pass iff the canonical printings agree.
    pub fn compare<E: fmt::Display>(
        id: &str,
        anchor: &str,
        expected: impl fmt::Display,
        actual: Result<impl fmt::Display, E>,
    ) -> Self {
        let expected = expected.to_string();
        let (status, actual) = match actual {
            Ok(a) => {
                let a = a.to_string();
                let s = if a == expected { Status::Pass } else { Status::Fail };
                (s, a)
            }
            Err(e) => (Status::Error, e.to_string()),
        };
        CheckResult {
            id: id.to_string(),
            status,
            expected,
            actual,
            paper_anchor: anchor.to_string(),
        }
    }

    /// Pass iff `ok`; `expected` describes the property.
    pub fn predicate(id: &str, anchor: &str, expected: &str, actual: String, ok: bool) -> Self {
        CheckResult {
            id: id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual,
            paper_anchor: anchor.to_string(),
        }
    }

    pub fn error(id: &str, anchor: &str, expected: &str, err: impl fmt::Display) -> Self {
        CheckResult {
            id: id.to_string(),
            status: Status::Error,
            expected: expected.to_string(),
            actual: err.to_string(),
            paper_anchor: anchor.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    T1,
    T2T3,
    T4,
    T5,
    DelPezzo,
    Scroll,
    Lc,
    Solve,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = ["all", "t1", "t2t3", "t4", "t5", "delpezzo", "scroll", "lc", "solve"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::T1 => "t1",
            Suite::T2T3 => "t2t3",
            Suite::T4 => "t4",
            Suite::T5 => "t5",
            Suite::DelPezzo => "delpezzo",
            Suite::Scroll => "scroll",
            Suite::Lc => "lc",
            Suite::Solve => "solve",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::T1,
                Suite::T2T3,
                Suite::T4,
                Suite::T5,
                Suite::DelPezzo,
                Suite::Scroll,
                Suite::Lc,
                Suite::Solve,
            ],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "t1" => Suite::T1,
            "t2t3" => Suite::T2T3,
            "t4" => Suite::T4,
            "t5" => Suite::T5,
            "delpezzo" => Suite::DelPezzo,
            "scroll" => Suite::Scroll,
            "lc" => Suite::Lc,
            "solve" => Suite::Solve,
            other => return Err(format!("unknown suite `{other}`; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

/// Options for a verification run.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Replaces the built-in sections blowup in the T5 suite.
    pub t5_ring: Option<Ring>,
}

/// Run a suite. Suites execute in parallel; checks are ordered by id.
pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Report {
    let mut checks: Vec<CheckResult> = suite
        .parts()
        .into_par_iter()
        .flat_map_iter(|s| suites::run(s, options))
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Error => summary.error += 1,
        }
    }
    Report {
        suite: suite.name().to_string(),
        checks,
        summary,
    }
}

impl Report {
    pub fn success(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.success() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        let id_width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = format!("{:<5}", c.status.to_string());
            let status = match (color, c.status) {
                (false, _) => status,
                (true, Status::Pass) => format!("\x1b[32m{status}\x1b[0m"),
                (true, Status::Fail) => format!("\x1b[31m{status}\x1b[0m"),
                (true, Status::Error) => format!("\x1b[33m{status}\x1b[0m"),
            };
            out.push_str(&format!("{status} {:<id_width$}  ", c.id));
            if c.status == Status::Pass {
                out.push_str(&c.actual);
            } else {
                out.push_str(&format!("expected {}, got {}", c.expected, c.actual));
            }
            out.push_str(&format!("  [{}]\n", c.paper_anchor));
        }
        out.push_str(&format!(
            "suite {}: {} passed, {} failed, {} errors\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.error
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("t6".parse::<Suite>().is_err());
    }

    #[test]
    fn compare_statuses() {
        let ok = CheckResult::compare::<String>("x", "a", 9, Ok(9));
        assert_eq!(ok.status, Status::Pass);
        let bad = CheckResult::compare::<String>("x", "a", 9, Ok(8));
        assert_eq!(bad.status, Status::Fail);
        let err = CheckResult::compare::<String>("x", "a", 9, Err::<i32, _>("boom".into()));
        assert_eq!(err.status, Status::Error);
        assert_eq!(err.actual, "boom");
    }

    #[test]
    fn individual_suites_pass() {
        for s in [
            Suite::T1,
            Suite::T2T3,
            Suite::T4,
            Suite::T5,
            Suite::DelPezzo,
            Suite::Scroll,
            Suite::Solve,
        ] {
            let r = run_suite(s, &VerifyOptions::default());
            assert!(r.success(), "{}", r.to_text(false));
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn lc_suite_flags_only_the_delta3_coefficient() {
        let r = run_suite(Suite::Lc, &VerifyOptions::default());
        let failing: Vec<_> = r
            .checks
            .iter()
            .filter(|c| c.status != Status::Pass)
            .map(|c| c.id.as_str())
            .collect();
        assert_eq!(failing, ["lc.decomposition.c3"]);
        let c3 = r.checks.iter().find(|c| c.id == "lc.decomposition.c3").unwrap();
        assert_eq!(c3.actual, "34 - 69*alpha");
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn all_is_sorted_and_deterministic() {
        let a = run_suite(Suite::All, &VerifyOptions::default());
        let b = run_suite(Suite::All, &VerifyOptions::default());
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(false), b.to_text(false));
        assert!(a.checks.windows(2).all(|w| w[0].id < w[1].id));
        let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(json["suite"], "all");
        assert_eq!(
            json["summary"]["pass"].as_u64().unwrap() as usize,
            a.checks.len() - 1
        );
    }
}
