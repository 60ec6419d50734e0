//! Suites of checks over named objects, as run by the `verify` binary.

pub mod checks;
pub mod objects;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub use checks::{canonical_factorization_check, default_instances, CheckInfo, Input, CHECKS};
pub use objects::{parse_object, parse_objects, split_objects, ObjectKind, ObjectSpec};

use crate::error::Error;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Bialgebra,
    DoldKan,
    Homotopy,
    Monoid,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["axioms", "bialgebra", "dold-kan", "homotopy", "monoid", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Bialgebra => "bialgebra",
            Suite::DoldKan => "dold-kan",
            Suite::Homotopy => "homotopy",
            Suite::Monoid => "monoid",
            Suite::All => "all",
        }
    }

    fn contains(self, info: &CheckInfo) -> bool {
        self == Suite::All || info.suite == self
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "axioms" => Suite::Axioms,
            "bialgebra" => Suite::Bialgebra,
            "dold-kan" => Suite::DoldKan,
            "homotopy" => Suite::Homotopy,
            "monoid" => Suite::Monoid,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

/// Deliberate corruptions, to see the checks fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// One entry of one face map of every simplicial input.
    Face,
    /// The sign of the `({1}, {0})` shuffle.
    Shuffle,
    /// The Koszul exponent `p + q` instead of `p q`.
    Koszul,
    /// Unit and counit of `Z` scaled by 2.
    Unit,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "face" => Fault::Face,
            "shuffle" => Fault::Shuffle,
            "koszul" => Fault::Koszul,
            "unit" => Fault::Unit,
            _ => return Err(Error::Parse(format!("unknown fault `{s}`"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    /// Objects given on the command line; `None` uses the fixtures.
    pub objects: Option<Vec<ObjectSpec>>,
    /// Check names; empty means every check of the suite.
    pub checks: Vec<String>,
    pub max_level: usize,
    pub normalized: bool,
    pub seed: u64,
    pub inject: Option<Fault>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            objects: None,
            checks: Vec::new(),
            max_level: 3,
            normalized: true,
            seed: 0,
            inject: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error in {check}: {source}")]
    Internal { check: String, source: Error },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Internal { .. } => 3,
        }
    }
}

pub const MAX_LEVEL_LIMIT: usize = 6;

/// Checks selected by the suite and the `--check` list, in registry order.
pub fn select(suite: Suite, cfg: &Config) -> Result<Vec<&'static CheckInfo>, RunError> {
    for name in &cfg.checks {
        let info = checks::find(name).ok_or_else(|| RunError::Usage(format!("unknown check `{name}`")))?;
        if !suite.contains(info) {
            return Err(RunError::Usage(format!(
                "check `{name}` belongs to suite `{}`, not `{suite}`",
                info.suite
            )));
        }
    }
    Ok(CHECKS
        .iter()
        .filter(|c| suite.contains(c))
        .filter(|c| {
            if cfg.checks.is_empty() {
                !c.explicit_only
            } else {
                cfg.checks.iter().any(|n| n == c.name)
            }
        })
        .collect())
}

fn instances(info: &CheckInfo, cfg: &Config) -> Result<Vec<Result<Vec<ObjectSpec>, String>>, RunError> {
    if info.input == checks::Input::None {
        return Ok(vec![Ok(Vec::new())]);
    }
    match &cfg.objects {
        Some(objs) if info.arity == 1 => Ok(objs.iter().map(|o| Ok(vec![o.clone()])).collect()),
        Some(objs) if objs.len() == info.arity => Ok(vec![Ok(objs.clone())]),
        Some(objs) => Ok(vec![Err(format!("needs {} objects, got {}", info.arity, objs.len()))]),
        None => default_instances(info)
            .iter()
            .map(|t| {
                t.iter()
                    .map(|d| parse_object(d))
                    .collect::<Result<Vec<_>, _>>()
                    .map(Ok)
                    .map_err(|e| RunError::Internal {
                        check: info.name.into(),
                        source: e,
                    })
            })
            .collect(),
    }
}

/// Runs every selected check on every instance, sequentially and in a fixed
/// order. Construction errors are internal errors, except under fault
/// injection, where they count as detected failures.
pub fn run(suite: Suite, cfg: &Config) -> Result<Vec<VerificationReport>, RunError> {
    if cfg.max_level == 0 || cfg.max_level > MAX_LEVEL_LIMIT {
        return Err(RunError::Usage(format!("--max-level must be in 1..={MAX_LEVEL_LIMIT}")));
    }
    if matches!(&cfg.objects, Some(o) if o.is_empty()) {
        return Err(RunError::Usage("--objects is empty".into()));
    }
    let mut out = Vec::new();
    for info in select(suite, cfg)? {
        for inst in instances(info, cfg)? {
            let objs = match inst {
                Ok(objs) => objs,
                Err(reason) => {
                    let names = cfg.objects.iter().flatten().map(|o| o.descriptor.clone()).collect();
                    out.push(VerificationReport::skipped(info.name, names, cfg.max_level, reason));
                    continue;
                }
            };
            let start = Instant::now();
            let reports = match checks::run_instance(info, &objs, cfg) {
                Ok(r) => r,
                Err(e) if cfg.inject.is_some() => {
                    let names = objs.iter().map(|o| o.descriptor.clone()).collect();
                    let mut r = VerificationReport::new(info.name, names, cfg.max_level);
                    r.fail_with(format!("construction failed: {e}"), 0);
                    vec![r]
                }
                Err(e) => {
                    return Err(RunError::Internal {
                        check: info.name.into(),
                        source: e,
                    })
                }
            };
            let elapsed = start.elapsed();
            out.extend(reports.into_iter().map(|r| r.with_elapsed(elapsed)));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            crate::report::Status::Pass => s.passed += 1,
            crate::report::Status::Fail => s.failed += 1,
            crate::report::Status::Skipped => s.skipped += 1,
        }
    }
    s
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    i32::from(summarize(reports).failed > 0)
}

pub fn render_text(reports: &[VerificationReport], timings: bool) -> String {
    let mut s: String = reports.iter().map(|r| r.to_text(timings)).collect();
    let sum = summarize(reports);
    s.push_str(&format!(
        "summary: {} passed, {} failed, {} skipped\n",
        sum.passed, sum.failed, sum.skipped
    ));
    s
}

/// One JSON object per line.
pub fn render_json(reports: &[VerificationReport], timings: bool) -> String {
    reports
        .iter()
        .map(|r| format!("{}\n", r.to_json(timings)))
        .collect()
}

pub fn list_checks() -> String {
    let width = CHECKS.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in CHECKS {
        s.push_str(&format!(
            "{:width$}  {:9}  arity {}  {}\n",
            c.name,
            c.suite.name(),
            c.arity,
            c.description
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(objects: &str, checks: &[&str], level: usize) -> Config {
        Config {
            objects: Some(parse_objects(objects).unwrap()),
            checks: checks.iter().map(|s| s.to_string()).collect(),
            max_level: level,
            ..Config::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn selection_rules() {
        let c = Config::default();
        let names: Vec<_> = select(Suite::DoldKan, &c).unwrap().iter().map(|c| c.name).collect();
        assert!(!names.contains(&"gamma-bialgebra"));
        let c = Config {
            checks: vec!["gamma-bialgebra".into()],
            ..Config::default()
        };
        assert_eq!(select(Suite::All, &c).unwrap().len(), 1);
        assert!(matches!(select(Suite::Axioms, &c), Err(RunError::Usage(_))));
        let c = Config {
            checks: vec!["bogus".into()],
            ..Config::default()
        };
        assert_eq!(select(Suite::All, &c).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn arity_mismatch_is_skipped() {
        let reports = run(Suite::Bialgebra, &cfg("delta:1,delta:1", &[], 2)).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, crate::report::Status::Skipped);
        assert_eq!(exit_code(&reports), 0);
    }

    #[test]
    fn explicit_bialgebra_instance() {
        let reports = run(Suite::Bialgebra, &cfg("delta:1,delta:1,delta:1,delta:1", &[], 2)).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].passed());
        assert!(render_text(&reports, false).ends_with("summary: 1 passed, 0 failed, 0 skipped\n"));
    }

    #[test]
    fn injected_shuffle_fault_fails() {
        let mut c = cfg("delta:1,delta:1", &["nabla-chain-map"], 2);
        c.inject = Some(Fault::Shuffle);
        let reports = run(Suite::Axioms, &c).unwrap();
        assert_eq!(exit_code(&reports), 1);
    }

    #[test]
    fn ring_checks_skip_plain_simplices() {
        let reports = run(Suite::Monoid, &cfg("delta:1", &["dga-unit"], 2)).unwrap();
        assert_eq!(reports[0].status, crate::report::Status::Skipped);
    }

    #[test]
    fn json_lines_parse() {
        let reports = run(Suite::Axioms, &cfg("delta:1,delta:0", &["aw-chain-map"], 2)).unwrap();
        let out = render_json(&reports, false);
        for line in out.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["check"], "aw-chain-map");
        }
    }

    #[test]
    fn bad_level_is_usage() {
        let c = Config {
            max_level: 0,
            ..Config::default()
        };
        assert_eq!(run(Suite::Axioms, &c).unwrap_err().exit_code(), 2);
    }
}
