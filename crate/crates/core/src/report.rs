//! Structured outcomes of verification checks.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::linalg::{format_combination, Matrix};

/// Maximum number of witnesses kept per failing check.
pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// A concrete counterexample: the basis element where two sides disagree
/// and what each side produced on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub level: usize,
    pub basis: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub objects: Vec<String>,
    pub max_level: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub witnesses: Vec<Witness>,
    /// Free-form lines, e.g. serialized homotopy matrices.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    /// Wall-clock time; excluded from serialized output unless requested,
    /// so reports stay byte-identical between runs.
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, objects: Vec<String>, max_level: usize) -> Self {
        VerificationReport {
            check: check.into(),
            objects,
            max_level,
            status: Status::Pass,
            reason: None,
            witnesses: Vec::new(),
            details: Vec::new(),
            elapsed: None,
        }
    }

    pub fn skipped(check: impl Into<String>, objects: Vec<String>, max_level: usize, reason: impl Into<String>) -> Self {
        let mut r = Self::new(check, objects, max_level);
        r.status = Status::Skipped;
        r.reason = Some(reason.into());
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn push_witness(&mut self, w: Witness) {
        self.status = Status::Fail;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Marks the check failed with a reason but no basis-level witness; used
    /// when a construction the check depends on breaks.
    pub fn fail_with(&mut self, reason: impl Into<String>, level: usize) {
        let reason = reason.into();
        self.push_witness(Witness {
            level,
            basis: "-".into(),
            left: reason.clone(),
            right: "-".into(),
        });
        self.reason.get_or_insert(reason);
    }

    /// Compares two maps column by column and records a witness for every
    /// differing source basis element.
    pub fn compare_matrices(
        &mut self,
        level: usize,
        left: &Matrix,
        right: &Matrix,
        source_label: &dyn Fn(usize) -> String,
        target_label: &dyn Fn(usize) -> String,
    ) {
        if left.shape() != right.shape() {
            self.fail_with(
                format!("shape {:?} vs {:?}", left.shape(), right.shape()),
                level,
            );
            return;
        }
        for j in 0..left.cols() {
            if left.column(j) != right.column(j) {
                self.push_witness(Witness {
                    level,
                    basis: source_label(j),
                    left: format_combination(left.column(j), target_label),
                    right: format_combination(right.column(j), target_label),
                });
                if self.witnesses.len() >= MAX_WITNESSES {
                    return;
                }
            }
        }
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed = Some(d);
        self
    }

    /// Human-readable rendering; timing is printed only when asked for.
    pub fn to_text(&self, with_timing: bool) -> String {
        let mut s = String::new();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let _ = write!(
            s,
            "{status} {} [{}] max-level={}",
            self.check,
            self.objects.join(", "),
            self.max_level
        );
        if with_timing {
            if let Some(d) = self.elapsed {
                let _ = write!(s, " ({:.3}s)", d.as_secs_f64());
            }
        }
        s.push('\n');
        if let Some(r) = &self.reason {
            let _ = writeln!(s, "  reason: {r}");
        }
        for w in &self.witnesses {
            let _ = writeln!(s, "  witness level {} at {}:", w.level, w.basis);
            let _ = writeln!(s, "    left:  {}", w.left);
            let _ = writeln!(s, "    right: {}", w.right);
        }
        for d in &self.details {
            let _ = writeln!(s, "  {d}");
        }
        s
    }

    /// One JSON object with stable key order.
    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if with_timing {
            if let (Some(d), Some(obj)) = (self.elapsed, v.as_object_mut()) {
                obj.insert("elapsed_ms".into(), serde_json::json!(d.as_millis() as u64));
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_implies_witness() {
        let mut r = VerificationReport::new("x", vec![], 1);
        assert!(r.passed() && r.witnesses.is_empty());
        let a = Matrix::identity(2);
        let b = Matrix::from_rows(&[vec![1, 0], vec![0, 2]]);
        r.compare_matrices(1, &a, &b, &|j| format!("e{j}"), &|i| format!("f{i}"));
        assert!(r.failed());
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].basis, "e1");
        assert_eq!(r.witnesses[0].right, "2*f1");
    }

    #[test]
    fn json_has_stable_keys() {
        let r = VerificationReport::new("c", vec!["delta:1".into()], 2);
        let s = serde_json::to_string(&r.to_json(false)).unwrap();
        assert_eq!(
            s,
            r#"{"check":"c","objects":["delta:1"],"max_level":2,"status":"pass","witnesses":[]}"#
        );
    }
}
