//! Verification outcomes, shared by the checks in the algebra modules and the
//! `verify` command.

use serde::{Deserialize, Serialize};

/// Outcome of one identity at one order.
///
/// `Pass`/`Fail` are for identities the library asserts; the `Recorded*`
/// variants describe boundary explorations that never fail a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    RecordedTrue,
    RecordedFalse,
}

impl Status {
    pub fn is_recorded(self) -> bool {
        matches!(self, Status::RecordedTrue | Status::RecordedFalse)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::RecordedTrue => "recorded-true",
            Status::RecordedFalse => "recorded-false",
        }
    }
}

/// Whether an identity is asserted or only observed at a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Assert,
    Record,
}

/// A check result: `Err` carries a rendered counterexample.
pub type Check = Result<(), String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Entry {
    pub fn new(id: impl Into<String>, mode: Mode, outcome: Check) -> Self {
        let (status, witness) = match (mode, outcome) {
            (Mode::Assert, Ok(())) => (Status::Pass, None),
            (Mode::Assert, Err(w)) => (Status::Fail, Some(w)),
            (Mode::Record, Ok(())) => (Status::RecordedTrue, None),
            (Mode::Record, Err(w)) => (Status::RecordedFalse, Some(w)),
        };
        Entry { id: id.into(), status, witness }
    }

    /// A recorded observation that carries a rendering even when it holds.
    pub fn observation(id: impl Into<String>, holds: bool, rendering: String) -> Self {
        Entry {
            id: id.into(),
            status: if holds { Status::RecordedTrue } else { Status::RecordedFalse },
            witness: Some(rendering),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub recorded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(n: usize, entries: Vec<Entry>) -> Self {
        let mut summary = Summary::default();
        for e in &entries {
            match e.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::RecordedTrue | Status::RecordedFalse => summary.recorded += 1,
            }
        }
        VerificationReport { n, entries, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Turns a boolean into a [`Check`], rendering the witness lazily.
pub fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_always_has_witness() {
        let e = Entry::new("id", Mode::Assert, Err("w".into()));
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_deref(), Some("w"));
        assert_eq!(Entry::new("id", Mode::Assert, Ok(())).witness, None);
    }

    #[test]
    fn summary_counts() {
        let r = VerificationReport::new(
            3,
            vec![
                Entry::new("a", Mode::Assert, Ok(())),
                Entry::new("b", Mode::Record, Err("x".into())),
                Entry::new("c", Mode::Record, Ok(())),
            ],
        );
        assert_eq!(r.summary, Summary { pass: 1, fail: 0, recorded: 2 });
        assert!(!r.has_failures());
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::new(4, vec![Entry::new("a", Mode::Record, Err("w".into()))]);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "n": 4,
                "entries": [{"id": "a", "status": "recorded-false", "witness": "w"}],
                "summary": {"pass": 0, "fail": 0, "recorded": 1}
            })
        );
    }
}
