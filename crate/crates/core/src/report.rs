//! Structured outcomes shared by every checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactfield::FieldError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// One axiom verdict. `witness` is the lexicographically first failing
/// basis tuple and is present exactly when the status is `Fail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `axiom` as passing when `witness` is `None`.
    pub fn record(&mut self, axiom: impl Into<String>, witness: Option<Vec<usize>>) {
        let status = if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        self.entries.push(AxiomResult {
            axiom: axiom.into(),
            status,
            witness,
        });
    }

    pub fn record_bool(&mut self, axiom: impl Into<String>, holds: bool) {
        self.record(axiom, if holds { None } else { Some(Vec::new()) });
    }

    pub fn skip(&mut self, axiom: impl Into<String>) {
        self.entries.push(AxiomResult {
            axiom: axiom.into(),
            status: Status::NotApplicable,
            witness: None,
        });
    }

    /// Appends every entry of `other`, prefixing axiom ids with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.axiom = format!("{prefix}/{}", e.axiom);
            self.entries.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.failures().next()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn holds(&self, axiom: &str) -> bool {
        self.get(axiom).map(|e| e.status != Status::Fail).unwrap_or(true)
    }

    /// The subset of entries whose id starts with `prefix`.
    pub fn passed_prefix(&self, prefix: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.axiom.starts_with(prefix))
            .all(|e| e.status != Status::Fail)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match (&e.status, &e.witness) {
                (Status::Pass, _) => writeln!(f, "  pass  {}", e.axiom)?,
                (Status::NotApplicable, _) => writeln!(f, "  n/a   {}", e.axiom)?,
                (Status::Fail, Some(w)) if !w.is_empty() => {
                    writeln!(f, "  FAIL  {}  witness {:?}", e.axiom, w)?
                }
                (Status::Fail, _) => writeln!(f, "  FAIL  {}", e.axiom)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: String,
    pub holds: bool,
}

/// Verdicts of the sides of a biconditional plus the reports behind them.
/// `not_applicable` carries a reason when the statement does not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<(String, CheckReport)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_applicable: Option<String>,
}

impl EquivalenceReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn not_applicable(reason: impl Into<String>) -> Self {
        EquivalenceReport {
            not_applicable: Some(reason.into()),
            ..Self::default()
        }
    }

    pub fn verdict(&mut self, label: impl Into<String>, holds: bool) {
        self.verdicts.push(Verdict {
            label: label.into(),
            holds,
        });
    }

    pub fn detail(&mut self, label: impl Into<String>, report: CheckReport) {
        self.details.push((label.into(), report));
    }

    pub fn is_applicable(&self) -> bool {
        self.not_applicable.is_none()
    }

    /// True when all verdicts coincide. Vacuously true when not applicable.
    pub fn agree(&self) -> bool {
        self.verdicts.windows(2).all(|w| w[0].holds == w[1].holds)
    }

    pub fn get(&self, label: &str) -> Option<bool> {
        self.verdicts.iter().find(|v| v.label == label).map(|v| v.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(reason) = &self.not_applicable {
            return writeln!(f, "  not applicable: {reason}");
        }
        for v in &self.verdicts {
            writeln!(f, "  {:<5} {}", v.holds, v.label)?;
        }
        writeln!(f, "  verdicts agree: {}", self.agree())
    }
}

/// Errors raised by constructions and theorem checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BihomError {
    Field(FieldError),
    /// A hypothesis of a construction does not hold.
    Hypothesis(String),
    MissingInput(String),
    UnitRequired,
    Search(String),
}

impl fmt::Display for BihomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BihomError::Field(e) => write!(f, "{e}"),
            BihomError::Hypothesis(msg) => write!(f, "hypothesis failed: {msg}"),
            BihomError::MissingInput(what) => write!(f, "missing input: {what}"),
            BihomError::UnitRequired => write!(f, "unit required for weighted equation"),
            BihomError::Search(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for BihomError {}

impl From<FieldError> for BihomError {
    fn from(e: FieldError) -> Self {
        BihomError::Field(e)
    }
}

/// Turns a hypothesis report into an error naming every failed entry.
pub fn require(report: &CheckReport) -> Result<(), BihomError> {
    let failed: Vec<String> = report
        .failures()
        .map(|e| match &e.witness {
            Some(w) if !w.is_empty() => format!("{} at {:?}", e.axiom, w),
            _ => e.axiom.clone(),
        })
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(BihomError::Hypothesis(failed.join(", ")))
    }
}

/// Result of a constructive theorem: the built value, its hypothesis checks
/// and the verification of its conclusion.
#[derive(Clone, Debug)]
pub struct Construction<T> {
    pub value: T,
    pub hypotheses: CheckReport,
    pub conclusion: CheckReport,
}

/// First tuple in lexicographic order over `0..dims[0] × 0..dims[1] × …`
/// at which `holds` is false.
pub fn first_witness(dims: &[usize], mut holds: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if dims.contains(&0) {
        return None;
    }
    let mut idx = vec![0usize; dims.len()];
    loop {
        if !holds(&idx) {
            return Some(idx);
        }
        let mut pos = dims.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_lexicographically_first() {
        let w = first_witness(&[3, 3], |t| !(t[0] + t[1] >= 3));
        assert_eq!(w, Some(vec![1, 2]));
        assert_eq!(first_witness(&[2, 2, 2], |_| true), None);
        assert_eq!(first_witness(&[], |_| false), Some(vec![]));
    }

    #[test]
    fn report_aggregation() {
        let mut r = CheckReport::new();
        r.record("a", None);
        r.record("b", Some(vec![0, 1]));
        r.skip("c");
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().axiom, "b");
        assert!(r.holds("a") && !r.holds("b") && r.holds("c"));
        assert!(require(&r).unwrap_err().to_string().contains("b at [0, 1]"));
    }

    #[test]
    fn equivalence_agreement() {
        let mut e = EquivalenceReport::new();
        e.verdict("left", true);
        e.verdict("right", true);
        assert!(e.agree());
        e.verdict("third", false);
        assert!(!e.agree());
        assert!(EquivalenceReport::not_applicable("no unit").agree());
    }
}
