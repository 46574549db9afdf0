//! Command reports: machine-readable JSON and a stable text rendering.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::report::{BihomError, CheckReport, Construction, EquivalenceReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    NotApplicable,
    Fail,
    HypothesisError,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass | Outcome::NotApplicable => 0,
            Outcome::Fail => 1,
            Outcome::HypothesisError => 2,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::NotApplicable => "not-applicable",
            Outcome::Fail => "fail",
            Outcome::HypothesisError => "hypothesis-error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskReport {
    pub task: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Outcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceReport>,
}

impl TaskReport {
    fn bare(task: &str, outcome: Outcome) -> TaskReport {
        TaskReport {
            task: task.to_string(),
            outcome,
            expected: None,
            message: None,
            hypotheses: None,
            conclusion: None,
            equivalence: None,
        }
    }

    pub fn from_check(task: &str, report: CheckReport) -> TaskReport {
        let outcome = if report.passed() { Outcome::Pass } else { Outcome::Fail };
        TaskReport {
            conclusion: Some(report),
            ..TaskReport::bare(task, outcome)
        }
    }

    pub fn from_construction<T>(task: &str, c: &Construction<T>) -> TaskReport {
        let outcome = if c.conclusion.passed() { Outcome::Pass } else { Outcome::Fail };
        TaskReport {
            hypotheses: Some(c.hypotheses.clone()),
            conclusion: Some(c.conclusion.clone()),
            ..TaskReport::bare(task, outcome)
        }
    }

    /// Passes when every verdict holds; a biconditional whose sides
    /// disagree also fails.
    pub fn from_equivalence(task: &str, eq: EquivalenceReport) -> TaskReport {
        let outcome = if !eq.is_applicable() {
            Outcome::NotApplicable
        } else if eq.all_hold() && eq.agree() {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        TaskReport {
            equivalence: Some(eq),
            ..TaskReport::bare(task, outcome)
        }
    }

    pub fn from_error(task: &str, e: &BihomError) -> TaskReport {
        TaskReport {
            message: Some(e.to_string()),
            ..TaskReport::bare(task, Outcome::HypothesisError)
        }
    }

    pub fn message(task: &str, outcome: Outcome, message: impl Into<String>) -> TaskReport {
        TaskReport {
            message: Some(message.into()),
            ..TaskReport::bare(task, outcome)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionEntry {
    pub r: Vec<Vec<String>>,
    pub s: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub field: String,
    pub dim: usize,
    pub weight: [String; 2],
    pub mode: String,
    pub candidates: String,
    pub solutions: Vec<SolutionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub tasks: Vec<TaskReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSummary>,
    pub elapsed_ms: u64,
}

impl Report {
    /// The worst outcome over all tasks; an empty report passes.
    pub fn outcome(&self) -> Outcome {
        self.tasks.iter().map(|t| t.outcome).max().unwrap_or(Outcome::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        self.outcome().exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.input {
            Some(input) => writeln!(f, "{} {}", self.command, input)?,
            None => writeln!(f, "{}", self.command)?,
        }
        for t in &self.tasks {
            write!(f, "task {}: {}", t.task, t.outcome)?;
            if let Some(e) = t.expected {
                write!(f, " (expected {e})")?;
            }
            writeln!(f)?;
            if let Some(m) = &t.message {
                writeln!(f, "  {m}")?;
            }
            if let Some(h) = &t.hypotheses {
                writeln!(f, " hypotheses:")?;
                write!(f, "{h}")?;
            }
            if let Some(c) = &t.conclusion {
                if t.hypotheses.is_some() {
                    writeln!(f, " conclusion:")?;
                }
                write!(f, "{c}")?;
            }
            if let Some(eq) = &t.equivalence {
                write!(f, "{eq}")?;
                for (label, d) in &eq.details {
                    if !d.passed() {
                        writeln!(f, " {label}:")?;
                        for e in d.failures() {
                            match &e.witness {
                                Some(w) if !w.is_empty() => writeln!(f, "  FAIL  {}  witness {:?}", e.axiom, w)?,
                                _ => writeln!(f, "  FAIL  {}", e.axiom)?,
                            }
                        }
                    }
                }
            }
        }
        if let Some(s) = &self.search {
            writeln!(
                f,
                "search over {} dim {} weight ({}, {}) mode {}: {} candidates, {} solutions",
                s.field,
                s.dim,
                s.weight[0],
                s.weight[1],
                s.mode,
                s.candidates,
                s.solutions.len()
            )?;
            for (i, sol) in s.solutions.iter().enumerate() {
                writeln!(f, "  [{i}] r = {:?}", sol.r)?;
                if sol.s != sol.r {
                    writeln!(f, "      s = {:?}", sol.s)?;
                }
            }
        }
        writeln!(f, "outcome: {}", self.outcome())
    }
}
