//! Run reports: the command, the seed, what was built and which claims held.
//! Rendering is deterministic; nothing time-dependent is recorded.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::check::{CheckPolicy, LawReport, LawStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub name: String,
    pub kind: String,
    pub order: usize,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub description: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Claim {
    pub fn new(id: impl Into<String>, description: impl Into<String>, passed: bool) -> Claim {
        Claim {
            id: id.into(),
            description: description.into(),
            passed,
            witness: None,
        }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(id: impl Into<String>, description: impl Into<String>, witness: Option<String>) -> Claim {
        Claim {
            id: id.into(),
            description: description.into(),
            passed: witness.is_none(),
            witness,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Claim {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    pub structures: Vec<StructureSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub laws: Vec<LawReport>,
    pub claims: Vec<Claim>,
    /// Structures emitted by the command, in interchange format.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub output: Vec<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, policy: &CheckPolicy) -> Report {
        Report {
            command: command.into(),
            seed: policy.seed,
            samples: policy.samples,
            structures: Vec::new(),
            laws: Vec::new(),
            claims: Vec::new(),
            output: Vec::new(),
        }
    }

    pub fn structure(&mut self, name: impl Into<String>, kind: impl Into<String>, order: usize, note: impl Into<String>) {
        self.structures.push(StructureSummary {
            name: name.into(),
            kind: kind.into(),
            order,
            note: note.into(),
        });
    }

    pub fn claim(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    /// Records a law report and a claim that it passed.
    pub fn laws(&mut self, id: impl Into<String>, report: LawReport) {
        let witness = report.first_failure().map(|v| v.to_string());
        let description = format!("{} of order {} satisfies its laws", report.structure, report.order);
        self.claims.push(Claim::from_witness(id, description, witness));
        self.laws.push(report);
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "seed: {}  samples: {}", self.seed, self.samples);
        if !self.structures.is_empty() {
            let _ = writeln!(out, "\nstructures:");
            let w = self.structures.iter().map(|s| s.name.len()).max().unwrap_or(0);
            for s in &self.structures {
                let _ = write!(out, "  {:<w$}  {:<9} order {:>3}", s.name, s.kind, s.order);
                if !s.note.is_empty() {
                    let _ = write!(out, "  {}", s.note);
                }
                out.push('\n');
            }
        }
        for r in &self.laws {
            let scope = if r.exhaustive { "exhaustive" } else { "sampled" };
            let _ = writeln!(out, "\nlaws for {} (order {}, {scope}):", r.structure, r.order);
            for c in &r.checks {
                let (tag, detail) = match &c.status {
                    LawStatus::Passed => ("pass", String::new()),
                    LawStatus::Failed(w) => ("FAIL", format!("  witness {w:?}")),
                    LawStatus::Skipped(why) => ("skip", format!("  ({why})")),
                };
                let _ = writeln!(out, "  {tag}  {}{detail}", c.law);
            }
        }
        let _ = writeln!(out, "\nclaims:");
        let w = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "  {tag}  {:<w$}  {}", c.id, c.description);
            if let Some(wit) = &c.witness {
                let _ = writeln!(out, "        {:<w$}  witness: {wit}", "");
            }
        }
        let passed = self.claims.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "\n{passed}/{} claims passed", self.claims.len());
        out
    }
}
