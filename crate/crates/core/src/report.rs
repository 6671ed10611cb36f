//! Serializable reports and their text rendering.
//!
//! Each report is plain data; the text form is rendered from that data alone,
//! so a report parsed back from JSON renders to the same text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::derive::{render_labels, ComponentRep, Derivation, Mapping};
use crate::error::Result;
use crate::experiment::{
    conditions, trace_branch, Condition, ContradictionReport, ExperimentBranch, Step, Verdict,
    ASSIGNMENTS,
};
use crate::qstate::{BasisLabel, GateMatrix};
use crate::triplet::render_pair;
use crate::verify::Check;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub component: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    pub forced: usize,
    pub assignments: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub gate: String,
    pub matrix_sha256: String,
    pub arity: usize,
    pub preserved: Vec<Mapping>,
    pub escapes: Vec<Vec<BasisLabel>>,
    pub constraints: Vec<String>,
    pub components: Vec<ComponentReport>,
    /// `name: ⟨x,y,z⟩ ↦ …`, with `?` for components that are not total.
    pub formula: String,
    pub total: bool,
}

impl DerivationReport {
    pub fn new(g: &GateMatrix, d: &Derivation) -> Self {
        let arity = d.rep.arity();
        let assignments = 1usize << (3 * arity);
        let components = d
            .rep
            .components()
            .iter()
            .map(|(v, c)| ComponentReport {
                component: d.rep.component_name(*v),
                status: c.status().to_owned(),
                monomial: match c {
                    ComponentRep::Total(m) if arity == 1 => Some(m.plain()),
                    ComponentRep::Total(m) => Some(m.to_string()),
                    _ => None,
                },
                forced: c.forced_count(assignments),
                assignments,
            })
            .collect();
        DerivationReport {
            gate: g.name().to_owned(),
            matrix_sha256: g.content_hash(),
            arity,
            preserved: d.table.preserved.clone(),
            escapes: d.table.escapes.clone(),
            constraints: d.constraints.iter().map(|c| c.render(arity)).collect(),
            components,
            formula: format!("{}: {}", g.name().to_lowercase(), d.rep.formula()),
            total: d.rep.is_total(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let total = self.preserved.len() + self.escapes.len();
        let _ = writeln!(s, "gate: {} (matrix sha256 {})", self.gate, self.matrix_sha256);
        let _ = writeln!(s, "preserved product states: {}/{total}", self.preserved.len());
        for m in &self.preserved {
            let _ = writeln!(s, "  {} ↦ {}", render_labels(&m.input), render_labels(&m.output));
        }
        let _ = writeln!(s, "escapes: {}/{total}", self.escapes.len());
        for e in &self.escapes {
            let _ = writeln!(s, "  {}", render_labels(e));
        }
        let _ = writeln!(s, "constraints: {}", self.constraints.len());
        for c in &self.constraints {
            let _ = writeln!(s, "  {c}");
        }
        let _ = writeln!(s, "components:");
        for c in &self.components {
            match &c.monomial {
                Some(m) => {
                    let _ = writeln!(s, "  {} = {m} ({})", c.component, c.status);
                }
                None => {
                    let _ = writeln!(
                        s,
                        "  {} {} ({}/{} assignments forced)",
                        c.component, c.status, c.forced, c.assignments
                    );
                }
            }
        }
        let _ = writeln!(s, "{}", self.formula);
        if !self.total {
            let _ = writeln!(s, "no faithful functional representation");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EprReport {
    pub branch: ExperimentBranch,
    pub steps: Vec<Step>,
    pub conditions: Vec<Condition>,
}

impl EprReport {
    pub fn new(branch: ExperimentBranch) -> Self {
        let steps = trace_branch(branch);
        let conditions = conditions(&steps.last().expect("nonempty").pair);
        EprReport {
            branch,
            steps,
            conditions,
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "branch: {}", self.branch.describe());
        for (i, step) in self.steps.iter().enumerate() {
            let _ = writeln!(s, "  {}. {}: {}", i + 1, step.label, render_pair(&step.pair));
        }
        if let Some(last) = self.steps.last() {
            let _ = writeln!(s, "final pair: {}", render_pair(&last.pair));
        }
        let _ = writeln!(s, "anti-correlation conditions:");
        for c in &self.conditions {
            let _ = writeln!(s, "  {}: {}", c.axis, c.render());
        }
        s
    }
}

fn mask_list(mask: u16) -> String {
    let idx: Vec<String> = (0..ASSIGNMENTS)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", idx.join(", "))
}

pub fn render_contradiction(r: &ContradictionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "assignments: 16 over (x1, y1, x2, y2) with z1 = z2 = -1; bit k of the index set means variable k is -1"
    );
    for b in &r.branches {
        let _ = writeln!(s, "branch: {}", b.branch.describe());
        let _ = writeln!(s, "  final pair: {}", render_pair(&b.final_pair));
        for c in &b.conditions {
            let _ = writeln!(s, "  {} condition: {}", c.axis, c.render());
        }
        let _ = writeln!(
            s,
            "  satisfying assignments: {}/16, mask 0x{:04x} {}",
            b.satisfying_count,
            b.satisfying_mask,
            mask_list(b.satisfying_mask)
        );
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let oracle: Vec<String> = r
        .oracle
        .iter()
        .map(|o| format!("{}: {}", o.axis, yes_no(o.opposite)))
        .collect();
    let _ = writeln!(s, "quantum prediction, |Ψ−⟩ anti-correlated on {}", oracle.join(", "));
    let _ = writeln!(s, "X and Z conditions always hold: {}", yes_no(r.xz_always_hold));
    let _ = writeln!(s, "branch sets partition the assignments: {}", yes_no(r.partition));
    let _ = writeln!(
        s,
        "mixture corollary: {}",
        if r.mixture_excluded {
            "no distribution over assignments is supported inside both sets"
        } else {
            "some distribution is supported inside both sets"
        }
    );
    let count = |i: usize| r.branches.get(i).map_or(0, |b| b.satisfying_count);
    let inter = if r.intersection_mask == 0 {
        "∅".to_owned()
    } else {
        mask_list(r.intersection_mask)
    };
    let tail = match r.verdict {
        Verdict::Contradiction => "no-go confirmed at desk scale",
        Verdict::Consistent => "a jointly satisfying assignment exists",
    };
    let _ = writeln!(
        s,
        "S_no = {} assignments, S_yes = {} assignments, intersection = {inter} → {tail}",
        count(0),
        count(1)
    );
    let _ = writeln!(
        s,
        "verdict: {}",
        match r.verdict {
            Verdict::Contradiction => "contradiction",
            Verdict::Consistent => "consistent",
        }
    );
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl CheckReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        CheckReport { checks, passed }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = write!(s, "[{mark}] {}", c.name);
            if let Some(d) = &c.detail {
                let _ = write!(s, ": {d}");
            }
            s.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            let _ = writeln!(s, "all {} checks passed", self.checks.len());
        } else {
            let _ = writeln!(s, "{failed} of {} checks failed", self.checks.len());
        }
        s
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
