//! Verdicts and the structured report shared by scripts and `verify-paper`.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coset_enum::{certify_trivial, Outcome, DEFAULT_MAX_COSETS};
use crate::presentations::{tietze_simplify, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    /// The worse of the two.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_cosets: usize,
    pub tietze_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_cosets: DEFAULT_MAX_COSETS, tietze_steps: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub index: usize,
    pub statement: String,
    pub verdict: Verdict,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    pub entries: Vec<Entry>,
    /// Cited theorems the verdict relies on without proof.
    pub axioms: Vec<String>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report { verdict: Verdict::Pass, entries: Vec::new(), axioms: Vec::new() }
    }

    pub fn push(&mut self, statement: impl Into<String>, verdict: Verdict, detail: Value) {
        self.verdict = self.verdict.and(verdict);
        self.entries.push(Entry { index: self.entries.len(), statement: statement.into(), verdict, detail });
    }

    pub fn cite(&mut self, axiom: &str) {
        if !self.axioms.iter().any(|a| a == axiom) {
            self.axioms.push(axiom.to_string());
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One line per entry; with `trace`, entry details are printed too.
    pub fn to_text(&self, trace: bool) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("[{}] #{} {}\n", e.verdict, e.index, e.statement));
            if trace {
                for line in detail_lines(&e.detail, 1) {
                    out.push_str(&line);
                    out.push('\n');
                }
            }
        }
        for a in &self.axioms {
            out.push_str(&format!("axiom: {a}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

fn detail_lines(v: &Value, depth: usize) -> Vec<String> {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => map
            .iter()
            .flat_map(|(k, v)| match v {
                Value::Object(_) | Value::Array(_) if !v.as_array().is_some_and(|a| a.iter().all(is_scalar)) => {
                    let mut lines = vec![format!("{pad}{k}:")];
                    lines.extend(detail_lines(v, depth + 1));
                    lines
                }
                _ => vec![format!("{pad}{k}: {}", scalar(v))],
            })
            .collect(),
        Value::Array(items) => items
            .iter()
            .flat_map(|v| {
                if is_scalar(v) {
                    vec![format!("{pad}- {}", scalar(v))]
                } else {
                    let mut lines = vec![format!("{pad}-")];
                    lines.extend(detail_lines(v, depth + 1));
                    lines
                }
            })
            .collect(),
        v => vec![format!("{pad}{}", scalar(v))],
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        v => v.to_string(),
    }
}

/// Decide triviality of the presented group.
///
/// Nonzero first homology refutes at once, without enumeration. Otherwise
/// coset enumeration and Tietze simplification both run; either positive
/// certificate passes, an enumeration closing at index > 1 fails, and
/// anything else is inconclusive.
pub fn check_trivial(p: &Presentation, budget: Budget) -> (Verdict, Value) {
    let h1 = p.homology_invariants();
    if !h1.is_trivial() {
        return (
            Verdict::Fail,
            json!({
                "refuted_by": "abelianization",
                "h1": h1.to_string(),
                "exactness": p.exactness().to_string(),
            }),
        );
    }
    let tc = certify_trivial(p, budget.max_cosets).expect("presentation words share its alphabet");
    let tietze = tietze_simplify(p, budget.tietze_steps).expect("presentation words share its alphabet");
    let replayed = tietze.trace.replay().is_ok_and(|q| q.same_text(&tietze.presentation));
    let tietze_ok = tietze.is_trivial_group() && replayed;

    let (tc_verdict, tc_detail) = match &tc {
        Ok(cert) => (Verdict::Pass, json!({ "index": cert.index, "stats": cert.stats, "witnesses": cert.witnesses })),
        Err(res) => match res.outcome {
            Outcome::IndexFound { index } => (Verdict::Fail, json!({ "index": index, "stats": res.stats })),
            Outcome::BudgetExhausted { cosets_used } => {
                (Verdict::Inconclusive, json!({ "budget_exhausted": cosets_used, "stats": res.stats }))
            }
        },
    };
    let verdict = if tietze_ok { Verdict::Pass } else { tc_verdict };
    let detail = json!({
        "h1": h1.to_string(),
        "coset_enumeration": tc_detail,
        "tietze": {
            "trivial": tietze_ok,
            "complete": tietze.complete,
            "replayed": replayed,
            "eliminated": tietze.trace.eliminated(),
            "result": tietze.presentation.to_string(),
            "steps": tietze.trace.lines(),
        },
    });
    (verdict, detail)
}
