//! Greedy Tietze simplification with a replayable derivation trace.
//!
//! Moves:
//! - eliminate a generator `g` using a relator in which `g` occurs exactly
//!   once (read cyclically as `w g^-1`, so `g = w`);
//! - delete a relator that is the identity;
//! - replace a relator by an equivalent one modulo conjugation and the
//!   commutations supplied by other relators (products with conjugates of
//!   other relators), including deleting exact duplicates.
//!
//! Eliminations prefer the shortest `w`; ties go to the latest-declared
//! generator, then the lowest relator index.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::commute::CommutationRewriter;
use super::{Presentation, PresentationError};
use crate::words::{Alphabet, Generator, Substitution, Word};

/// One move. Relator indices refer to the relator list at the time the
/// step is applied; words are over the input presentation's alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeStep {
    Rewrite { relator: usize, result: Word, using: Vec<usize> },
    DeleteTrivial { relator: usize },
    DeleteDuplicate { relator: usize, duplicate_of: usize, using: Vec<usize> },
    Eliminate { generator: Generator, definition: Word, relator: usize },
}

impl TietzeStep {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            TietzeStep::Rewrite { relator, result, using } => {
                format!("rewrite r{relator} -> {result} (using {using:?})")
            }
            TietzeStep::DeleteTrivial { relator } => format!("delete trivial r{relator}"),
            TietzeStep::DeleteDuplicate { relator, duplicate_of, using } => {
                format!("delete r{relator} as copy of r{duplicate_of} (using {using:?})")
            }
            TietzeStep::Eliminate { generator, definition, relator } => {
                format!("eliminate {} = {definition} via r{relator}", alphabet.name(*generator))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct StepRecord {
    rule: &'static str,
    relators: Vec<usize>,
    generator: Option<String>,
    word: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    initial: Presentation,
    steps: Vec<TietzeStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: relator index {index} out of range")]
    BadIndex { step: usize, index: usize },
    #[error("step {step}: {reason}")]
    Illegal { step: usize, reason: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

impl DerivationTrace {
    pub fn initial(&self) -> &Presentation {
        &self.initial
    }

    pub fn steps(&self) -> &[TietzeStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Eliminated generator names, in order.
    pub fn eliminated(&self) -> Vec<String> {
        let al = self.initial.alphabet();
        self.steps
            .iter()
            .filter_map(|s| match s {
                TietzeStep::Eliminate { generator, .. } => Some(al.name(*generator).to_string()),
                _ => None,
            })
            .collect()
    }

    pub fn lines(&self) -> Vec<String> {
        let al = self.initial.alphabet();
        self.steps.iter().map(|s| s.describe(al)).collect()
    }

    /// JSON-friendly rendering of the steps.
    pub fn to_json(&self) -> serde_json::Value {
        let al = self.initial.alphabet();
        let recs: Vec<StepRecord> = self
            .steps
            .iter()
            .map(|s| match s {
                TietzeStep::Rewrite { relator, result, using } => StepRecord {
                    rule: "rewrite",
                    relators: std::iter::once(*relator).chain(using.iter().copied()).collect(),
                    generator: None,
                    word: Some(result.to_string()),
                },
                TietzeStep::DeleteTrivial { relator } => {
                    StepRecord { rule: "delete-trivial", relators: vec![*relator], generator: None, word: None }
                }
                TietzeStep::DeleteDuplicate { relator, duplicate_of, using } => StepRecord {
                    rule: "delete-duplicate",
                    relators: [*relator, *duplicate_of].into_iter().chain(using.iter().copied()).collect(),
                    generator: None,
                    word: None,
                },
                TietzeStep::Eliminate { generator, definition, relator } => StepRecord {
                    rule: "eliminate",
                    relators: vec![*relator],
                    generator: Some(al.name(*generator).to_string()),
                    word: Some(definition.to_string()),
                },
            })
            .collect();
        serde_json::to_value(recs).expect("plain records serialize")
    }

    /// Re-run every step from the initial presentation, checking each one,
    /// and return the final presentation.
    pub fn replay(&self) -> Result<Presentation, ReplayError> {
        let mut ws = Workspace::new(&self.initial);
        for (k, step) in self.steps.iter().enumerate() {
            ws.apply_checked(k, step)?;
        }
        Ok(ws.finish(self.initial.exactness())?)
    }
}

/// Result of [`tietze_simplify`].
#[derive(Debug, Clone)]
pub struct TietzeOutcome {
    pub presentation: Presentation,
    pub trace: DerivationTrace,
    /// False when the step budget ran out before a fixpoint.
    pub complete: bool,
    working: Vec<Word>,
}

impl TietzeOutcome {
    /// Value of `w` (over the input alphabet) in terms of the surviving
    /// generators, reduced modulo the surviving commutation relators.
    pub fn resolve(&self, w: &Word) -> Word {
        let al = self.trace.initial.alphabet();
        let mut cur = w.clone();
        for step in &self.trace.steps {
            if let TietzeStep::Eliminate { generator, definition, .. } = step {
                let sub = Substitution::identity(al)
                    .set(al.name(*generator), definition.clone())
                    .expect("definition over input alphabet");
                cur = cur.substitute(&sub).expect("total substitution");
            }
        }
        CommutationRewriter::from_relators(&self.working, &[]).reduce(&cur, &mut BTreeSet::new())
    }

    pub fn is_trivial_group(&self) -> bool {
        self.complete && self.presentation.is_empty_presentation()
    }
}

struct Workspace {
    alphabet: Alphabet,
    active: Vec<bool>,
    relators: Vec<Word>,
}

impl Workspace {
    fn new(p: &Presentation) -> Self {
        Workspace { alphabet: p.alphabet().clone(), active: vec![true; p.generator_count()], relators: p.relators().to_vec() }
    }

    fn rewriter(&self, exclude: usize) -> CommutationRewriter {
        CommutationRewriter::from_relators(&self.relators, &[exclude])
    }

    fn subset_rewriter(&self, using: &[usize]) -> CommutationRewriter {
        let excluded: Vec<usize> = (0..self.relators.len()).filter(|i| !using.contains(i)).collect();
        CommutationRewriter::from_relators(&self.relators, &excluded)
    }

    /// `g` occurs once in the cyclically reduced `r`: return `w` with `g = w`.
    fn solve(&self, r: &Word, g: Generator) -> Option<Word> {
        let (core, _) = r.cyclic_reduction();
        if core.occurrences(g) != 1 {
            return None;
        }
        let letters = core.letters();
        let pos = letters.iter().position(|l| l.generator == g)?;
        let rot = core.rotate(pos + 1); // ... g^e last
        let last = *rot.letters().last()?;
        let rest = Word::from_letters(&self.alphabet, rot.letters()[..rot.len() - 1].iter().copied());
        // rest * g^e = 1  =>  g = rest^-1 if e = +1, g = rest if e = -1
        Some(if last.inverse { rest } else { rest.invert() })
    }

    fn find_move(&self) -> Option<TietzeStep> {
        if let Some(i) = self.relators.iter().position(Word::is_identity) {
            return Some(TietzeStep::DeleteTrivial { relator: i });
        }
        for (i, r) in self.relators.iter().enumerate() {
            let mut used = BTreeSet::new();
            let reduced = self.rewriter(i).reduce_cyclic(r, &mut used);
            if reduced.len() < r.len() {
                return Some(TietzeStep::Rewrite { relator: i, result: reduced, using: used.into_iter().collect() });
            }
        }
        let mut order: Vec<usize> = (0..self.relators.len()).collect();
        order.sort_by(|&a, &b| self.relators[b].len().cmp(&self.relators[a].len()).then(b.cmp(&a)));
        for &i in &order {
            let rw = self.rewriter(i);
            for j in 0..self.relators.len() {
                if j == i {
                    continue;
                }
                let mut used = BTreeSet::new();
                if rw.same_relator(&self.relators[i], &self.relators[j], &mut used) {
                    return Some(TietzeStep::DeleteDuplicate { relator: i, duplicate_of: j, using: used.into_iter().collect() });
                }
            }
        }
        let mut best: Option<(usize, std::cmp::Reverse<usize>, usize, Word)> = None;
        for (i, r) in self.relators.iter().enumerate() {
            for g in self.alphabet.generators().filter(|g| self.active[g.0]) {
                if let Some(w) = self.solve(r, g) {
                    let key = (w.len(), std::cmp::Reverse(g.0), i);
                    if best.as_ref().is_none_or(|b| key < (b.0, b.1, b.2)) {
                        best = Some((key.0, key.1, key.2, w));
                    }
                }
            }
        }
        best.map(|(_, g, i, w)| TietzeStep::Eliminate { generator: Generator(g.0), definition: w, relator: i })
    }

    fn apply(&mut self, step: &TietzeStep) {
        match step {
            TietzeStep::Rewrite { relator, result, .. } => self.relators[*relator] = result.clone(),
            TietzeStep::DeleteTrivial { relator } | TietzeStep::DeleteDuplicate { relator, .. } => {
                self.relators.remove(*relator);
            }
            TietzeStep::Eliminate { generator, definition, relator } => {
                self.relators.remove(*relator);
                let sub = Substitution::identity(&self.alphabet)
                    .set(self.alphabet.name(*generator), definition.clone())
                    .expect("definition over workspace alphabet");
                for r in &mut self.relators {
                    *r = r.substitute(&sub).expect("total substitution");
                }
                self.active[generator.0] = false;
            }
        }
    }

    fn apply_checked(&mut self, k: usize, step: &TietzeStep) -> Result<(), ReplayError> {
        let n = self.relators.len();
        let check_index = |i: usize| if i < n { Ok(()) } else { Err(ReplayError::BadIndex { step: k, index: i }) };
        let illegal = |reason: &str| ReplayError::Illegal { step: k, reason: reason.to_string() };
        match step {
            TietzeStep::Rewrite { relator, result, using } => {
                check_index(*relator)?;
                for &u in using {
                    check_index(u)?;
                }
                if using.contains(relator) {
                    return Err(illegal("rewrite uses the relator itself"));
                }
                if !result.alphabet().same_as(&self.alphabet) {
                    return Err(illegal("rewrite result over a foreign alphabet"));
                }
                let rw = self.subset_rewriter(using);
                if !rw.same_relator(&self.relators[*relator], result, &mut BTreeSet::new()) {
                    return Err(illegal("rewrite result is not equivalent"));
                }
            }
            TietzeStep::DeleteTrivial { relator } => {
                check_index(*relator)?;
                if !self.relators[*relator].is_identity() {
                    return Err(illegal("relator is not the identity"));
                }
            }
            TietzeStep::DeleteDuplicate { relator, duplicate_of, using } => {
                check_index(*relator)?;
                check_index(*duplicate_of)?;
                if relator == duplicate_of || using.contains(relator) {
                    return Err(illegal("duplicate justified by itself"));
                }
                let rw = self.subset_rewriter(using);
                if !rw.same_relator(&self.relators[*relator], &self.relators[*duplicate_of], &mut BTreeSet::new()) {
                    return Err(illegal("relators are not equivalent"));
                }
            }
            TietzeStep::Eliminate { generator, definition, relator } => {
                check_index(*relator)?;
                if !self.active[generator.0] {
                    return Err(illegal("generator already eliminated"));
                }
                if definition.occurrences(*generator) != 0 {
                    return Err(illegal("definition mentions the generator"));
                }
                match self.solve(&self.relators[*relator], *generator) {
                    Some(w) if w == *definition => {}
                    _ => return Err(illegal("relator does not define the generator")),
                }
            }
        }
        self.apply(step);
        Ok(())
    }

    fn finish(&self, exactness: super::Exactness) -> Result<Presentation, PresentationError> {
        let names: Vec<&str> = self.alphabet.generators().filter(|g| self.active[g.0]).map(|g| self.alphabet.name(g)).collect();
        let target = Alphabet::new(names.iter().copied())?;
        let mut sub = Substitution::new(&self.alphabet, &target);
        for name in &names {
            sub = sub.set(name, target.letter(name)?)?;
        }
        let relators = self.relators.iter().map(|r| r.substitute(&sub)).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(target, relators, exactness)
    }
}

/// Simplify `p` with at most `budget` moves.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Result<TietzeOutcome, PresentationError> {
    let mut ws = Workspace::new(p);
    let mut steps = Vec::new();
    let mut complete = false;
    while steps.len() < budget {
        match ws.find_move() {
            Some(step) => {
                ws.apply(&step);
                steps.push(step);
            }
            None => {
                complete = true;
                break;
            }
        }
    }
    if !complete && ws.find_move().is_none() {
        complete = true;
    }
    let presentation = ws.finish(p.exactness())?;
    Ok(TietzeOutcome { presentation, trace: DerivationTrace { initial: p.clone(), steps }, complete, working: ws.relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::Exactness;

    fn pres(names: &[&str], rels: &[&[(&str, i64)]]) -> Presentation {
        let al = Alphabet::new(names.iter().copied()).unwrap();
        let relators = rels.iter().map(|r| Word::reduce(&al, r).unwrap()).collect();
        Presentation::new(al, relators, Exactness::Exact).unwrap()
    }

    #[test]
    fn single_generator_killed() {
        let out = tietze_simplify(&pres(&["x"], &[&[("x", 1)]]), 100).unwrap();
        assert!(out.complete);
        assert!(out.presentation.is_empty_presentation());
        assert_eq!(out.trace.eliminated(), vec!["x"]);
        assert!(out.trace.replay().unwrap().same_text(&out.presentation));
    }

    #[test]
    fn commuting_pair_with_identification_is_infinite_cyclic() {
        let p = pres(&["x", "y"], &[&[("x", 1), ("y", 1), ("x", -1), ("y", -1)], &[("x", 1), ("y", -1)]]);
        let out = tietze_simplify(&p, 100).unwrap();
        assert!(out.complete);
        assert_eq!(out.presentation.alphabet().names(), &["x".to_string()]);
        assert!(out.presentation.relators().is_empty());
        assert!(out.trace.replay().unwrap().same_text(&out.presentation));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let p = pres(&["x", "y"], &[&[("x", 1)], &[("y", 1)]]);
        let out = tietze_simplify(&p, 1).unwrap();
        assert!(!out.complete);
        assert_eq!(out.trace.len(), 1);
        assert_eq!(out.presentation.generator_count(), 1);
    }

    #[test]
    fn stuck_presentation_is_a_fixpoint() {
        let p = pres(&["x"], &[&[("x", 3)]]);
        let out = tietze_simplify(&p, 100).unwrap();
        assert!(out.complete);
        assert!(out.trace.is_empty());
        assert_eq!(out.presentation.relators().len(), 1);
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let p = pres(&["x", "y"], &[&[("x", 1), ("y", -1)]]);
        let out = tietze_simplify(&p, 10).unwrap();
        let mut bad = out.trace.clone();
        if let TietzeStep::Eliminate { definition, .. } = &mut bad.steps[0] {
            *definition = definition.pow(2);
        }
        assert!(matches!(bad.replay(), Err(ReplayError::Illegal { step: 0, .. })));
    }

    #[test]
    fn resolve_expands_definitions() {
        // y = x, then x killed by x
        let p = pres(&["x", "y"], &[&[("x", 1), ("y", -1)], &[("x", 1)]]);
        let out = tietze_simplify(&p, 10).unwrap();
        let y = p.alphabet().letter("y").unwrap();
        assert!(out.resolve(&y).is_identity());
    }
}
