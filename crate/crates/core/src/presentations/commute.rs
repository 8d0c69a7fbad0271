//! Rewriting modulo commutation relators.
//!
//! Relators of the form `[g, h]` with `g`, `h` distinct generators (any
//! signs, any rotation) say that two generators commute. Cancelling `g^e`
//! against a later `g^-e` across a stretch of letters that all commute with
//! `g` is then a consequence of those relators, so it is a sound rewrite of
//! both group elements and relators. Deciding equality this way is exactly the
//! word problem of the partially commutative group the relators span.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{Presentation, PresentationError};
use crate::words::{Alphabet, Generator, Letter, Word};

/// If `w` is a rotation of `g^a h^b g^-a h^-b` with `|a| = |b| = 1`,
/// returns the commuting pair (sorted).
pub fn letter_commutator(w: &Word) -> Option<(Generator, Generator)> {
    let (core, _) = w.cyclic_reduction();
    let l = core.letters();
    if l.len() != 4 {
        return None;
    }
    for k in 0..4 {
        let r: Vec<Letter> = (0..4).map(|i| l[(i + k) % 4]).collect();
        if r[2] == r[0].inv() && r[3] == r[1].inv() && r[0].generator != r[1].generator {
            let (a, b) = (r[0].generator, r[1].generator);
            return Some(if a < b { (a, b) } else { (b, a) });
        }
    }
    None
}

#[derive(Debug, Clone, Default)]
pub struct CommutationRewriter {
    pairs: HashMap<(Generator, Generator), usize>,
    alphabet: Option<Alphabet>,
}

impl CommutationRewriter {
    /// Collect commuting pairs from `relators`, skipping the indices in
    /// `exclude`. Each pair remembers the first relator that supplied it.
    pub fn from_relators(relators: &[Word], exclude: &[usize]) -> Self {
        let mut pairs = HashMap::new();
        for (i, r) in relators.iter().enumerate() {
            if exclude.contains(&i) {
                continue;
            }
            if let Some(p) = letter_commutator(r) {
                pairs.entry(p).or_insert(i);
            }
        }
        CommutationRewriter { pairs, alphabet: relators.first().map(|r| r.alphabet().clone()) }
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn source(&self, a: Generator, b: Generator) -> Option<usize> {
        if a == b {
            return None;
        }
        let key = if a < b { (a, b) } else { (b, a) };
        self.pairs.get(&key).copied()
    }

    fn commutes(&self, a: Generator, b: Generator) -> bool {
        a == b || self.source(a, b).is_some()
    }

    /// Cancel commuting inverse pairs until none remain.
    fn reduce_letters(&self, letters: &[Letter], used: &mut BTreeSet<usize>) -> Vec<Letter> {
        let mut w = letters.to_vec();
        'outer: loop {
            for i in 0..w.len() {
                let g = w[i].generator;
                for j in i + 1..w.len() {
                    if w[j] == w[i].inv() {
                        for l in &w[i + 1..j] {
                            if let Some(src) = self.source(g, l.generator) {
                                used.insert(src);
                            }
                        }
                        w.remove(j);
                        w.remove(i);
                        continue 'outer;
                    }
                    if !self.commutes(g, w[j].generator) {
                        break;
                    }
                }
            }
            return w;
        }
    }

    /// Reduce a group element.
    ///
    /// Panics if `w` is over a different alphabet than the relators.
    pub fn reduce(&self, w: &Word, used: &mut BTreeSet<usize>) -> Word {
        if let Some(al) = &self.alphabet {
            assert!(al.same_as(w.alphabet()), "word and commutation relators use different alphabets");
        }
        Word::from_letters(w.alphabet(), self.reduce_letters(&w.letters(), used))
    }

    /// Reduce a relator: conjugation is allowed, so rotations are tried too.
    pub fn reduce_cyclic(&self, w: &Word, used: &mut BTreeSet<usize>) -> Word {
        let mut cur = self.reduce(w, used).cyclic_reduction().0;
        'outer: loop {
            let n = cur.len();
            for k in 1..n {
                let mut u = BTreeSet::new();
                let cand = self.reduce(&cur.rotate(k), &mut u).cyclic_reduction().0;
                if cand.len() < n {
                    used.extend(u);
                    cur = cand;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.reduce(w, &mut BTreeSet::new()).is_identity()
    }

    /// `a` and `b` define the same normal closure modulo the commutations:
    /// some rotation of `b^±1` equals `a`.
    pub fn same_relator(&self, a: &Word, b: &Word, used: &mut BTreeSet<usize>) -> bool {
        let ra = self.reduce_cyclic(a, used);
        let rb = self.reduce_cyclic(b, used);
        if ra.len() != rb.len() {
            return false;
        }
        for cand in [rb.clone(), rb.invert()] {
            for k in 0..cand.len().max(1) {
                let mut u = BTreeSet::new();
                let diff = ra.multiply(&cand.rotate(k).invert()).expect("same alphabet");
                if self.reduce(&diff, &mut u).is_identity() {
                    used.extend(u);
                    return true;
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PruneReason {
    /// Reduces to the identity modulo the listed relators' commutations.
    Trivial,
    /// Same relator (up to conjugacy and inversion) as `duplicate_of`.
    Duplicate { duplicate_of: usize },
}

/// A relator removed by [`prune_redundant`]; indices refer to the input
/// presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pruned {
    pub index: usize,
    pub relator: String,
    pub reason: PruneReason,
    pub using: Vec<usize>,
}

/// Drop relators that are consequences of the remaining ones by
/// commutation rewriting. Longest relators are tried first so shorter
/// equivalent forms survive. The group presented is unchanged.
pub fn prune_redundant(p: &Presentation) -> Result<(Presentation, Vec<Pruned>), PresentationError> {
    let rels = p.relators().to_vec();
    let mut alive: Vec<bool> = vec![true; rels.len()];
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by(|&a, &b| rels[b].len().cmp(&rels[a].len()).then(b.cmp(&a)));
    let mut pruned = Vec::new();

    for &i in &order {
        let excluded: Vec<usize> = (0..rels.len()).filter(|&j| j == i || !alive[j]).collect();
        let rw = CommutationRewriter::from_relators(&rels, &excluded);
        let mut used = BTreeSet::new();
        let reduced = rw.reduce_cyclic(&rels[i], &mut used);
        let reason = if reduced.is_identity() {
            Some(PruneReason::Trivial)
        } else {
            (0..rels.len())
                .filter(|&j| j != i && alive[j])
                .find(|&j| {
                    let mut u = BTreeSet::new();
                    let hit = rw.same_relator(&rels[i], &rels[j], &mut u);
                    if hit {
                        used.extend(u);
                    }
                    hit
                })
                .map(|j| {
                    used.insert(j);
                    PruneReason::Duplicate { duplicate_of: j }
                })
        };
        if let Some(reason) = reason {
            alive[i] = false;
            pruned.push(Pruned { index: i, relator: rels[i].to_string(), reason, using: used.into_iter().collect() });
        }
    }

    let kept = rels.into_iter().zip(&alive).filter(|(_, &a)| a).map(|(r, _)| r).collect();
    Ok((Presentation::new(p.alphabet().clone(), kept, p.exactness())?, pruned))
}
