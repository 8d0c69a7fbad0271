//! Todd–Coxeter coset enumeration (HLT strategy, union-find coincidences).

use serde::Serialize;
use thiserror::Error;

use crate::presentations::Presentation;
use crate::words::{Letter, Word};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("subgroup generator `{0}` is not over the presentation's alphabet")]
    ForeignWord(String),
    #[error("max_cosets must be at least 1")]
    ZeroBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    IndexFound { index: usize },
    BudgetExhausted { cosets_used: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TableStats {
    /// Cosets ever defined, including the initial one.
    pub defined: usize,
    /// Cosets identified away by coincidences.
    pub collapsed: usize,
    /// Largest number of simultaneously live cosets.
    pub max_live: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumResult {
    pub outcome: Outcome,
    pub stats: TableStats,
}

impl EnumResult {
    pub fn index(&self) -> Option<usize> {
        match self.outcome {
            Outcome::IndexFound { index } => Some(index),
            Outcome::BudgetExhausted { .. } => None,
        }
    }
}

/// Positive certificate that a presented group is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrivialityCertificate {
    pub index: usize,
    pub stats: TableStats,
    /// Each generator sends coset 1 to coset 1 in the closed table.
    pub witnesses: Vec<GeneratorWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorWitness {
    pub generator: String,
    pub image_of_coset_1: usize,
}

const NONE: usize = usize::MAX;

struct Table {
    cols: usize,
    rows: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    collapsed: usize,
    max_live: usize,
    queue: Vec<usize>,
}

impl Table {
    fn new(cols: usize) -> Self {
        let mut t = Table { cols, rows: Vec::new(), parent: Vec::new(), live: 0, collapsed: 0, max_live: 0, queue: Vec::new() };
        t.new_coset();
        t
    }

    fn defined(&self) -> usize {
        self.parent.len()
    }

    fn new_coset(&mut self) -> usize {
        let c = self.parent.len();
        self.parent.push(c);
        self.rows.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.max_live = self.max_live.max(self.live);
        c
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.rows[c * self.cols + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.rows[c * self.cols + x] = d;
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = c;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop] = keep;
        self.queue.push(drop);
        self.live -= 1;
        self.collapsed += 1;
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                let xi = x ^ 1;
                if self.get(f, xi) == e {
                    self.set(f, xi, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else {
                    let fxi = self.get(f1, xi);
                    if fxi != NONE {
                        self.merge(e1, fxi);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, xi, e1);
                    }
                }
            }
        }
    }

    fn define(&mut self, c: usize, x: usize) -> usize {
        let d = self.new_coset();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        d
    }

    /// Trace `word` from `c` forwards and backwards; define new cosets to
    /// close any gap. Returns `false` if the budget ran out.
    fn scan_and_fill(&mut self, c: usize, word: &[usize], max: usize) -> bool {
        let n = word.len();
        if n == 0 {
            return true;
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0;
        let mut j = n;
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return true;
            } else if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            } else if i + 1 == j {
                // deduction
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return true;
            }
            if self.defined() >= max {
                return false;
            }
            self.define(f, word[i]);
        }
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters().into_iter().map(Letter::column).collect()
}

/// Enumerate cosets of the subgroup generated by `subgroup_gens` in the
/// group presented by `p`, defining at most `max_cosets` cosets in total.
pub fn todd_coxeter(p: &Presentation, subgroup_gens: &[Word], max_cosets: usize) -> Result<EnumResult, EnumError> {
    run(p, subgroup_gens, max_cosets).map(|(res, _)| res)
}

fn run(p: &Presentation, subgroup_gens: &[Word], max_cosets: usize) -> Result<(EnumResult, Table), EnumError> {
    if max_cosets == 0 {
        return Err(EnumError::ZeroBudget);
    }
    for w in subgroup_gens {
        if !w.alphabet().same_as(p.alphabet()) {
            return Err(EnumError::ForeignWord(w.to_string()));
        }
    }
    let cols = 2 * p.generator_count();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(columns).collect();
    let subgroup: Vec<Vec<usize>> = subgroup_gens.iter().map(columns).collect();
    let mut t = Table::new(cols);

    let exhausted = |t: &Table| EnumResult {
        outcome: Outcome::BudgetExhausted { cosets_used: t.defined() },
        stats: TableStats { defined: t.defined(), collapsed: t.collapsed, max_live: t.max_live },
    };

    for w in &subgroup {
        if !t.scan_and_fill(0, w, max_cosets) {
            return Ok((exhausted(&t), t));
        }
    }

    let mut c = 0;
    while c < t.defined() {
        for r in &relators {
            if !t.is_live(c) {
                break;
            }
            if !t.scan_and_fill(c, r, max_cosets) {
                return Ok((exhausted(&t), t));
            }
        }
        for x in 0..cols {
            if !t.is_live(c) {
                break;
            }
            if t.get(c, x) == NONE {
                if t.defined() >= max_cosets {
                    return Ok((exhausted(&t), t));
                }
                t.define(c, x);
            }
        }
        c += 1;
    }

    assert!(verify_closed(&mut t, &relators, &subgroup), "closed coset table failed its consistency check");
    let res = EnumResult {
        outcome: Outcome::IndexFound { index: t.live },
        stats: TableStats { defined: t.defined(), collapsed: t.collapsed, max_live: t.max_live },
    };
    Ok((res, t))
}

/// Every live row is full, inverse-consistent, and every relator closes at
/// every live coset.
fn verify_closed(t: &mut Table, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> bool {
    let live: Vec<usize> = (0..t.defined()).filter(|&c| t.is_live(c)).collect();
    for &c in &live {
        for x in 0..t.cols {
            let d = t.get(c, x);
            if d == NONE || !t.is_live(d) || t.get(d, x ^ 1) != c {
                return false;
            }
        }
        for r in relators {
            if r.iter().fold(c, |cur, &x| t.get(cur, x)) != c {
                return false;
            }
        }
    }
    subgroup.iter().all(|w| w.iter().fold(0, |cur, &x| t.get(cur, x)) == 0)
}

/// Run an enumeration over the trivial subgroup and, on index 1, record
/// that every generator fixes the single coset.
pub fn certify_trivial(p: &Presentation, max_cosets: usize) -> Result<Result<TrivialityCertificate, EnumResult>, EnumError> {
    let (res, mut t) = run(p, &[], max_cosets)?;
    if res.index() != Some(1) {
        return Ok(Err(res));
    }
    let mut witnesses = Vec::with_capacity(p.generator_count());
    for g in p.alphabet().generators() {
        let image = t.get(0, 2 * g.0);
        let image = t.rep(image);
        if image != 0 {
            return Ok(Err(res));
        }
        witnesses.push(GeneratorWitness { generator: p.alphabet().name(g).to_string(), image_of_coset_1: image + 1 });
    }
    Ok(Ok(TrivialityCertificate { index: 1, stats: res.stats, witnesses }))
}
