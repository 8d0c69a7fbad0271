//! The building blocks V, W, P1, P2, P and X, and the end-to-end check.
//!
//! Every presentation here is generated: the complement data of the two
//! Lagrangian tori in `T^2 x T^2` is relabeled, surgered, summed and
//! pruned. Nothing is entered by hand.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::coset_enum::certify_trivial;
use crate::dsl::parse_word;
use crate::manifold::{
    blow_up, classify, luttinger, resolve_intersection, symplectic_sum, LagrangianTorusMark, ManifoldError, ManifoldState,
    Parity, SumSpec, SurfaceMark,
};
use crate::presentations::{prune_redundant, tietze_simplify, Exactness, Presentation, PresentationError};
use crate::report::{check_trivial, Budget, Report, Verdict};
use crate::words::{Alphabet, Substitution, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LibraryError {
    #[error("relabeling is not invertible: {0}")]
    NonInvertible(String),
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Which of the two tori factors are closed up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Both factors punctured.
    OpenOpen,
    /// The `x, y` factor closed: adds `[x, y]`.
    ClosedH,
    /// The `a, b` factor closed: adds `[a, b]`.
    ClosedK,
    /// `T^4` minus the tori: adds both.
    FourTorus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusTriple {
    pub mu: Word,
    pub m: Word,
    pub l: Word,
}

/// Generators, torus triples and universal relators of the complement of
/// `T1 ∪ T2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementData {
    pub variant: Variant,
    pub alphabet: Alphabet,
    pub t1: TorusTriple,
    pub t2: TorusTriple,
    /// Relators holding for every variant.
    pub universal: Vec<Word>,
    /// `[x, y]` and/or `[a, b]` depending on the variant.
    pub closing: Vec<Word>,
    /// Commutation of each meridian with its push-offs. Off by default.
    pub boundary: Vec<Word>,
}

fn words(al: &Alphabet, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| parse_word(al, t).expect("static word")).collect()
}

pub fn complement_data(variant: Variant) -> ComplementData {
    let al = Alphabet::new(["x", "y", "a", "b"]).expect("static alphabet");
    let w = |t: &str| parse_word(&al, t).expect("static word");
    let universal = words(&al, &["[x, a]", "[y, a]", "[y, b a b^-1]", "[[x, y], b]", "[x, [a, b]]", "[y, [a, b]]"]);
    let closing = match variant {
        Variant::OpenOpen => vec![],
        Variant::ClosedH => vec![w("[x, y]")],
        Variant::ClosedK => vec![w("[a, b]")],
        Variant::FourTorus => vec![w("[x, y]"), w("[a, b]")],
    };
    let boundary = words(&al, &["[[b^-1, y^-1], x]", "[[b^-1, y^-1], a]", "[[x^-1, b], y]", "[[x^-1, b], b a b^-1]"]);
    ComplementData {
        variant,
        t1: TorusTriple { mu: w("[b^-1, y^-1]"), m: w("x"), l: w("a") },
        t2: TorusTriple { mu: w("[x^-1, b]"), m: w("y"), l: w("b a b^-1") },
        alphabet: al,
        universal,
        closing,
        boundary,
    }
}

/// Which universal relators a block carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selection {
    /// The first three universal relators plus the closing ones.
    #[default]
    Core,
    /// All of them.
    Full,
}

impl ComplementData {
    pub fn universal_relators(&self) -> Vec<Word> {
        self.universal.iter().chain(&self.closing).cloned().collect()
    }

    /// The generated presentation. Only a surjective bound: the listed
    /// relators hold but are not claimed to be complete.
    pub fn presentation(&self, selection: Selection, with_boundary: bool) -> Presentation {
        let take = match selection {
            Selection::Core => 3,
            Selection::Full => self.universal.len(),
        };
        let mut rels: Vec<Word> = self.universal[..take].to_vec();
        rels.extend(self.closing.iter().cloned());
        if with_boundary {
            rels.extend(self.boundary.iter().cloned());
        }
        Presentation::new(self.alphabet.clone(), rels, Exactness::SurjectiveBound).expect("same alphabet")
    }

    pub fn relabel(&self, r: &Relabel) -> Result<ComplementData, LibraryError> {
        if !self.alphabet.same_as(r.source()) && self.alphabet.names() != r.source().names() {
            return Err(LibraryError::NonInvertible("relabeling is for a different alphabet".into()));
        }
        let map = Substitution::by_name(&self.alphabet, r.source())?;
        let go = |w: &Word| -> Result<Word, LibraryError> { Ok(w.substitute(&map)?.substitute(&r.inverse)?) };
        let triple = |t: &TorusTriple| -> Result<TorusTriple, LibraryError> {
            Ok(TorusTriple { mu: go(&t.mu)?, m: go(&t.m)?, l: go(&t.l)? })
        };
        let all = |ws: &[Word]| ws.iter().map(go).collect::<Result<Vec<_>, _>>();
        Ok(ComplementData {
            variant: self.variant,
            alphabet: r.target().clone(),
            t1: triple(&self.t1)?,
            t2: triple(&self.t2)?,
            universal: all(&self.universal)?,
            closing: all(&self.closing)?,
            boundary: all(&self.boundary)?,
        })
    }
}

/// An invertible assignment of new generator names to signed old
/// generators, e.g. `x1 -> y, y1 -> x^-1`. Words are carried over by the
/// inverse assignment.
#[derive(Debug, Clone)]
pub struct Relabel {
    inverse: Substitution,
    pairs: Vec<(String, String)>,
}

impl Relabel {
    /// `pairs` are `(new name, image in the old alphabet)`.
    pub fn new(old: &Alphabet, pairs: &[(&str, &str)]) -> Result<Relabel, LibraryError> {
        let new = Alphabet::new(pairs.iter().map(|(n, _)| *n))?;
        let mut inverse = Substitution::new(old, &new);
        let mut hit = BTreeSet::new();
        for (n, image) in pairs {
            let w = parse_word(old, image).map_err(|e| LibraryError::NonInvertible(e.to_string()))?;
            let [syl] = w.syllables() else {
                return Err(LibraryError::NonInvertible(format!("`{image}` is not a signed generator")));
            };
            if syl.exponent.abs() != 1 || !hit.insert(syl.generator) {
                return Err(LibraryError::NonInvertible(format!("`{image}` is not a fresh signed generator")));
            }
            inverse = inverse.set(old.name(syl.generator), new.letter(n)?.pow(syl.exponent))?;
        }
        if hit.len() != old.len() {
            return Err(LibraryError::NonInvertible("some old generators have no preimage".into()));
        }
        Ok(Relabel { inverse, pairs: pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect() })
    }

    pub fn identity(old: &Alphabet) -> Relabel {
        let pairs: Vec<(&str, &str)> = old.names().iter().map(|n| (n.as_str(), n.as_str())).collect();
        Relabel::new(old, &pairs).expect("identity is invertible")
    }

    pub fn source(&self) -> &Alphabet {
        self.inverse.source()
    }

    pub fn target(&self) -> &Alphabet {
        self.inverse.target()
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }
}

/// `after = conjugator · before^sign · conjugator⁻¹`, so both relators
/// have the same normal closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationProof {
    pub index: usize,
    pub before: Word,
    pub after: Word,
    pub conjugator: Word,
    pub sign: i64,
}

impl ConjugationProof {
    pub fn verify(&self) -> bool {
        let Ok(c) = self.before.pow(self.sign).conjugate_by(&self.conjugator) else {
            return false;
        };
        c == self.after
    }

    pub fn summary(&self) -> serde_json::Value {
        json!({
            "relator": self.index,
            "before": self.before.to_string(),
            "after": self.after.to_string(),
            "conjugator": self.conjugator.to_string(),
            "sign": self.sign,
        })
    }
}

/// Put every relator with a generator occurring exactly once into the
/// form `w g^-1`, by cyclic rotation and possibly inversion. Relators
/// with no such generator are left alone.
pub fn normalize_relators(p: &Presentation) -> (Presentation, Vec<ConjugationProof>) {
    let mut proofs = Vec::new();
    let mut rels = Vec::with_capacity(p.relators().len());
    for (i, r) in p.relators().iter().enumerate() {
        let (core, _) = r.cyclic_reduction();
        let single = p.alphabet().generators().filter(|&g| core.occurrences(g) == 1).last();
        let Some(g) = single else {
            rels.push(r.clone());
            continue;
        };
        let base = if core.exponent_sum(g) == 1 { core.invert() } else { core.clone() };
        let letters = base.letters();
        let at = letters.iter().position(|l| l.generator == g).expect("occurs once");
        let after = base.rotate((at + 1) % letters.len());
        if after != *r {
            let (conjugator, sign) = r.conjugacy_witness(&after).expect("a rotation is a conjugate");
            let proof = ConjugationProof { index: i, before: r.clone(), after: after.clone(), conjugator, sign };
            debug_assert!(proof.verify());
            proofs.push(proof);
        }
        rels.push(after);
    }
    let q = Presentation::new(p.alphabet().clone(), rels, p.exactness()).expect("same alphabet");
    (q, proofs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BuildOptions {
    pub selection: Selection,
    /// Include the meridian/push-off commutation relators.
    pub boundary_relators: bool,
    /// Rotate surgery relators into the `w g^-1` form.
    pub normalize: bool,
    /// Drop relators implied by commutation rewriting.
    pub prune: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { selection: Selection::Core, boundary_relators: false, normalize: true, prune: true }
    }
}

/// A Luttinger surgery on one of the block's tori. `p, q` give the slope
/// `p m + q l`: along `m` is `(1, 0)`, along `l` is `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Surgery {
    pub torus: &'static str,
    pub p: i64,
    pub q: i64,
    pub k: i64,
}

pub const ALONG_M: (i64, i64) = (1, 0);
pub const ALONG_L: (i64, i64) = (0, 1);

/// Surfaces a block exposes: `(id, boundary generator names)` for the
/// `x, y` factor and the `a, b` factor.
pub struct BlockSurfaces<'a> {
    pub h: (&'a str, [&'a str; 2]),
    pub k: (&'a str, [&'a str; 2]),
    /// Attach the closed-up complement presentations to the surfaces.
    pub complements: bool,
}

/// `T^4` with the two tori, relabeled, as a manifold state.
pub fn four_torus(relabel: &Relabel, surfaces: &BlockSurfaces<'_>, opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let data = complement_data(Variant::FourTorus).relabel(relabel)?;
    let al = data.alphabet.clone();
    let pi1 = data.presentation(opts.selection, opts.boundary_relators);
    let letters = |names: [&str; 2]| names.iter().map(|n| al.letter(n)).collect::<Result<Vec<_>, _>>();
    let mut h = SurfaceMark::new(surfaces.h.0, 1, letters(surfaces.h.1)?);
    let mut k = SurfaceMark::new(surfaces.k.0, 1, letters(surfaces.k.1)?);
    if surfaces.complements {
        // removing the x,y torus leaves the x,y factor closed, and vice versa
        h.complement =
            Some(complement_data(Variant::ClosedH).relabel(relabel)?.presentation(opts.selection, opts.boundary_relators));
        k.complement =
            Some(complement_data(Variant::ClosedK).relabel(relabel)?.presentation(opts.selection, opts.boundary_relators));
    }
    let torus =
        |id: &str, t: &TorusTriple| LagrangianTorusMark { id: id.to_string(), mu: t.mu.clone(), m: t.m.clone(), l: t.l.clone() };
    Ok(ManifoldState::new(pi1, 0, 0)
        .with_parity(Parity::Even)
        .with_torus(torus("T1", &data.t1))
        .with_torus(torus("T2", &data.t2))
        .as_torus_block(&["T1", "T2"])
        .with_surface(h)
        .with_surface(k)
        .with_intersection(surfaces.h.0, surfaces.k.0))
}

/// Normalize and prune the group and every surface complement.
pub fn tidy(s: &ManifoldState, opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let go = |p: &Presentation| -> Result<Presentation, LibraryError> {
        let p = if opts.normalize { normalize_relators(p).0 } else { p.clone() };
        Ok(if opts.prune { prune_redundant(&p)?.0 } else { p })
    };
    let mut out = s.clone();
    out.pi1 = go(&s.pi1)?;
    for surf in &mut out.surfaces {
        if let Some(c) = &surf.complement {
            surf.complement = Some(go(c)?);
        }
    }
    Ok(out)
}

fn surgered(block: ManifoldState, surgeries: &[Surgery], opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let mut s = block;
    for op in surgeries {
        s = luttinger(&s, op.torus, op.p, op.q, op.k)?;
    }
    tidy(&s, opts)
}

pub fn v_relabel() -> Relabel {
    let old = complement_data(Variant::FourTorus).alphabet;
    Relabel::new(&old, &[("s1", "x"), ("t1", "y"), ("s2", "a"), ("t2", "b")]).expect("static relabeling")
}

/// The relabeling `x_i -> y, y_i -> x^-1, s_i -> b, t_i -> a^-1`.
pub fn m_relabel(i: u32) -> Relabel {
    let old = complement_data(Variant::FourTorus).alphabet;
    let (x, y, s, t) = (format!("x{i}"), format!("y{i}"), format!("s{i}"), format!("t{i}"));
    Relabel::new(&old, &[(&x, "y"), (&y, "x^-1"), (&s, "b"), (&t, "a^-1")]).expect("static relabeling")
}

pub const V_SURGERIES: [Surgery; 2] =
    [Surgery { torus: "T1", p: ALONG_M.0, q: ALONG_M.1, k: -1 }, Surgery { torus: "T2", p: ALONG_L.0, q: ALONG_L.1, k: -1 }];

pub const M1_SURGERIES: [Surgery; 2] =
    [Surgery { torus: "T1", p: ALONG_M.0, q: ALONG_M.1, k: 1 }, Surgery { torus: "T2", p: ALONG_L.0, q: ALONG_L.1, k: 1 }];

pub const M2_SURGERIES: [Surgery; 2] =
    [Surgery { torus: "T1", p: ALONG_L.0, q: ALONG_L.1, k: 1 }, Surgery { torus: "T2", p: ALONG_M.0, q: ALONG_M.1, k: -1 }];

pub fn build_v_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let surfaces = BlockSurfaces { h: ("H", ["s1", "t1"]), k: ("K", ["s2", "t2"]), complements: false };
    surgered(four_torus(&v_relabel(), &surfaces, opts)?, &V_SURGERIES, opts)
}

pub fn build_v() -> Result<ManifoldState, LibraryError> {
    build_v_with(BuildOptions::default())
}

pub fn build_w_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let v = build_v_with(opts)?;
    let g = resolve_intersection(&v, "H", "K", "G")?;
    Ok(blow_up(&g, Some("G"), 2)?)
}

pub fn build_w() -> Result<ManifoldState, LibraryError> {
    build_w_with(BuildOptions::default())
}

fn build_m(i: u32, surgeries: &[Surgery], opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let (h, k) = (format!("H{i}"), format!("K{i}"));
    let (x, y, s, t) = (format!("x{i}"), format!("y{i}"), format!("s{i}"), format!("t{i}"));
    let surfaces = BlockSurfaces { h: (&h, [&x, &y]), k: (&k, [&s, &t]), complements: true };
    surgered(four_torus(&m_relabel(i), &surfaces, opts)?, surgeries, opts)
}

/// The closed block `M_1`; the complement of its surface `H1` is `P_1`.
pub fn build_p1_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    build_m(1, &M1_SURGERIES, opts)
}

pub fn build_p1() -> Result<ManifoldState, LibraryError> {
    build_p1_with(BuildOptions::default())
}

/// The closed block `M_2`; the complement of its surface `H2` is `P_2`.
pub fn build_p2_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    build_m(2, &M2_SURGERIES, opts)
}

pub fn build_p2() -> Result<ManifoldState, LibraryError> {
    build_p2_with(BuildOptions::default())
}

pub fn build_p_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let spec = SumSpec {
        surf_a: "H1".into(),
        surf_b: "H2".into(),
        pairing: vec![("x1".into(), "x2".into()), ("y1".into(), "y2".into())],
        relative: Some(("K1".into(), "K2".into(), "F".into())),
    };
    Ok(symplectic_sum(&build_p1_with(opts)?, &build_p2_with(opts)?, &spec)?)
}

pub fn build_p() -> Result<ManifoldState, LibraryError> {
    build_p_with(BuildOptions::default())
}

pub fn build_x_with(opts: BuildOptions) -> Result<ManifoldState, LibraryError> {
    let spec = SumSpec {
        surf_a: "F".into(),
        surf_b: "G".into(),
        pairing: ["s1", "t1", "s2", "t2"].iter().map(|g| (g.to_string(), g.to_string())).collect(),
        relative: None,
    };
    Ok(symplectic_sum(&build_p_with(opts)?, &build_w_with(opts)?, &spec)?)
}

pub fn build_x() -> Result<ManifoldState, LibraryError> {
    build_x_with(BuildOptions::default())
}

/// Builder by name, as used from scripts.
pub fn build_named(name: &str) -> Option<Result<ManifoldState, LibraryError>> {
    Some(match name {
        "V" | "build_V" => build_v(),
        "W" | "build_W" => build_w(),
        "P1" | "build_P1" => build_p1(),
        "P2" | "build_P2" => build_p2(),
        "P" | "build_P" => build_p(),
        "X" | "build_X" => build_x(),
        _ => return None,
    })
}

/// For each reference relator, the index of the relator of `p` with the
/// same normal closure by cyclic conjugation and inversion.
pub fn match_relators(p: &Presentation, reference: &[Word]) -> Result<Vec<usize>, usize> {
    reference
        .iter()
        .enumerate()
        .map(|(i, r)| p.relators().iter().position(|q| q.conjugacy_witness(r).is_some()).ok_or(i))
        .collect()
}

/// One step of a scripted kill order: `generator` dies using the cited
/// relators, with every previously killed generator set to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillStep {
    pub generator: String,
    /// Keys into the numbered relator table.
    pub relators: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KillStepResult {
    pub step: usize,
    pub generator: String,
    pub cited: Vec<usize>,
    pub missing: Vec<usize>,
    /// The generator's value after simplifying the cited relators; the
    /// step succeeds when this is `1`.
    pub residue: String,
    pub killed: bool,
}

/// Replay a kill order against numbered relators. Stops at the first step
/// that fails; the returned list then ends with that step.
pub fn replay_kill_order(
    alphabet: &Alphabet,
    numbered: &HashMap<usize, Word>,
    steps: &[KillStep],
    tietze_budget: usize,
) -> Result<Vec<KillStepResult>, LibraryError> {
    let mut dead = Substitution::identity(alphabet);
    let mut out = Vec::new();
    for (k, step) in steps.iter().enumerate() {
        let g = alphabet.letter(&step.generator)?;
        let mut cited = Vec::new();
        let mut missing = Vec::new();
        for n in &step.relators {
            match numbered.get(n) {
                Some(w) => cited.push(w.substitute(&dead)?),
                None => missing.push(*n),
            }
        }
        let local = Presentation::new(alphabet.clone(), cited, Exactness::SurjectiveBound)?;
        let simplified = tietze_simplify(&local, tietze_budget)?;
        let residue = simplified.resolve(&g);
        let killed = residue.is_identity();
        out.push(KillStepResult {
            step: k + 1,
            generator: step.generator.clone(),
            cited: step.relators.clone(),
            missing,
            residue: residue.to_string(),
            killed,
        });
        if !killed {
            break;
        }
        dead = dead.set(&step.generator, alphabet.identity())?;
    }
    Ok(out)
}

pub const MAIN_THEOREM: &str = "X is simply connected with (e, sigma) = (6, -2), minimal and symplectic, \
hence homeomorphic but not diffeomorphic to CP²#3C̄P²";

/// Build X and check every computational claim about it.
pub fn verify_main_theorem(budget: Budget) -> Report {
    let mut report = Report::new();
    let x = match build_x() {
        Ok(x) => x,
        Err(e) => {
            report.push("build X", Verdict::Fail, json!({ "error": e.to_string() }));
            return report;
        }
    };
    let gens = x.pi1.generator_count();
    let rels = x.pi1.relators().len();
    report.push(
        "build X",
        if (gens, rels) == (8, 20) { Verdict::Pass } else { Verdict::Fail },
        json!({ "generators": gens, "relators": rels, "state": x.summary() }),
    );

    let h1 = x.pi1.homology_invariants();
    report.push(
        "H1(X presentation) = 0",
        if h1.is_trivial() { Verdict::Pass } else { Verdict::Fail },
        json!({ "h1": h1.to_string(), "smith_diagonal": crate::presentations::smith_normal_form(&x.pi1.abelianize()).iter().map(ToString::to_string).collect::<Vec<_>>() }),
    );

    let cert = certify_trivial(&x.pi1, budget.max_cosets).expect("own alphabet");
    let cert = match cert {
        Ok(c) => {
            report.push(
                "coset enumeration: index 1",
                Verdict::Pass,
                json!({ "index": c.index, "stats": c.stats, "max_cosets": budget.max_cosets }),
            );
            Some(c)
        }
        Err(res) => {
            let v = if res.index().is_some() { Verdict::Fail } else { Verdict::Inconclusive };
            report.push("coset enumeration: index 1", v, json!({ "outcome": format!("{:?}", res.outcome), "stats": res.stats }));
            None
        }
    };

    let t = tietze_simplify(&x.pi1, budget.tietze_steps).expect("own alphabet");
    let replayed = t.trace.replay().is_ok_and(|q| q.same_text(&t.presentation));
    let eliminated = t.trace.eliminated();
    let tietze_verdict = if t.is_trivial_group() && replayed && eliminated.len() == 8 {
        Verdict::Pass
    } else if t.complete {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };
    report.push(
        "Tietze reduction to the empty presentation",
        tietze_verdict,
        json!({ "eliminated": eliminated, "replayed": replayed, "steps": t.trace.to_json(), "result": t.presentation.to_string() }),
    );

    let inv_ok = (x.euler, x.signature) == (6, -2);
    report.push(
        "invariants e = 6, sigma = -2",
        if inv_ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "euler": x.euler, "signature": x.signature, "parity": x.parity }),
    );

    let chain: Vec<String> = x.minimality.rules().iter().map(ToString::to_string).collect();
    let min_ok = chain == ["R1", "R2", "R3"];
    for r in x.minimality.rules() {
        report.cite(r.citation());
    }
    report.push(
        "minimality R1 -> R2 -> R3",
        if min_ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "minimality": x.minimality }),
    );

    match classify(&x, cert.as_ref()) {
        Ok(h) => {
            let ok = (h.b_plus, h.b_minus) == (1, 3) && h.exotic_note.is_some();
            for a in &h.axioms {
                report.cite(a);
            }
            report.push(
                "classification",
                if ok { Verdict::Pass } else { Verdict::Fail },
                serde_json::to_value(&h).expect("serializes"),
            );
        }
        Err(e) => {
            let v = if cert.is_none() { Verdict::Inconclusive } else { Verdict::Fail };
            report.push("classification", v, json!({ "error": e.to_string() }));
        }
    }
    report
}

/// Convenience: the full triviality check on a state's group.
pub fn check_state_trivial(s: &ManifoldState, budget: Budget) -> (Verdict, serde_json::Value) {
    check_trivial(&s.pi1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_variants() {
        let d = complement_data(Variant::OpenOpen);
        assert_eq!(d.t1.mu.to_string(), "b^-1 y^-1 b y");
        assert_eq!(d.t2.mu.to_string(), "x^-1 b x b^-1");
        assert_eq!(d.universal_relators().len(), 6);
        let four = complement_data(Variant::FourTorus).universal_relators();
        let s: Vec<String> = four.iter().map(ToString::to_string).collect();
        assert!(s.contains(&"x y x^-1 y^-1".to_string()) && s.contains(&"a b a^-1 b^-1".to_string()));
        let k: Vec<String> = complement_data(Variant::ClosedK).closing.iter().map(ToString::to_string).collect();
        assert_eq!(k, vec!["a b a^-1 b^-1"]);
    }

    #[test]
    fn relabel_rejects_non_invertible() {
        let old = complement_data(Variant::OpenOpen).alphabet;
        assert!(Relabel::new(&old, &[("p", "x"), ("q", "x"), ("r", "a"), ("s", "b")]).is_err());
        assert!(Relabel::new(&old, &[("p", "x y"), ("q", "y"), ("r", "a"), ("s", "b")]).is_err());
        assert!(Relabel::new(&old, &[("p", "x"), ("q", "y"), ("r", "a")]).is_err());
        assert!(Relabel::new(&old, &[("p", "x^2"), ("q", "y"), ("r", "a"), ("s", "b")]).is_err());
    }

    #[test]
    fn relabel_identity_and_psi() {
        let d = complement_data(Variant::OpenOpen);
        let same = d.relabel(&Relabel::identity(&d.alphabet)).unwrap();
        assert_eq!(same.t2.l.to_string(), d.t2.l.to_string());
        let p1 = d.relabel(&m_relabel(1)).unwrap();
        assert_eq!(p1.t2.l.to_string(), "s1 t1^-1 s1^-1");
        assert_eq!(p1.t1.mu.to_string(), "s1^-1 x1^-1 s1 x1");
    }

    #[test]
    fn normalization_is_a_conjugation() {
        let al = Alphabet::new(["s1", "t1", "s2", "t2"]).unwrap();
        let raw = parse_word(&al, "s1^-1 t2 s1 s2^-1 t2^-1").unwrap();
        let p = Presentation::new(al.clone(), vec![raw], Exactness::Exact).unwrap();
        let (q, proofs) = normalize_relators(&p);
        assert_eq!(q.relators()[0], parse_word(&al, "[t2^-1, s1^-1] s2^-1").unwrap());
        assert_eq!(proofs.len(), 1);
        assert!(proofs[0].verify());
    }

    #[test]
    fn kill_order_detects_failure() {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let numbered: HashMap<usize, Word> = [(1, parse_word(&al, "x y^-1").unwrap()), (2, parse_word(&al, "y").unwrap())].into();
        let steps =
            vec![KillStep { generator: "y".into(), relators: vec![2] }, KillStep { generator: "x".into(), relators: vec![1] }];
        let r = replay_kill_order(&al, &numbered, &steps, 100).unwrap();
        assert!(r.iter().all(|s| s.killed));
        let bad = vec![KillStep { generator: "x".into(), relators: vec![1] }];
        let r = replay_kill_order(&al, &numbered, &bad, 100).unwrap();
        assert!(!r[0].killed);
        assert_eq!(r[0].residue, "x");
    }
}
