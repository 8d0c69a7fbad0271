//! Manifold states and the construction moves on them.
//!
//! A state records a presentation of (a group surjecting onto) the
//! fundamental group, the Euler characteristic and signature, and
//! rule-based flags. Geometry is never computed; minimality in particular
//! is propagated by the four rules of [`MinimalityRule`] and is otherwise
//! `Unknown`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::coset_enum::TrivialityCertificate;
use crate::presentations::{Exactness, Presentation, PresentationError};
use crate::words::{Alphabet, Substitution, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifoldError {
    #[error("no torus named `{0}`")]
    UnknownTorus(String),
    #[error("no surface named `{0}`")]
    UnknownSurface(String),
    #[error("surgery coefficient k must be nonzero")]
    ZeroCoefficient,
    #[error("surgery slope ({p}, {q}) is not primitive")]
    NotCoprime { p: i64, q: i64 },
    #[error("blowup count must be positive")]
    ZeroCount,
    #[error("surfaces have genus {0} and {1}")]
    GenusMismatch(u32, u32),
    #[error("surface `{id}` has self-intersection {self_intersection}, need 0")]
    NontrivialNormalBundle { id: String, self_intersection: i64 },
    #[error("surfaces `{0}` and `{1}` are not recorded as meeting once")]
    NotIntersecting(String, String),
    #[error("surface `{0}` carries no complement presentation")]
    MissingComplement(String),
    #[error("generator `{0}` occurs on both sides of the sum")]
    AlphabetClash(String),
    #[error("bad pairing: {0}")]
    BadPairing(String),
    #[error("classification needs a triviality certificate")]
    MissingCertificate,
    #[error("certificate has index {0}, not 1")]
    NotTrivial(usize),
    #[error("intersection form parity is {0}; only odd forms are classified")]
    ParityNotOdd(Parity),
    #[error("(e, sigma) = ({euler}, {signature}) gives no integral nonnegative b+ and b-")]
    BettiArithmetic { euler: i64, signature: i64 },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Unknown,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Unknown => "unknown",
        })
    }
}

/// Parity forced by the signature alone: even unimodular forms have
/// signature divisible by 8.
fn parity_from_signature(signature: i64) -> Parity {
    if signature.rem_euclid(8) != 0 {
        Parity::Odd
    } else {
        Parity::Unknown
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum MinimalityRule {
    /// Luttinger surgery on both tori of the two-torus pattern in T^4.
    R1,
    /// Symplectic sum of two minimal pieces.
    R2,
    /// Sum with a piece whose -1 spheres all meet the gluing surface.
    R3,
    /// Blowing up.
    R4,
}

impl MinimalityRule {
    pub fn citation(self) -> &'static str {
        match self {
            MinimalityRule::R1 => "aspherical circle bundle after the two torus surgeries (pi_2 = 0)",
            MinimalityRule::R2 => "Usher: sums of minimal symplectic manifolds are minimal",
            MinimalityRule::R3 => "Usher: sum is minimal when every -1 sphere of one side meets its surface",
            MinimalityRule::R4 => "an exceptional sphere has square -1",
        }
    }
}

impl fmt::Display for MinimalityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Minimality {
    Minimal { rules: Vec<MinimalityRule> },
    NotMinimal { reason: String },
    Unknown,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal { .. })
    }

    pub fn rules(&self) -> &[MinimalityRule] {
        match self {
            Minimality::Minimal { rules } => rules,
            _ => &[],
        }
    }
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Minimality::Minimal { rules } => {
                let chain: Vec<String> = rules.iter().map(ToString::to_string).collect();
                write!(f, "minimal ({})", chain.join(" -> "))
            }
            Minimality::NotMinimal { reason } => write!(f, "not minimal ({reason})"),
            Minimality::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalBundle {
    Trivial,
    Other,
}

/// An embedded symplectic surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceMark {
    pub id: String,
    pub genus: u32,
    pub self_intersection: i64,
    /// Reason the meridian is nullhomotopic in the complement, if it is.
    pub meridian_killed: Option<String>,
    /// Images of the standard symplectic generators `s1, t1, s2, t2, ...`.
    pub boundary_generators: Vec<Word>,
    /// Presentation of the complement, over the state's alphabet.
    pub complement: Option<Presentation>,
    /// Every -1 sphere of the ambient manifold meets this surface.
    pub exceptional_spheres_meet: bool,
}

impl SurfaceMark {
    pub fn new(id: impl Into<String>, genus: u32, boundary_generators: Vec<Word>) -> Self {
        SurfaceMark {
            id: id.into(),
            genus,
            self_intersection: 0,
            meridian_killed: None,
            boundary_generators,
            complement: None,
            exceptional_spheres_meet: false,
        }
    }

    pub fn with_complement(mut self, complement: Presentation) -> Self {
        self.complement = Some(complement);
        self
    }

    pub fn normal(&self) -> NormalBundle {
        if self.self_intersection == 0 {
            NormalBundle::Trivial
        } else {
            NormalBundle::Other
        }
    }

    fn summary(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "genus": self.genus,
            "self_intersection": self.self_intersection,
            "normal_bundle": self.normal(),
            "meridian_killed": self.meridian_killed,
            "boundary_generators": self.boundary_generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "complement_relators": self.complement.as_ref().map(|c| c.relators().len()),
            "exceptional_spheres_meet": self.exceptional_spheres_meet,
        })
    }
}

/// A Lagrangian torus with its meridian and two Lagrangian push-offs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianTorusMark {
    pub id: String,
    pub mu: Word,
    pub m: Word,
    pub l: Word,
}

/// A surgery that has been performed, kept for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryRecord {
    pub torus: String,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub relator: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct TorusBlock {
    tori: Vec<String>,
    surgered: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ManifoldState {
    pub pi1: Presentation,
    pub euler: i64,
    pub signature: i64,
    pub symplectic: bool,
    pub minimality: Minimality,
    pub parity: Parity,
    pub surfaces: Vec<SurfaceMark>,
    pub tori: Vec<LagrangianTorusMark>,
    /// Pairs of surfaces meeting transversally and positively in one point.
    pub intersections: Vec<(String, String)>,
    pub surgeries: Vec<SurgeryRecord>,
    block: Option<TorusBlock>,
}

impl ManifoldState {
    pub fn new(pi1: Presentation, euler: i64, signature: i64) -> Self {
        ManifoldState {
            pi1,
            euler,
            signature,
            symplectic: true,
            minimality: Minimality::Unknown,
            parity: parity_from_signature(signature),
            surfaces: Vec::new(),
            tori: Vec::new(),
            intersections: Vec::new(),
            surgeries: Vec::new(),
            block: None,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.pi1.alphabet()
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn with_surface(mut self, s: SurfaceMark) -> Self {
        self.surfaces.push(s);
        self
    }

    pub fn with_torus(mut self, t: LagrangianTorusMark) -> Self {
        self.tori.push(t);
        self
    }

    pub fn with_intersection(mut self, a: &str, b: &str) -> Self {
        self.intersections.push((a.to_string(), b.to_string()));
        self
    }

    /// Mark the listed tori as the two-torus pattern of a T^4 block:
    /// surgering all of them (and nothing else) yields a minimal manifold.
    pub fn as_torus_block(mut self, tori: &[&str]) -> Self {
        self.block = Some(TorusBlock { tori: tori.iter().map(|s| s.to_string()).collect(), surgered: Vec::new() });
        self
    }

    pub fn surface(&self, id: &str) -> Result<&SurfaceMark, ManifoldError> {
        self.surfaces.iter().find(|s| s.id == id).ok_or_else(|| ManifoldError::UnknownSurface(id.to_string()))
    }

    fn surface_index(&self, id: &str) -> Result<usize, ManifoldError> {
        self.surfaces.iter().position(|s| s.id == id).ok_or_else(|| ManifoldError::UnknownSurface(id.to_string()))
    }

    pub fn torus(&self, id: &str) -> Result<&LagrangianTorusMark, ManifoldError> {
        self.tori.iter().find(|t| t.id == id).ok_or_else(|| ManifoldError::UnknownTorus(id.to_string()))
    }

    /// Invariants, presentation and marks as a JSON document.
    pub fn summary(&self) -> serde_json::Value {
        json!({
            "invariants": {
                "euler": self.euler,
                "signature": self.signature,
                "symplectic": self.symplectic,
                "parity": self.parity,
                "minimality": self.minimality,
                "h1": self.pi1.homology_invariants().to_string(),
            },
            "presentation": {
                "generators": self.pi1.alphabet().names(),
                "relators": self.pi1.relators().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "exactness": self.pi1.exactness().to_string(),
            },
            "marks": {
                "surfaces": self.surfaces.iter().map(SurfaceMark::summary).collect::<Vec<_>>(),
                "tori": self.tori.iter().map(|t| json!({
                    "id": t.id, "mu": t.mu.to_string(), "m": t.m.to_string(), "l": t.l.to_string(),
                })).collect::<Vec<_>>(),
                "intersections": self.intersections,
                "surgeries": self.surgeries,
            },
        })
    }
}

/// The Luttinger relator `mu m^(kp) l^(kq)`.
pub fn luttinger_relator(t: &LagrangianTorusMark, p: i64, q: i64, k: i64) -> Result<Word, ManifoldError> {
    check_slope(p, q, k)?;
    Ok(t.mu.multiply(&t.m.pow(k * p))?.multiply(&t.l.pow(k * q))?)
}

fn check_slope(p: i64, q: i64, k: i64) -> Result<(), ManifoldError> {
    if k == 0 {
        return Err(ManifoldError::ZeroCoefficient);
    }
    if p.gcd(&q) != 1 {
        return Err(ManifoldError::NotCoprime { p, q });
    }
    Ok(())
}

/// `1/k` Luttinger surgery on a marked torus along the slope `p m + q l`.
///
/// The relator is added to the fundamental group and to every surface
/// complement. The torus mark is consumed.
pub fn luttinger(s: &ManifoldState, torus_id: &str, p: i64, q: i64, k: i64) -> Result<ManifoldState, ManifoldError> {
    let t = s.torus(torus_id)?;
    let rel = luttinger_relator(t, p, q, k)?;
    let mut out = s.clone();
    out.pi1 = s.pi1.quotient_by(std::slice::from_ref(&rel))?;
    for surf in &mut out.surfaces {
        if let Some(c) = &surf.complement {
            surf.complement = Some(c.quotient_by(std::slice::from_ref(&rel))?);
        }
    }
    out.tori.retain(|t| t.id != torus_id);
    out.surgeries.push(SurgeryRecord { torus: torus_id.to_string(), p, q, k, relator: rel.to_string() });
    if out.parity == Parity::Even {
        out.parity = parity_from_signature(out.signature);
    }

    let mut r1 = false;
    if let Some(block) = &mut out.block {
        if block.tori.iter().any(|t| t == torus_id) {
            block.surgered.push(torus_id.to_string());
            r1 = block.tori.iter().all(|t| block.surgered.contains(t));
        } else {
            out.block = None;
        }
    }
    out.minimality = match &s.minimality {
        Minimality::NotMinimal { reason } => Minimality::NotMinimal { reason: reason.clone() },
        _ if r1 => Minimality::Minimal { rules: vec![MinimalityRule::R1] },
        _ => Minimality::Unknown,
    };
    Ok(out)
}

/// How the two sides of a symplectic sum are glued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSpec {
    pub surf_a: String,
    pub surf_b: String,
    /// Boundary generators of `surf_a` paired with those of `surf_b`, by
    /// their printed words.
    pub pairing: Vec<(String, String)>,
    /// Surfaces `(on a, on b, new id)` whose boundaries line up in a
    /// relative sum and close up to one surface.
    pub relative: Option<(String, String, String)>,
}

/// Symplectic sum along surfaces of equal genus with trivial normal bundle.
///
/// When one side's surface has a nullhomotopic meridian, the result's
/// group is the other side's group modulo the killed side's relators
/// pulled through the pairing. Otherwise it is the union of the two
/// complements plus the identification relators. Either way the result
/// only surjects onto the true fundamental group.
pub fn symplectic_sum(a: &ManifoldState, b: &ManifoldState, spec: &SumSpec) -> Result<ManifoldState, ManifoldError> {
    let sa = a.surface(&spec.surf_a)?;
    let sb = b.surface(&spec.surf_b)?;
    if sa.genus != sb.genus {
        return Err(ManifoldError::GenusMismatch(sa.genus, sb.genus));
    }
    for s in [sa, sb] {
        if s.self_intersection != 0 {
            return Err(ManifoldError::NontrivialNormalBundle { id: s.id.clone(), self_intersection: s.self_intersection });
        }
    }
    let pairs = resolve_pairing(sa, sb, &spec.pairing)?;

    let (pi1, mut surfaces) = if sb.meridian_killed.is_some() {
        (absorb(&a.pi1, &b.pi1, &pairs, false)?, carry(a, &spec.surf_a, &a.pi1)?)
    } else if sa.meridian_killed.is_some() {
        (absorb(&b.pi1, &a.pi1, &pairs, true)?, carry(b, &spec.surf_b, &b.pi1)?)
    } else {
        let ca = sa.complement.as_ref().ok_or_else(|| ManifoldError::MissingComplement(sa.id.clone()))?;
        let cb = sb.complement.as_ref().ok_or_else(|| ManifoldError::MissingComplement(sb.id.clone()))?;
        let pi1 = glue(ca, cb, &pairs)?;
        let mut surfaces = carry(a, &spec.surf_a, &pi1)?;
        surfaces.extend(carry(b, &spec.surf_b, &pi1)?);
        (pi1, surfaces)
    };

    if let Some((ra, rb, id)) = &spec.relative {
        let ia = surfaces.iter().position(|s| &s.id == ra).ok_or_else(|| ManifoldError::UnknownSurface(ra.clone()))?;
        let left = surfaces.remove(ia);
        let ib = surfaces.iter().position(|s| &s.id == rb).ok_or_else(|| ManifoldError::UnknownSurface(rb.clone()))?;
        let right = surfaces.remove(ib);
        let mut joined = SurfaceMark::new(id.clone(), left.genus + right.genus, left.boundary_generators.clone());
        joined.boundary_generators.extend(right.boundary_generators.iter().cloned());
        joined.self_intersection = left.self_intersection + right.self_intersection;
        surfaces.push(joined);
    }

    let euler = a.euler + b.euler - 2 * (2 - 2 * i64::from(sa.genus));
    let signature = a.signature + b.signature;
    let minimality = sum_minimality(a, sa, b, sb);
    let parity = parity_from_signature(signature);
    Ok(ManifoldState {
        pi1,
        euler,
        signature,
        symplectic: a.symplectic && b.symplectic,
        minimality,
        parity,
        surfaces,
        tori: Vec::new(),
        intersections: Vec::new(),
        surgeries: Vec::new(),
        block: None,
    })
}

fn sum_minimality(a: &ManifoldState, sa: &SurfaceMark, b: &ManifoldState, sb: &SurfaceMark) -> Minimality {
    let chain = |x: &[MinimalityRule], y: &[MinimalityRule], last: MinimalityRule| {
        let mut rules: Vec<MinimalityRule> = x.iter().chain(y).copied().collect();
        rules.push(last);
        rules.sort();
        rules.dedup();
        Minimality::Minimal { rules }
    };
    match (&a.minimality, &b.minimality) {
        (Minimality::Minimal { rules: x }, Minimality::Minimal { rules: y }) => chain(x, y, MinimalityRule::R2),
        (Minimality::Minimal { rules }, _) if sb.exceptional_spheres_meet => chain(rules, &[], MinimalityRule::R3),
        (_, Minimality::Minimal { rules }) if sa.exceptional_spheres_meet => chain(rules, &[], MinimalityRule::R3),
        _ => Minimality::Unknown,
    }
}

fn resolve_pairing(sa: &SurfaceMark, sb: &SurfaceMark, pairing: &[(String, String)]) -> Result<Vec<(Word, Word)>, ManifoldError> {
    if pairing.len() != sa.boundary_generators.len() || pairing.len() != sb.boundary_generators.len() {
        return Err(ManifoldError::BadPairing(format!(
            "{} pairs for {} and {} boundary generators",
            pairing.len(),
            sa.boundary_generators.len(),
            sb.boundary_generators.len()
        )));
    }
    let find = |s: &SurfaceMark, label: &str| {
        s.boundary_generators
            .iter()
            .find(|w| w.to_string() == label)
            .cloned()
            .ok_or_else(|| ManifoldError::BadPairing(format!("`{label}` is not a boundary generator of `{}`", s.id)))
    };
    let mut out: Vec<(Word, Word)> = Vec::new();
    for (x, y) in pairing {
        let pair = (find(sa, x)?, find(sb, y)?);
        if out.iter().any(|(p, q)| *p == pair.0 || *q == pair.1) {
            return Err(ManifoldError::BadPairing(format!("`{x}:{y}` repeats a generator")));
        }
        out.push(pair);
    }
    Ok(out)
}

/// `keep` modulo the relators of `killed`, each generator of `killed`
/// replaced by its partner on the kept side.
fn absorb(
    keep: &Presentation,
    killed: &Presentation,
    pairs: &[(Word, Word)],
    flipped: bool,
) -> Result<Presentation, ManifoldError> {
    let mut map = Substitution::new(killed.alphabet(), keep.alphabet());
    for (wa, wb) in pairs {
        let (kept, gone) = if flipped { (wb, wa) } else { (wa, wb) };
        let [syl] = gone.syllables() else {
            return Err(ManifoldError::BadPairing(format!("`{gone}` is not a generator")));
        };
        if syl.exponent != 1 {
            return Err(ManifoldError::BadPairing(format!("`{gone}` is not a generator")));
        }
        map = map.set(killed.alphabet().name(syl.generator), kept.clone())?;
    }
    let pulled = killed.substitute(&map).map_err(|e| match e {
        PresentationError::Word(WordError::MissingImage(g)) => {
            ManifoldError::BadPairing(format!("boundary generators do not generate; `{g}` has no partner"))
        }
        e => e.into(),
    })?;
    Ok(keep.quotient_by(pulled.relators())?.with_exactness(Exactness::SurjectiveBound))
}

fn glue(ca: &Presentation, cb: &Presentation, pairs: &[(Word, Word)]) -> Result<Presentation, ManifoldError> {
    let mut names: Vec<String> = ca.alphabet().names().to_vec();
    for n in cb.alphabet().names() {
        if names.contains(n) {
            return Err(ManifoldError::AlphabetClash(n.clone()));
        }
        names.push(n.clone());
    }
    let union = Alphabet::new(names)?;
    let ia = Substitution::by_name(ca.alphabet(), &union)?;
    let ib = Substitution::by_name(cb.alphabet(), &union)?;
    let mut relators: Vec<Word> = ca.substitute(&ia)?.relators().to_vec();
    relators.extend(cb.substitute(&ib)?.relators().iter().cloned());
    for (wa, wb) in pairs {
        relators.push(wa.substitute(&ia)?.multiply(&wb.substitute(&ib)?.invert())?);
    }
    Ok(Presentation::new(union, relators, Exactness::SurjectiveBound)?)
}

/// Surfaces of `s` other than the summed one, moved onto `target`'s
/// alphabet by name. Complements do not survive a sum.
fn carry(s: &ManifoldState, summed: &str, target: &Presentation) -> Result<Vec<SurfaceMark>, ManifoldError> {
    let map = Substitution::by_name(s.alphabet(), target.alphabet())?;
    s.surfaces
        .iter()
        .filter(|m| m.id != summed)
        .map(|m| {
            let mut m = m.clone();
            m.boundary_generators = m.boundary_generators.iter().map(|w| w.substitute(&map)).collect::<Result<_, _>>()?;
            m.complement = None;
            m.meridian_killed = None;
            m.exceptional_spheres_meet = false;
            Ok(m)
        })
        .collect()
}

/// Blow up `count` points, on `on_surface` if given.
pub fn blow_up(s: &ManifoldState, on_surface: Option<&str>, count: u32) -> Result<ManifoldState, ManifoldError> {
    if count == 0 {
        return Err(ManifoldError::ZeroCount);
    }
    let mut out = s.clone();
    let was_minimal = s.minimality.is_minimal();
    for surf in &mut out.surfaces {
        surf.exceptional_spheres_meet = false;
    }
    if let Some(id) = on_surface {
        let i = s.surface_index(id)?;
        let surf = &mut out.surfaces[i];
        surf.self_intersection -= i64::from(count);
        surf.meridian_killed = Some("meets an exceptional sphere transversally once".to_string());
        surf.exceptional_spheres_meet = was_minimal || s.surfaces[i].exceptional_spheres_meet;
    }
    out.euler += i64::from(count);
    out.signature -= i64::from(count);
    out.parity = Parity::Odd;
    out.minimality = Minimality::NotMinimal { reason: format!("{} ({})", MinimalityRule::R4, MinimalityRule::R4.citation()) };
    out.block = None;
    Ok(out)
}

/// Smooth the single transverse intersection of two surfaces.
pub fn resolve_intersection(s: &ManifoldState, a: &str, b: &str, new_id: &str) -> Result<ManifoldState, ManifoldError> {
    let pos = s
        .intersections
        .iter()
        .position(|(x, y)| (x == a && y == b) || (x == b && y == a))
        .ok_or_else(|| ManifoldError::NotIntersecting(a.to_string(), b.to_string()))?;
    let sa = s.surface(a)?;
    let sb = s.surface(b)?;
    let mut joined = SurfaceMark::new(new_id, sa.genus + sb.genus, sa.boundary_generators.clone());
    joined.boundary_generators.extend(sb.boundary_generators.iter().cloned());
    joined.self_intersection = sa.self_intersection + sb.self_intersection + 2;

    let mut out = s.clone();
    out.intersections.remove(pos);
    out.surfaces.retain(|m| m.id != a && m.id != b);
    out.surfaces.push(joined);
    Ok(out)
}

/// Homeomorphism type of a simply connected closed 4-manifold with odd form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomeoType {
    pub b_plus: u64,
    pub b_minus: u64,
    pub description: String,
    pub exotic_note: Option<String>,
    pub axioms: Vec<&'static str>,
}

const FREEDMAN: &str = "Freedman: simply connected closed 4-manifolds with odd form are classified by (b+, b-)";
const TAUBES: &str =
    "Taubes, Li-Liu: a minimal symplectic 4-manifold that is neither rational nor ruled has no smooth sphere of square -1";

pub fn connected_sum_name(b_plus: u64, b_minus: u64) -> String {
    let term = |n: u64, s: &str| match n {
        0 => None,
        1 => Some(s.to_string()),
        n => Some(format!("{n}{s}")),
    };
    let parts: Vec<String> = [term(b_plus, "CP²"), term(b_minus, "C̄P²")].into_iter().flatten().collect();
    if parts.is_empty() {
        "S⁴".to_string()
    } else {
        parts.join("#")
    }
}

pub fn classify(s: &ManifoldState, certificate: Option<&TrivialityCertificate>) -> Result<HomeoType, ManifoldError> {
    let cert = certificate.ok_or(ManifoldError::MissingCertificate)?;
    if cert.index != 1 {
        return Err(ManifoldError::NotTrivial(cert.index));
    }
    if s.parity != Parity::Odd {
        return Err(ManifoldError::ParityNotOdd(s.parity));
    }
    let bad = || ManifoldError::BettiArithmetic { euler: s.euler, signature: s.signature };
    let b2 = s.euler - 2;
    let (plus, minus) = (b2 + s.signature, b2 - s.signature);
    if plus.is_odd() || plus < 0 || minus < 0 {
        return Err(bad());
    }
    let (b_plus, b_minus) = ((plus / 2) as u64, (minus / 2) as u64);
    let description = connected_sum_name(b_plus, b_minus);
    let mut axioms = vec![FREEDMAN];
    let exotic_note = (s.minimality.is_minimal() && s.symplectic && b_minus > 0).then(|| {
        axioms.push(TAUBES);
        format!(
            "minimal symplectic, so no smoothly embedded -1 sphere; {description} contains {b_minus} exceptional sphere(s), \
             hence homeomorphic but not diffeomorphic to it"
        )
    });
    Ok(HomeoType { b_plus, b_minus, description, exotic_note, axioms })
}
