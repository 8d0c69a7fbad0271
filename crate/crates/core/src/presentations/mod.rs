//! Finitely presented groups.

mod commute;
mod smith;
mod tietze;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Alphabet, Generator, Substitution, Word, WordError};

pub use commute::{prune_redundant, CommutationRewriter, PruneReason, Pruned};
pub use smith::smith_normal_form;
pub use tietze::{tietze_simplify, DerivationTrace, ReplayError, TietzeOutcome, TietzeStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("relator `{0}` is not over the presentation's alphabet")]
    ForeignRelator(String),
}

/// Whether the presented group is the group of interest or only a group
/// surjecting onto it. Triviality of a `SurjectiveBound` presentation still
/// certifies triviality of the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    SurjectiveBound,
}

impl Exactness {
    /// Exact only when both inputs are exact.
    pub fn meet(self, other: Exactness) -> Exactness {
        if self == Exactness::Exact && other == Exactness::Exact {
            Exactness::Exact
        } else {
            Exactness::SurjectiveBound
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::SurjectiveBound => "surjective-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    exactness: Exactness,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>, exactness: Exactness) -> Result<Self, PresentationError> {
        for r in &relators {
            if !r.alphabet().same_as(&alphabet) {
                return Err(PresentationError::ForeignRelator(r.to_string()));
            }
        }
        Ok(Presentation { alphabet, relators, exactness })
    }

    /// `⟨ ∅ | ∅ ⟩`.
    pub fn trivial() -> Self {
        let alphabet = Alphabet::new(Vec::<String>::new()).expect("empty alphabet");
        Presentation { alphabet, relators: Vec::new(), exactness: Exactness::Exact }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn with_exactness(mut self, exactness: Exactness) -> Self {
        self.exactness = exactness;
        self
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    /// No generators and no relators.
    pub fn is_empty_presentation(&self) -> bool {
        self.alphabet.is_empty() && self.relators.is_empty()
    }

    /// Quotient by the normal closure of `new_relators`.
    pub fn quotient_by(&self, new_relators: &[Word]) -> Result<Presentation, PresentationError> {
        let mut out = self.clone();
        for r in new_relators {
            if !r.alphabet().same_as(&self.alphabet) {
                return Err(PresentationError::ForeignRelator(r.to_string()));
            }
            out.relators.push(r.clone());
        }
        Ok(out)
    }

    /// Image of every relator under `map`; the result lives over the map's
    /// target alphabet.
    pub fn substitute(&self, map: &Substitution) -> Result<Presentation, PresentationError> {
        let relators = self.relators.iter().map(|r| r.substitute(map)).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(map.target().clone(), relators, self.exactness)
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianize(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| self.alphabet.generators().map(|g| r.exponent_sum(g)).collect()).collect()
    }

    pub fn homology_invariants(&self) -> HomologyInvariants {
        let diagonal = smith_normal_form(&self.abelianize());
        let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
        HomologyInvariants {
            free_rank: self.generator_count() - nonzero,
            torsion: diagonal.into_iter().filter(|d| *d > BigInt::one()).collect(),
        }
    }

    /// Same generator names, relators and exactness, ignoring alphabet
    /// identity.
    pub fn same_text(&self, other: &Presentation) -> bool {
        self.alphabet.names() == other.alphabet.names()
            && self.exactness == other.exactness
            && self.relators.len() == other.relators.len()
            && self.relators.iter().zip(&other.relators).all(|(a, b)| a.to_string() == b.to_string())
    }

    pub fn generator_named(&self, name: &str) -> Result<Generator, PresentationError> {
        Ok(self.alphabet.generator(name)?)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.alphabet.names().join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(ToString::to_string).collect();
        write!(f, "{} >", rels.join(", "))
    }
}

/// First homology `Z^rank ⊕ ⊕ Z/t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyInvariants {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl HomologyInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order when finite.
    pub fn finite_order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().fold(BigInt::one(), |acc, t| acc * t))
    }
}

impl fmt::Display for HomologyInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}
