//! Calculus for cut-and-paste constructions of symplectic 4-manifolds.
//!
//! Finitely presented fundamental groups are carried through Luttinger
//! surgeries, symplectic sums, blowups and resolutions together with the
//! Euler characteristic, signature and minimality bookkeeping. Triviality
//! of a group is certified two independent ways: Todd–Coxeter coset
//! enumeration and a replayable Tietze derivation.

pub mod coset_enum;
pub mod dsl;
pub mod library;
pub mod manifold;
pub mod presentations;
pub mod report;
pub mod words;

pub use coset_enum::{certify_trivial, todd_coxeter, EnumResult, Outcome, TrivialityCertificate};
pub use manifold::{ManifoldState, Minimality, MinimalityRule, Parity};
pub use presentations::{tietze_simplify, Exactness, HomologyInvariants, Presentation};
pub use report::{Budget, Report, Verdict};
pub use words::{Alphabet, Generator, Letter, Substitution, Word, WordError};
