//! Free-group words over explicit generator alphabets.
//!
//! A [`Word`] is stored as a freely reduced list of syllables `g^e` with
//! adjacent syllables on distinct generators, so two words are equal as
//! free-group elements exactly when their syllable lists are equal.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator symbol `{0}`")]
    UnknownGenerator(String),
    #[error("words live over different alphabets ({left} vs {right})")]
    AlphabetMismatch { left: String, right: String },
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
}

static NEXT_ALPHABET_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct AlphabetInner {
    id: u64,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered, named set of generators.
///
/// Alphabets have identity: two alphabets built separately never compare
/// equal, even with identical names. Moving words between alphabets goes
/// through [`Substitution`].
#[derive(Debug, Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(WordError::InvalidAlphabet("empty generator name".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(WordError::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { id: NEXT_ALPHABET_ID.fetch_add(1, Ordering::Relaxed), names, index })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.0.names[g.0]
    }

    pub fn generator(&self, name: &str) -> Result<Generator, WordError> {
        self.0.index.get(name).map(|&i| Generator(i)).ok_or_else(|| WordError::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.len()).map(Generator)
    }

    /// Same alphabet object (not merely the same names).
    pub fn same_as(&self, other: &Alphabet) -> bool {
        self.0.id == other.0.id
    }

    fn describe(&self) -> String {
        format!("#{}{{{}}}", self.0.id, self.0.names.join(","))
    }

    pub fn identity(&self) -> Word {
        Word { alphabet: self.clone(), syllables: Vec::new() }
    }

    pub fn letter(&self, name: &str) -> Result<Word, WordError> {
        let g = self.generator(name)?;
        Ok(Word::power(self, g, 1))
    }

    fn check(&self, other: &Alphabet) -> Result<(), WordError> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch { left: self.describe(), right: other.describe() })
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

/// Index of a generator within its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(pub usize);

/// One letter `g` or `g^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// Column index `2g` / `2g+1` used by coset tables.
    pub fn column(self) -> usize {
        2 * self.generator.0 + usize::from(self.inverse)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    syllables: Vec<Syllable>,
}

impl Word {
    /// Freely reduce a raw list of `(symbol, exponent)` pairs.
    pub fn reduce<S: AsRef<str>>(alphabet: &Alphabet, raw: &[(S, i64)]) -> Result<Word, WordError> {
        let mut out = alphabet.identity();
        for (name, e) in raw {
            let g = alphabet.generator(name.as_ref())?;
            out.push_syllable(g, *e);
        }
        Ok(out)
    }

    pub fn power(alphabet: &Alphabet, g: Generator, exponent: i64) -> Word {
        let mut w = alphabet.identity();
        w.push_syllable(g, exponent);
        w
    }

    pub fn from_letters(alphabet: &Alphabet, letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut w = alphabet.identity();
        for l in letters {
            w.push_syllable(l.generator, if l.inverse { -1 } else { 1 });
        }
        w
    }

    fn push_syllable(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.generator == g => {
                last.exponent += e;
                if last.exponent == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { generator: g, exponent: e }),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.exponent.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.len());
        for s in &self.syllables {
            let l = Letter { generator: s.generator, inverse: s.exponent < 0 };
            for _ in 0..s.exponent.unsigned_abs() {
                out.push(l);
            }
        }
        out
    }

    pub fn multiply(&self, other: &Word) -> Result<Word, WordError> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = self.clone();
        for s in &other.syllables {
            out.push_syllable(s.generator, s.exponent);
        }
        Ok(out)
    }

    pub fn invert(&self) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            syllables: self.syllables.iter().rev().map(|s| Syllable { generator: s.generator, exponent: -s.exponent }).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = self.alphabet.identity();
        for _ in 0..n.unsigned_abs() {
            for s in &base.syllables {
                out.push_syllable(s.generator, s.exponent);
            }
        }
        out
    }

    /// `[u, v] = u v u^-1 v^-1`.
    pub fn commutator(&self, other: &Word) -> Result<Word, WordError> {
        self.multiply(other)?.multiply(&self.invert())?.multiply(&other.invert())
    }

    /// `c w c^-1`.
    pub fn conjugate_by(&self, c: &Word) -> Result<Word, WordError> {
        c.multiply(self)?.multiply(&c.invert())
    }

    /// Homomorphic image under `map`.
    pub fn substitute(&self, map: &Substitution) -> Result<Word, WordError> {
        self.alphabet.check(&map.source)?;
        let mut out = map.target.identity();
        for s in &self.syllables {
            let image = map.images[s.generator.0]
                .as_ref()
                .ok_or_else(|| WordError::MissingImage(self.alphabet.name(s.generator).to_string()))?;
            for t in &image.pow(s.exponent).syllables {
                out.push_syllable(t.generator, t.exponent);
            }
        }
        Ok(out)
    }

    /// Sum of exponents of `g`.
    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.syllables.iter().filter(|s| s.generator == g).map(|s| s.exponent).sum()
    }

    pub fn occurrences(&self, g: Generator) -> usize {
        self.syllables.iter().filter(|s| s.generator == g).map(|s| s.exponent.unsigned_abs() as usize).sum()
    }

    /// Cyclic reduction `w = c r c^-1` with `r` cyclically reduced.
    /// Returns `(r, c)`.
    pub fn cyclic_reduction(&self) -> (Word, Word) {
        let letters = self.letters();
        let mut lo = 0;
        let mut hi = letters.len();
        while hi >= lo + 2 && letters[lo] == letters[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        (
            Word::from_letters(&self.alphabet, letters[lo..hi].iter().copied()),
            Word::from_letters(&self.alphabet, letters[..lo].iter().copied()),
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.cyclic_reduction().1.is_identity()
    }

    /// Rotation `letters[k..] letters[..k]` of a cyclically reduced word.
    /// The rotation equals `p^-1 w p` for `p = letters[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        let letters = self.letters();
        if letters.is_empty() {
            return self.clone();
        }
        let k = k % letters.len();
        Word::from_letters(&self.alphabet, letters[k..].iter().chain(letters[..k].iter()).copied())
    }

    /// If `other = c self^s c^-1` for a rotation conjugator `c` and sign
    /// `s = ±1`, return `(c, s)`. Both words are cyclically reduced first.
    pub fn conjugacy_witness(&self, other: &Word) -> Option<(Word, i64)> {
        if !self.alphabet.same_as(&other.alphabet) {
            return None;
        }
        let (a, ca) = self.cyclic_reduction();
        let (b, cb) = other.cyclic_reduction();
        if a.len() != b.len() {
            return None;
        }
        for (sign, base) in [(1, a.clone()), (-1, a.invert())] {
            let letters = base.letters();
            let n = letters.len().max(1);
            for k in 0..n {
                if base.rotate(k) == b {
                    // other = cb b cb^-1, b = p^-1 base p, base = (ca^-1 self ca)^sign
                    let p = Word::from_letters(&self.alphabet, letters[..k.min(letters.len())].iter().copied());
                    let c = cb.multiply(&p.invert()).and_then(|x| x.multiply(&ca.invert())).expect("same alphabet");
                    return Some((c, sign));
                }
            }
        }
        None
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = self.alphabet.name(s.generator);
            if s.exponent == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

/// A generator-to-word assignment from one alphabet into another.
#[derive(Debug, Clone)]
pub struct Substitution {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Option<Word>>,
}

impl Substitution {
    pub fn new(source: &Alphabet, target: &Alphabet) -> Self {
        Substitution { source: source.clone(), target: target.clone(), images: vec![None; source.len()] }
    }

    /// Every generator sent to its namesake in `target` (which must
    /// contain all source names).
    pub fn by_name(source: &Alphabet, target: &Alphabet) -> Result<Self, WordError> {
        let mut s = Substitution::new(source, target);
        for name in source.names() {
            s = s.set(name, target.letter(name)?)?;
        }
        Ok(s)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Substitution::by_name(alphabet, alphabet).expect("alphabet maps onto itself")
    }

    pub fn set(mut self, name: &str, image: Word) -> Result<Self, WordError> {
        self.target.check(&image.alphabet)?;
        let g = self.source.generator(name)?;
        self.images[g.0] = Some(image);
        Ok(self)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, g: Generator) -> Option<&Word> {
        self.images[g.0].as_ref()
    }
}
