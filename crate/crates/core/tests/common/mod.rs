//! Reference relators transcribed by hand, and helpers shared by the
//! integration tests.
#![allow(dead_code)]

pub mod props;

use std::collections::HashMap;

use sgc_core::dsl::parse_word;
use sgc_core::library::match_relators;
use sgc_core::{Alphabet, Presentation, Word};

/// The six relators for V. A relation `g = w` is written `w g^-1`.
pub const V_REFERENCE: [&str; 6] =
    ["[s1, t1]", "[s2, t2]", "[s1, s2]", "[t1, s2]", "[t2^-1, t1^-1] s1^-1", "[t2^-1, s1^-1] s2^-1"];

/// Relators of the first block complement.
pub const P1_REFERENCE: [&str; 6] =
    ["[s1^-1, x1^-1] y1^-1", "[s1^-1, y1] t1^-1", "[y1^-1, t1^-1]", "[x1, t1^-1]", "[x1, s1 t1^-1 s1^-1]", "[x1, y1]"];

/// Relators of the second block complement.
pub const P2_REFERENCE: [&str; 6] =
    ["[s2^-1, x2^-1] t2^-1", "[y2, s2] x2^-1", "[y2^-1, t2^-1]", "[x2, t2^-1]", "[x2, s2 t2^-1 s2^-1]", "[x2, y2]"];

pub const GLUING_REFERENCE: [&str; 2] = ["x1 x2^-1", "y1 y2^-1"];

pub fn words(al: &Alphabet, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| parse_word(al, t).unwrap_or_else(|e| panic!("{t}: {e}"))).collect()
}

/// Relations 1 to 20 for X, over its alphabet.
pub fn numbered_reference(al: &Alphabet) -> Vec<Word> {
    let all: Vec<&str> = P1_REFERENCE.iter().chain(&P2_REFERENCE).chain(&GLUING_REFERENCE).chain(&V_REFERENCE).copied().collect();
    words(al, &all)
}

/// Relation number (1-based) to the matching relator of `x`.
pub fn numbered_relators(x: &Presentation) -> HashMap<usize, Word> {
    let reference = numbered_reference(x.alphabet());
    let idx = match_relators(x, &reference).unwrap_or_else(|i| panic!("relation {} has no generated match", i + 1));
    idx.iter().enumerate().map(|(i, &j)| (i + 1, x.relators()[j].clone())).collect()
}

pub fn texts(p: &Presentation) -> Vec<String> {
    p.relators().iter().map(ToString::to_string).collect()
}

/// Compare `actual` with a checked-in file under `tests/golden`.
/// `SGC_BLESS=1` rewrites the file first.
pub fn golden(name: &str, actual: &str) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("SGC_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

pub fn lines(p: &Presentation) -> String {
    let mut out = format!("generators: {}\n", p.alphabet().names().join(" "));
    for r in p.relators() {
        out.push_str(&format!("{r}\n"));
    }
    out
}

/// The order generators of X are killed in, with the relations each step cites.
pub const KILL_ORDER: [(&str, &[usize]); 8] = [
    ("y1", &[1, 19, 4, 10, 13]),
    ("y2", &[14]),
    ("t1", &[2]),
    ("s1", &[19]),
    ("s2", &[20]),
    ("t2", &[7]),
    ("x1", &[8, 13]),
    ("x2", &[8]),
];

pub fn kill_steps() -> Vec<sgc_core::library::KillStep> {
    KILL_ORDER.iter().map(|(g, rels)| sgc_core::library::KillStep { generator: g.to_string(), relators: rels.to_vec() }).collect()
}
