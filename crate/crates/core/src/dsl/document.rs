//! Presentation documents:
//!
//! ```text
//! generators: x y
//! exactness: exact
//! relators:
//!   x^2
//!   [x, y]
//! ```
//!
//! `exactness` is optional and defaults to `exact`.

use super::lexer::{Span, SyntaxError};
use super::word_syntax::parse_word_at;
use crate::presentations::{Exactness, Presentation};
use crate::words::Alphabet;

pub fn parse_presentation(text: &str) -> Result<Presentation, SyntaxError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut exactness = Exactness::Exact;
    let mut relators = Vec::new();
    let mut in_relators = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let at = |col: usize| Span { line: line_no, column: col + 1 };

        if in_relators && indent > 0 {
            let al = alphabet.as_ref().expect("relators follow generators");
            relators.push(parse_word_at(al, line.trim_start(), at(indent))?);
            continue;
        }
        in_relators = false;
        let Some((key, rest)) = line.split_once(':') else {
            return Err(SyntaxError::new(at(indent), "expected `key: value`"));
        };
        let rest_col = key.len() + 1;
        match key.trim() {
            "generators" => {
                let names: Vec<&str> = rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
                alphabet = Some(Alphabet::new(names).map_err(|e| SyntaxError::new(at(rest_col), e.to_string()))?);
            }
            "exactness" => {
                exactness = match rest.trim() {
                    "exact" => Exactness::Exact,
                    "surjective-bound" => Exactness::SurjectiveBound,
                    other => return Err(SyntaxError::new(at(rest_col), format!("unknown exactness `{other}`"))),
                };
            }
            "relators" => {
                if alphabet.is_none() {
                    return Err(SyntaxError::new(at(indent), "`relators` before `generators`"));
                }
                if !rest.trim().is_empty() {
                    return Err(SyntaxError::new(at(rest_col), "relators go on the following indented lines"));
                }
                in_relators = true;
            }
            other => return Err(SyntaxError::new(at(indent), format!("unknown key `{other}`"))),
        }
    }
    let alphabet = alphabet.ok_or_else(|| SyntaxError::new(Span { line: 1, column: 1 }, "missing `generators`"))?;
    Ok(Presentation::new(alphabet, relators, exactness).expect("relators parsed over the alphabet"))
}

pub fn presentation_document(p: &Presentation) -> String {
    let mut out = format!("generators: {}\nexactness: {}\nrelators:\n", p.alphabet().names().join(" "), p.exactness());
    for r in p.relators() {
        out.push_str(&format!("  {r}\n"));
    }
    out
}
