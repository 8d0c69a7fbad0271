//! Textual word syntax: juxtaposed factors with `^` exponents, `[u, v]`
//! commutators and parentheses, e.g. `[b^-1, y^-1]` or `b a b^-1`.
//! `1` is the identity.

use super::lexer::{tokenize, Cursor, Span, SyntaxError, Tok};
use crate::words::{Alphabet, Word};

pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word, SyntaxError> {
    parse_word_at(alphabet, text, Span { line: 1, column: 1 })
}

/// As [`parse_word`], reporting positions relative to `origin`.
pub fn parse_word_at(alphabet: &Alphabet, text: &str, origin: Span) -> Result<Word, SyntaxError> {
    let end = Span { line: origin.line, column: origin.column + text.chars().count() };
    let mut cur = Cursor::new(tokenize(text, origin)?, end);
    let w = product(alphabet, &mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("end of word"));
    }
    Ok(w)
}

fn product(al: &Alphabet, cur: &mut Cursor) -> Result<Word, SyntaxError> {
    let mut w = al.identity();
    while let Some(t) = cur.peek() {
        if matches!(t, Tok::Comma | Tok::RBracket | Tok::RParen) {
            break;
        }
        cur.eat(&Tok::Star);
        let f = factor(al, cur)?;
        w = w.multiply(&f).expect("same alphabet");
    }
    Ok(w)
}

fn factor(al: &Alphabet, cur: &mut Cursor) -> Result<Word, SyntaxError> {
    let span = cur.span();
    let base = match cur.next().map(|t| t.tok) {
        Some(Tok::Ident(name)) => al.letter(&name).map_err(|_| SyntaxError::new(span, format!("unknown generator `{name}`")))?,
        Some(Tok::Int(1)) => al.identity(),
        Some(Tok::LBracket) => {
            let u = product(al, cur)?;
            cur.expect(&Tok::Comma)?;
            let v = product(al, cur)?;
            cur.expect(&Tok::RBracket)?;
            u.commutator(&v).expect("same alphabet")
        }
        Some(Tok::LParen) => {
            let u = product(al, cur)?;
            cur.expect(&Tok::RParen)?;
            u
        }
        Some(t) => return Err(SyntaxError::new(span, format!("expected generator, found {t}"))),
        None => return Err(SyntaxError::new(span, "expected generator, found end of input")),
    };
    if cur.eat(&Tok::Caret) {
        Ok(base.pow(cur.int()?))
    } else {
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Alphabet {
        Alphabet::new(["x", "y", "a", "b"]).unwrap()
    }

    #[test]
    fn parses_commutators_and_powers() {
        let al = al();
        assert_eq!(parse_word(&al, "[b^-1, y^-1]").unwrap().to_string(), "b^-1 y^-1 b y");
        assert_eq!(parse_word(&al, "b a b^-1").unwrap().to_string(), "b a b^-1");
        assert_eq!(parse_word(&al, "(x y)^2").unwrap().to_string(), "x y x y");
        assert!(parse_word(&al, "1").unwrap().is_identity());
        assert!(parse_word(&al, "").unwrap().is_identity());
        assert!(parse_word(&al, "x x^-1").unwrap().is_identity());
    }

    #[test]
    fn display_round_trips() {
        let al = al();
        let w = parse_word(&al, "[[x, y], b] a^3").unwrap();
        assert_eq!(parse_word(&al, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn errors_carry_columns() {
        let al = al();
        let e = parse_word(&al, "x q").unwrap_err();
        assert_eq!(e.span.column, 3);
        assert!(parse_word(&al, "[x, y").is_err());
        assert!(parse_word(&al, "x^").is_err());
    }
}
