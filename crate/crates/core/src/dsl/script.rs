//! Script syntax.
//!
//! ```text
//! script := stmt* ; stmt := 'let' id '=' call | 'check' check
//! call   := name '(' (key '=' value (',' key '=' value)*)? ')'
//! value  := id | int | "word" | '[' value (',' value)* ']'
//! check  := 'trivial' '(' id ')' | 'invariants' '(' id ',' int ',' int ')' | 'classify' '(' id ')'
//! ```

use std::collections::HashSet;
use std::fmt;

use super::lexer::{tokenize, Cursor, Span, SyntaxError, Tok};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Ident(String),
    Int(i64),
    Word(String),
    List(Vec<Value>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ident(s) => f.write_str(s),
            Value::Int(n) => write!(f, "{n}"),
            Value::Word(w) => write!(f, "\"{w}\""),
            Value::List(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Call {
    pub name: String,
    pub args: Vec<(String, Value)>,
}

impl Call {
    pub fn arg(&self, key: &str) -> Option<&Value> {
        self.args.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.name, args.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Trivial(String),
    Invariants { target: String, euler: i64, signature: i64 },
    Classify(String),
}

impl Check {
    pub fn target(&self) -> &str {
        match self {
            Check::Trivial(t) | Check::Classify(t) => t,
            Check::Invariants { target, .. } => target,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Let { name: String, call: Call },
    Check(Check),
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Let { name, call } => write!(f, "let {name} = {call}"),
            Stmt::Check(Check::Trivial(t)) => write!(f, "check trivial({t})"),
            Stmt::Check(Check::Classify(t)) => write!(f, "check classify({t})"),
            Stmt::Check(Check::Invariants { target, euler, signature }) => {
                write!(f, "check invariants({target}, {euler}, {signature})")
            }
        }
    }
}

/// A parsed script. Equality ignores source positions.
#[derive(Debug, Clone, Default)]
pub struct Script {
    pub statements: Vec<Stmt>,
    pub spans: Vec<Span>,
}

impl PartialEq for Script {
    fn eq(&self, other: &Script) -> bool {
        self.statements == other.statements
    }
}

impl Eq for Script {}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Param {
    pub key: &'static str,
    pub required: bool,
}

const fn req(key: &'static str) -> Param {
    Param { key, required: true }
}

const fn opt(key: &'static str) -> Param {
    Param { key, required: false }
}

/// Operation names and their keyword parameters.
pub const OPERATIONS: &[(&str, &[Param])] = &[
    ("build_V", &[]),
    ("V", &[]),
    ("build_W", &[]),
    ("W", &[]),
    ("build_P1", &[]),
    ("P1", &[]),
    ("build_P2", &[]),
    ("P2", &[]),
    ("build_P", &[]),
    ("P", &[]),
    ("build_X", &[]),
    ("X", &[]),
    ("four_torus", &[opt("relabel"), opt("surfaces")]),
    ("luttinger", &[req("state"), req("torus"), req("p"), req("q"), req("k")]),
    ("symplectic_sum", &[req("a"), req("surf_a"), req("b"), req("surf_b"), req("pairing"), opt("relative")]),
    ("blow_up", &[req("state"), opt("surface"), opt("count")]),
    ("resolve_intersection", &[req("state"), req("a"), req("b"), req("into")]),
    ("tidy", &[req("state")]),
    ("quotient", &[req("state"), req("relators")]),
    ("presentation", &[req("generators"), req("relators"), opt("exactness")]),
];

pub fn operation(name: &str) -> Option<&'static [Param]> {
    OPERATIONS.iter().find(|(n, _)| *n == name).map(|(_, p)| *p)
}

pub fn parse_script(text: &str) -> Result<Script, SyntaxError> {
    let end = Span { line: text.lines().count().max(1), column: text.lines().last().map_or(1, |l| l.chars().count() + 1) };
    let mut cur = Cursor::new(tokenize(text, Span { line: 1, column: 1 })?, end);
    let mut script = Script::default();
    let mut bound: HashSet<String> = HashSet::new();

    while !cur.at_end() {
        let start = cur.span();
        let (kw, _) = cur.ident("`let` or `check`")?;
        let stmt = match kw.as_str() {
            "let" => {
                let (name, name_span) = cur.ident("binding name")?;
                cur.expect(&Tok::Equals)?;
                let call = parse_call(&mut cur, &bound)?;
                if !bound.insert(name.clone()) {
                    return Err(SyntaxError::new(name_span, format!("`{name}` is already bound")));
                }
                Stmt::Let { name, call }
            }
            "check" => Stmt::Check(parse_check(&mut cur, &bound)?),
            other => return Err(SyntaxError::new(start, format!("expected `let` or `check`, found `{other}`"))),
        };
        script.statements.push(stmt);
        script.spans.push(start);
    }
    Ok(script)
}

fn use_binding(name: &str, span: Span, bound: &HashSet<String>) -> Result<(), SyntaxError> {
    if bound.contains(name) {
        Ok(())
    } else {
        Err(SyntaxError::new(span, format!("`{name}` is not bound")))
    }
}

fn parse_call(cur: &mut Cursor, bound: &HashSet<String>) -> Result<Call, SyntaxError> {
    let (name, name_span) = cur.ident("operation name")?;
    let params = operation(&name).ok_or_else(|| SyntaxError::new(name_span, format!("unknown operation `{name}`")))?;
    cur.expect(&Tok::LParen)?;
    let mut args: Vec<(String, Value)> = Vec::new();
    if !cur.eat(&Tok::RParen) {
        loop {
            let (key, key_span) = cur.ident("argument name")?;
            if !params.iter().any(|p| p.key == key) {
                return Err(SyntaxError::new(key_span, format!("`{name}` takes no argument `{key}`")));
            }
            if args.iter().any(|(k, _)| *k == key) {
                return Err(SyntaxError::new(key_span, format!("argument `{key}` given twice")));
            }
            cur.expect(&Tok::Equals)?;
            let value = parse_value(cur, bound)?;
            args.push((key, value));
            if cur.eat(&Tok::RParen) {
                break;
            }
            cur.expect(&Tok::Comma)?;
        }
    }
    if let Some(missing) = params.iter().find(|p| p.required && !args.iter().any(|(k, _)| k == p.key)) {
        return Err(SyntaxError::new(name_span, format!("`{name}` needs argument `{}`", missing.key)));
    }
    Ok(Call { name, args })
}

fn parse_value(cur: &mut Cursor, bound: &HashSet<String>) -> Result<Value, SyntaxError> {
    let span = cur.span();
    match cur.next().map(|t| t.tok) {
        Some(Tok::Ident(s)) => {
            use_binding(&s, span, bound)?;
            Ok(Value::Ident(s))
        }
        Some(Tok::Int(n)) => Ok(Value::Int(n)),
        Some(Tok::Str(s)) => Ok(Value::Word(s)),
        Some(Tok::LBracket) => {
            let mut items = Vec::new();
            if cur.eat(&Tok::RBracket) {
                return Ok(Value::List(items));
            }
            loop {
                items.push(parse_value(cur, bound)?);
                if cur.eat(&Tok::RBracket) {
                    return Ok(Value::List(items));
                }
                cur.expect(&Tok::Comma)?;
            }
        }
        Some(t) => Err(SyntaxError::new(span, format!("expected a value, found {t}"))),
        None => Err(SyntaxError::new(span, "expected a value, found end of input")),
    }
}

fn parse_check(cur: &mut Cursor, bound: &HashSet<String>) -> Result<Check, SyntaxError> {
    let (kind, kind_span) = cur.ident("check name")?;
    cur.expect(&Tok::LParen)?;
    let target_span = cur.span();
    let (target, _) = cur.ident("binding name")?;
    use_binding(&target, target_span, bound)?;
    let check = match kind.as_str() {
        "trivial" => Check::Trivial(target),
        "classify" => Check::Classify(target),
        "invariants" => {
            cur.expect(&Tok::Comma)?;
            let euler = cur.int()?;
            cur.expect(&Tok::Comma)?;
            let signature = cur.int()?;
            Check::Invariants { target, euler, signature }
        }
        other => return Err(SyntaxError::new(kind_span, format!("unknown check `{other}`"))),
    };
    cur.expect(&Tok::RParen)?;
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let s = parse_script("let v = build_V()").unwrap();
        assert_eq!(s.statements[0], Stmt::Let { name: "v".into(), call: Call { name: "build_V".into(), args: vec![] } });

        let text = "let p = P()\nlet w = W()\n\
            let x = symplectic_sum(a=p, surf_a=\"F\", b=w, surf_b=\"G\", pairing=[\"s1:s1\",\"t1:t1\",\"s2:s2\",\"t2:t2\"])\n\
            check invariants(x, 6, -2)";
        let s = parse_script(text).unwrap();
        let Stmt::Let { call, .. } = &s.statements[2] else { panic!() };
        assert_eq!(call.args.len(), 5);
        assert_eq!(s.statements[3], Stmt::Check(Check::Invariants { target: "x".into(), euler: 6, signature: -2 }));
        assert!(parse_script("").unwrap().statements.is_empty());
    }

    #[test]
    fn syntax_error_positions() {
        let e = parse_script("let = foo(").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (1, 5));
        let e = parse_script("let v = V()\nlet w = nope()").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (2, 9));
        assert!(e.message.contains("unknown operation"));
        let e = parse_script("let v = luttinger(state=v, torus=\"T1\", p=1, q=0)").unwrap_err();
        assert!(e.message.contains("not bound"), "{e}");
        let e = parse_script("let v = V()\nlet w = luttinger(state=v, torus=\"T1\", p=1, q=0)").unwrap_err();
        assert!(e.message.contains("needs argument `k`"));
        let e = parse_script("let v = V()\nlet v = W()").unwrap_err();
        assert!(e.message.contains("already bound"));
        assert!(parse_script("check trivial(q)").is_err());
        assert!(parse_script("let v = V(bogus=1)").is_err());
    }

    #[test]
    fn print_then_parse_is_identity() {
        let text = "# comment\nlet v = V()\nlet b = blow_up(state=v, count=2)\nlet g = presentation(generators=[\"x\"], relators=[\"x^3\", \"[x, x]\"])\ncheck trivial(g)\ncheck classify(b)\n";
        let s = parse_script(text).unwrap();
        let again = parse_script(&s.to_string()).unwrap();
        assert_eq!(s, again);
        assert_eq!(again.to_string(), s.to_string());
    }
}
