use std::collections::HashMap;

use serde_json::json;

use super::script::{Call, Check, Script, Stmt, Value};
use super::word_syntax::parse_word;
use crate::coset_enum::certify_trivial;
use crate::library::{build_named, complement_data, four_torus, tidy, BlockSurfaces, BuildOptions, Relabel, Variant};
use crate::manifold::{blow_up, classify, luttinger, resolve_intersection, symplectic_sum, ManifoldState, SumSpec};
use crate::presentations::{Exactness, Presentation};
use crate::report::{check_trivial, Budget, Report, Verdict};
use crate::words::Alphabet;

enum Binding {
    State(Box<ManifoldState>),
    Group(Presentation),
}

impl Binding {
    fn group(&self) -> &Presentation {
        match self {
            Binding::State(s) => &s.pi1,
            Binding::Group(p) => p,
        }
    }

    fn summary(&self) -> serde_json::Value {
        match self {
            Binding::State(s) => s.summary(),
            Binding::Group(p) => json!({
                "presentation": {
                    "generators": p.alphabet().names(),
                    "relators": p.relators().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "exactness": p.exactness().to_string(),
                },
                "h1": p.homology_invariants().to_string(),
            }),
        }
    }
}

struct Env {
    bindings: HashMap<String, Binding>,
}

impl Env {
    fn get(&self, name: &str) -> Result<&Binding, String> {
        self.bindings.get(name).ok_or_else(|| format!("`{name}` is not bound"))
    }

    fn state(&self, call: &Call, key: &str) -> Result<&ManifoldState, String> {
        match call.arg(key) {
            Some(Value::Ident(name)) => match self.get(name)? {
                Binding::State(s) => Ok(s),
                Binding::Group(_) => Err(format!("`{name}` is a bare presentation, not a manifold state")),
            },
            Some(v) => Err(format!("argument `{key}` must name a state, got {v}")),
            None => Err(format!("missing argument `{key}`")),
        }
    }
}

fn text<'a>(call: &'a Call, key: &str) -> Result<&'a str, String> {
    match call.arg(key) {
        Some(Value::Word(s)) => Ok(s),
        Some(Value::Ident(s)) => Ok(s),
        Some(v) => Err(format!("argument `{key}` must be a string, got {v}")),
        None => Err(format!("missing argument `{key}`")),
    }
}

fn opt_text<'a>(call: &'a Call, key: &str) -> Result<Option<&'a str>, String> {
    call.arg(key).map(|_| text(call, key)).transpose()
}

fn int(call: &Call, key: &str) -> Result<i64, String> {
    match call.arg(key) {
        Some(Value::Int(n)) => Ok(*n),
        Some(v) => Err(format!("argument `{key}` must be an integer, got {v}")),
        None => Err(format!("missing argument `{key}`")),
    }
}

fn strings<'a>(call: &'a Call, key: &str) -> Result<Vec<&'a str>, String> {
    match call.arg(key) {
        Some(Value::List(items)) => items
            .iter()
            .map(|v| match v {
                Value::Word(s) => Ok(s.as_str()),
                v => Err(format!("argument `{key}` must list strings, got {v}")),
            })
            .collect(),
        Some(v) => Err(format!("argument `{key}` must be a list, got {v}")),
        None => Ok(Vec::new()),
    }
}

fn pair(s: &str) -> Result<(String, String), String> {
    s.split_once(':')
        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        .ok_or_else(|| format!("`{s}` is not of the form `left:right`"))
}

fn run_call(env: &Env, call: &Call) -> Result<Binding, String> {
    if let Some(built) = build_named(&call.name) {
        return built.map(|s| Binding::State(Box::new(s))).map_err(|e| e.to_string());
    }
    let state = |s: ManifoldState| Ok(Binding::State(Box::new(s)));
    match call.name.as_str() {
        "four_torus" => {
            let old = complement_data(Variant::FourTorus).alphabet;
            let pairs: Vec<(String, String)> = if call.arg("relabel").is_some() {
                strings(call, "relabel")?.into_iter().map(pair).collect::<Result<_, _>>()?
            } else {
                old.names().iter().map(|n| (n.clone(), n.clone())).collect()
            };
            let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let relabel = Relabel::new(&old, &refs).map_err(|e| e.to_string())?;
            // surface generators: the new names over x, y and over a, b, in listed order
            let over = |olds: [&str; 2]| -> Vec<&str> {
                pairs.iter().filter(|(_, img)| olds.contains(&img.trim_end_matches("^-1"))).map(|(n, _)| n.as_str()).collect()
            };
            let (hs, ks) = (over(["x", "y"]), over(["a", "b"]));
            if hs.len() != 2 || ks.len() != 2 {
                return Err("relabel must send each generator to a single letter".into());
            }
            let names = match strings(call, "surfaces")?.as_slice() {
                [] => ["H", "K"],
                [h, k] => [*h, *k],
                _ => return Err("`surfaces` lists two surface names".into()),
            };
            let surfaces = BlockSurfaces { h: (names[0], [hs[0], hs[1]]), k: (names[1], [ks[0], ks[1]]), complements: true };
            state(four_torus(&relabel, &surfaces, BuildOptions::default()).map_err(|e| e.to_string())?)
        }
        "luttinger" => {
            let s = env.state(call, "state")?;
            let out = luttinger(s, text(call, "torus")?, int(call, "p")?, int(call, "q")?, int(call, "k")?);
            state(out.map_err(|e| e.to_string())?)
        }
        "symplectic_sum" => {
            let relative = match strings(call, "relative")?.as_slice() {
                [] => None,
                [a, b, id] => Some((a.to_string(), b.to_string(), id.to_string())),
                _ => return Err("`relative` lists three surface names".into()),
            };
            let spec = SumSpec {
                surf_a: text(call, "surf_a")?.to_string(),
                surf_b: text(call, "surf_b")?.to_string(),
                pairing: strings(call, "pairing")?.into_iter().map(pair).collect::<Result<_, _>>()?,
                relative,
            };
            state(symplectic_sum(env.state(call, "a")?, env.state(call, "b")?, &spec).map_err(|e| e.to_string())?)
        }
        "blow_up" => {
            let count = match call.arg("count") {
                Some(_) => u32::try_from(int(call, "count")?).map_err(|_| "count must be positive".to_string())?,
                None => 1,
            };
            let s = env.state(call, "state")?;
            state(blow_up(s, opt_text(call, "surface")?, count).map_err(|e| e.to_string())?)
        }
        "resolve_intersection" => {
            let s = env.state(call, "state")?;
            let out = resolve_intersection(s, text(call, "a")?, text(call, "b")?, text(call, "into")?);
            state(out.map_err(|e| e.to_string())?)
        }
        "tidy" => state(tidy(env.state(call, "state")?, BuildOptions::default()).map_err(|e| e.to_string())?),
        "quotient" => {
            let s = env.state(call, "state")?;
            let rels = strings(call, "relators")?
                .into_iter()
                .map(|r| parse_word(s.alphabet(), r).map_err(|e| format!("relator `{r}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let mut out = s.clone();
            out.pi1 = s.pi1.quotient_by(&rels).map_err(|e| e.to_string())?;
            state(out)
        }
        "presentation" => {
            let al = Alphabet::new(strings(call, "generators")?).map_err(|e| e.to_string())?;
            let rels = strings(call, "relators")?
                .into_iter()
                .map(|r| parse_word(&al, r).map_err(|e| format!("relator `{r}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            let exactness = match opt_text(call, "exactness")? {
                None | Some("exact") => Exactness::Exact,
                Some("surjective-bound") => Exactness::SurjectiveBound,
                Some(other) => return Err(format!("unknown exactness `{other}`")),
            };
            Ok(Binding::Group(Presentation::new(al, rels, exactness).map_err(|e| e.to_string())?))
        }
        other => Err(format!("unknown operation `{other}`")),
    }
}

fn run_check(env: &Env, check: &Check, budget: Budget, report: &mut Report) -> Result<(Verdict, serde_json::Value), String> {
    let target = env.get(check.target())?;
    match check {
        Check::Trivial(_) => Ok(check_trivial(target.group(), budget)),
        Check::Invariants { euler, signature, .. } => {
            let Binding::State(s) = target else {
                return Err(format!("`{}` has no invariants", check.target()));
            };
            let ok = (s.euler, s.signature) == (*euler, *signature);
            let detail = json!({
                "expected": { "euler": euler, "signature": signature },
                "actual": { "euler": s.euler, "signature": s.signature },
            });
            Ok((if ok { Verdict::Pass } else { Verdict::Fail }, detail))
        }
        Check::Classify(_) => {
            let Binding::State(s) = target else {
                return Err(format!("`{}` is not a manifold state", check.target()));
            };
            let cert = certify_trivial(&s.pi1, budget.max_cosets).map_err(|e| e.to_string())?;
            let exhausted = cert.as_ref().err().is_some_and(|r| r.index().is_none());
            match classify(s, cert.as_ref().ok()) {
                Ok(h) => {
                    for a in &h.axioms {
                        report.cite(a);
                    }
                    for r in s.minimality.rules() {
                        report.cite(r.citation());
                    }
                    Ok((Verdict::Pass, serde_json::to_value(&h).expect("serializes")))
                }
                Err(e) if exhausted => Ok((Verdict::Inconclusive, json!({ "error": e.to_string() }))),
                Err(e) => Ok((Verdict::Fail, json!({ "error": e.to_string() }))),
            }
        }
    }
}

/// Run a script. Statements execute in order; the first failing check or
/// runtime error stops execution.
pub fn execute(script: &Script, budget: Budget) -> Report {
    let mut env = Env { bindings: HashMap::new() };
    let mut report = Report::new();
    for (i, stmt) in script.statements.iter().enumerate() {
        let line = script.spans.get(i).map(|s| s.line);
        let outcome = match stmt {
            Stmt::Let { name, call } => run_call(&env, call).map(|b| {
                let detail = b.summary();
                env.bindings.insert(name.clone(), b);
                (Verdict::Pass, detail)
            }),
            Stmt::Check(c) => run_check(&env, c, budget, &mut report),
        };
        let (verdict, detail) = outcome.unwrap_or_else(|e| (Verdict::Fail, json!({ "error": e, "statement": i, "line": line })));
        report.push(stmt.to_string(), verdict, detail);
        if verdict == Verdict::Fail {
            break;
        }
    }
    report
}
