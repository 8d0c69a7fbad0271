mod common;

use common::*;
use sgc_core::dsl::parse_word;
use sgc_core::library::{build_p1, build_p2, build_v, build_v_with, build_x, match_relators, normalize_relators, BuildOptions};
use sgc_core::Presentation;

fn complement(state: &sgc_core::manifold::ManifoldState, surface: &str) -> Presentation {
    state.surface(surface).unwrap().complement.clone().unwrap()
}

/// Every reference relator is a generated relator, letter for letter.
fn assert_exact(p: &Presentation, reference: &[&str]) {
    for r in reference {
        let w = parse_word(p.alphabet(), r).unwrap();
        assert!(p.relators().contains(&w), "{r} = `{w}` not among {:?}", texts(p));
    }
}

#[test]
fn v_golden() {
    golden("v.txt", &lines(&build_v().unwrap().pi1));
}

#[test]
fn p1_golden() {
    golden("p1.txt", &lines(&complement(&build_p1().unwrap(), "H1")));
}

#[test]
fn p2_golden() {
    golden("p2.txt", &lines(&complement(&build_p2().unwrap(), "H2")));
}

#[test]
fn x_golden() {
    golden("x.txt", &lines(&build_x().unwrap().pi1));
}

#[test]
fn v_matches_reference_exactly() {
    let v = build_v().unwrap().pi1;
    assert_eq!(v.relators().len(), 6);
    assert_exact(&v, &V_REFERENCE);
}

#[test]
fn v_second_surgery_relator_before_normalization() {
    // as the surgery produces it: [s1^-1, t2] = t2 s2 t2^-1
    let raw = build_v_with(BuildOptions { normalize: false, ..Default::default() }).unwrap().pi1;
    assert_exact(&raw, &["[s1^-1, t2] (t2 s2 t2^-1)^-1"]);
    let (normalized, proofs) = normalize_relators(&raw);
    assert_eq!(proofs.len(), 1);
    assert!(proofs[0].verify());
    assert_eq!(proofs[0].before.to_string(), "s1^-1 t2 s1 s2^-1 t2^-1");
    assert_eq!(proofs[0].after.to_string(), "t2^-1 s1^-1 t2 s1 s2^-1");
    assert_eq!(texts(&normalized), texts(&build_v().unwrap().pi1));
}

#[test]
fn p1_matches_reference() {
    let p1 = complement(&build_p1().unwrap(), "H1");
    assert_eq!(p1.relators().len(), 6);
    assert_exact(&p1, &P1_REFERENCE[..5]);
    // [x1, y1] comes out rotated as [y1^-1, x1]
    let w = parse_word(p1.alphabet(), P1_REFERENCE[5]).unwrap();
    assert_exact(&p1, &["[y1^-1, x1]"]);
    assert!(parse_word(p1.alphabet(), "[y1^-1, x1]").unwrap().conjugacy_witness(&w).is_some());
}

#[test]
fn p2_matches_reference() {
    let p2 = complement(&build_p2().unwrap(), "H2");
    assert_eq!(p2.relators().len(), 6);
    assert_exact(&p2, &P2_REFERENCE[..5]);
    let w = parse_word(p2.alphabet(), P2_REFERENCE[5]).unwrap();
    assert_exact(&p2, &["[y2^-1, x2]"]);
    assert!(parse_word(p2.alphabet(), "[y2^-1, x2]").unwrap().conjugacy_witness(&w).is_some());
}

#[test]
fn x_relations_one_to_twenty() {
    let x = build_x().unwrap().pi1;
    assert_eq!(x.alphabet().names(), ["x1", "y1", "s1", "t1", "x2", "y2", "s2", "t2"]);
    assert_eq!(x.relators().len(), 20);
    let reference = numbered_reference(x.alphabet());
    let idx = match_relators(&x, &reference).unwrap();
    let mut seen = idx.clone();
    seen.sort_unstable();
    seen.dedup();
    assert_eq!(seen.len(), 20, "each relation matches its own relator");
}

#[test]
fn relabeling_drops_nothing() {
    // wrong relators are caught
    let x = build_x().unwrap().pi1;
    let bogus = parse_word(x.alphabet(), "[x1, s2]").unwrap();
    assert_eq!(match_relators(&x, &[bogus]), Err(0));
}
