mod common;

use common::*;
use sgc_core::library::{build_x, replay_kill_order};

#[test]
fn every_generator_dies_in_order() {
    let x = build_x().unwrap().pi1;
    let numbered = numbered_relators(&x);
    let steps = replay_kill_order(x.alphabet(), &numbered, &kill_steps(), 1_000).unwrap();
    assert_eq!(steps.len(), 8);
    for s in &steps {
        assert!(s.killed, "step {} ({}) left {}", s.step, s.generator, s.residue);
        assert!(s.missing.is_empty());
    }
    let order: Vec<&str> = steps.iter().map(|s| s.generator.as_str()).collect();
    assert_eq!(order, ["y1", "y2", "t1", "s1", "s2", "t2", "x1", "x2"]);
}

#[test]
fn without_relation_19_the_first_step_fails() {
    let x = build_x().unwrap().pi1;
    let mut numbered = numbered_relators(&x);
    numbered.remove(&19);
    let steps = replay_kill_order(x.alphabet(), &numbered, &kill_steps(), 1_000).unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0].generator, "y1");
    assert!(!steps[0].killed);
    assert_eq!(steps[0].missing, [19]);
    assert_ne!(steps[0].residue, "1");
}

#[test]
fn skipping_ahead_fails() {
    // s1 cannot die before t1: relation 19 alone leaves [t2^-1, t1^-1]
    let x = build_x().unwrap().pi1;
    let numbered = numbered_relators(&x);
    let steps = replay_kill_order(x.alphabet(), &numbered, &kill_steps()[3..4], 1_000).unwrap();
    assert!(!steps[0].killed);
}
