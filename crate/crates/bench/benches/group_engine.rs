use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sgc_core::coset_enum::DEFAULT_MAX_COSETS;
use sgc_core::dsl::parse_word;
use sgc_core::library::{build_x, verify_main_theorem};
use sgc_core::presentations::smith_normal_form;
use sgc_core::report::Budget;
use sgc_core::{tietze_simplify, todd_coxeter, Alphabet, Exactness, Presentation};

fn x_group(c: &mut Criterion) {
    let x = build_x().unwrap().pi1;
    c.bench_function("build X", |b| b.iter(|| build_x().unwrap()));
    c.bench_function("todd-coxeter X", |b| b.iter(|| todd_coxeter(black_box(&x), &[], DEFAULT_MAX_COSETS).unwrap()));
    c.bench_function("tietze X", |b| b.iter(|| tietze_simplify(black_box(&x), 10_000).unwrap()));
    c.bench_function("smith X", |b| b.iter(|| smith_normal_form(black_box(&x.abelianize()))));
    c.bench_function("verify-paper", |b| b.iter(|| verify_main_theorem(Budget::default())));
}

fn finite_groups(c: &mut Criterion) {
    let al = Alphabet::new(["s", "t"]).unwrap();
    let rels = ["(s t)^2 s^-3", "s^3 t^-5"].iter().map(|r| parse_word(&al, r).unwrap()).collect();
    let p = Presentation::new(al, rels, Exactness::Exact).unwrap();
    c.bench_function("todd-coxeter order 120", |b| b.iter(|| todd_coxeter(black_box(&p), &[], DEFAULT_MAX_COSETS).unwrap()));
}

criterion_group!(benches, x_group, finite_groups);
criterion_main!(benches);
