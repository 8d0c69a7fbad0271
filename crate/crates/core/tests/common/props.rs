//! Randomized checks of the group engine against slow independent oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use sgc_core::dsl::parse_word;
use sgc_core::presentations::smith_normal_form;
use sgc_core::{todd_coxeter, Alphabet, Exactness, Presentation, Word};

const NAMES: [&str; 3] = ["a", "b", "c"];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() })
}

fn raw_word() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..NAMES.len(), prop_oneof![-3i64..=-1, 1i64..=3]), 0..12)
}

fn word(al: &Alphabet, raw: &[(usize, i64)]) -> Word {
    let named: Vec<(&str, i64)> = raw.iter().map(|&(g, e)| (NAMES[g], e)).collect();
    Word::reduce(al, &named).unwrap()
}

/// Free reduction done the slow way: expand to ±1 letters and cancel on a stack.
fn naive_reduce(raw: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut stack: Vec<(usize, i64)> = Vec::new();
    for &(g, e) in raw {
        for _ in 0..e.abs() {
            let s = e.signum();
            if stack.last() == Some(&(g, -s)) {
                stack.pop();
            } else {
                stack.push((g, s));
            }
        }
    }
    stack
}

pub fn word_laws(cases: u32) -> Result<(), String> {
    let al = Alphabet::new(NAMES).unwrap();
    runner(cases)
        .run(&(raw_word(), raw_word(), raw_word()), |(u, v, w)| {
            let (wu, wv, ww) = (word(&al, &u), word(&al, &v), word(&al, &w));

            // reduction is idempotent and agrees with stack cancellation
            prop_assert_eq!(&Word::from_letters(&al, wu.letters()), &wu);
            let naive = naive_reduce(&u);
            prop_assert_eq!(wu.len(), naive.len());
            let spelled: Vec<(usize, i64)> =
                wu.letters().iter().map(|l| (l.generator.0, if l.inverse { -1 } else { 1 })).collect();
            prop_assert_eq!(spelled, naive);

            // inversion is an involution and an anti-homomorphism
            prop_assert_eq!(&wu.invert().invert(), &wu);
            prop_assert!(wu.multiply(&wu.invert()).unwrap().is_identity());
            prop_assert_eq!(wu.multiply(&wv).unwrap().invert(), wv.invert().multiply(&wu.invert()).unwrap());

            let left = wu.multiply(&wv).unwrap().multiply(&ww).unwrap();
            let right = wu.multiply(&wv.multiply(&ww).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);

            // commutator antisymmetry, and [u,v] = u v u^-1 v^-1
            let c = wu.commutator(&wv).unwrap();
            prop_assert_eq!(c.invert(), wv.commutator(&wu).unwrap());
            let spelled = wu.multiply(&wv).unwrap().multiply(&wu.invert()).unwrap().multiply(&wv.invert()).unwrap();
            prop_assert_eq!(&c, &spelled);

            prop_assert_eq!(parse_word(&al, &wu.to_string()).unwrap(), wu.clone());

            let (r, _) = wu.cyclic_reduction();
            if !r.is_identity() {
                let k = u.len() % r.len();
                prop_assert!(r.conjugacy_witness(&r.rotate(k)).is_some());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    // cofactor expansion along the first row
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// gcd of all k×k minors.
fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(m.len(), k) {
        for cols in subsets(m[0].len(), k) {
            let sub: Vec<Vec<BigInt>> = rows.iter().map(|&r| cols.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

/// Divisibility chain, and d1 ... dk equal to the gcd of the k×k minors,
/// on random 4×6 matrices with entries in [-9, 9].
pub fn smith_chain(cases: u32) -> Result<(), String> {
    let matrix = prop::collection::vec(prop::collection::vec(-9i64..=9, 6), 4);
    runner(cases)
        .run(&matrix, |m| {
            let d = smith_normal_form(&m);
            prop_assert_eq!(d.len(), 4);
            for i in 0..3 {
                prop_assert!(!d[i].is_negative());
                if d[i].is_zero() {
                    prop_assert!(d[i + 1].is_zero());
                } else {
                    prop_assert!(d[i + 1].is_multiple_of(&d[i]));
                }
            }
            let mut product = BigInt::one();
            for k in 1..=4 {
                product *= &d[k - 1];
                prop_assert_eq!(&product, &determinantal_divisor(&m, k));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// On square matrices the diagonal multiplies out to |det|.
pub fn smith_determinant(cases: u32) -> Result<(), String> {
    let matrix = prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 4);
    runner(cases)
        .run(&matrix, |m| {
            let d = smith_normal_form(&m);
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(d.iter().product::<BigInt>(), det(&big).abs());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// ⟨a, b | a^m, b^n, [a, b]⟩ has order mn by enumeration and by homology.
pub fn abelian_orders(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(1u32..=8, 1u32..=8), |(m, n)| {
            let al = Alphabet::new(["a", "b"]).unwrap();
            let rels = [format!("a^{m}"), format!("b^{n}"), "[a, b]".to_string()];
            let p = Presentation::new(al.clone(), rels.iter().map(|r| parse_word(&al, r).unwrap()).collect(), Exactness::Exact)
                .unwrap();
            let order = (m * n) as usize;
            prop_assert_eq!(todd_coxeter(&p, &[], 10_000).unwrap().index(), Some(order));
            prop_assert_eq!(p.homology_invariants().finite_order(), Some(BigInt::from(order)));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

type Perm = Vec<usize>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    // apply p, then q
    p.iter().map(|&i| q[i]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = i;
    }
    out
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

fn evaluate(w: &Word, images: &[Perm]) -> Perm {
    let mut acc = identity(images[0].len());
    for l in w.letters() {
        let g = &images[l.generator.0];
        acc = compose(&acc, &if l.inverse { inverse(g) } else { g.clone() });
    }
    acc
}

/// Close the generators under multiplication, build the full
/// multiplication table, and return the group order.
fn table_order(images: &[Perm]) -> Result<usize, String> {
    let mut elems: Vec<Perm> = vec![identity(images[0].len())];
    let mut i = 0;
    while i < elems.len() {
        for g in images {
            let h = compose(&elems[i], g);
            if !elems.contains(&h) {
                elems.push(h);
            }
        }
        i += 1;
    }
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| elems.iter().position(|c| *c == compose(a, b)).expect("closed")).collect())
        .collect();
    // every row of a group table is a permutation of the elements
    let all: Vec<usize> = (0..elems.len()).collect();
    for row in &table {
        let mut r = row.clone();
        r.sort_unstable();
        if r != all {
            return Err("multiplication table is not a Latin square".into());
        }
    }
    Ok(elems.len())
}

fn cycle(n: usize) -> Perm {
    (0..n).map(|i| (i + 1) % n).collect()
}

pub struct Case {
    pub name: String,
    generators: Vec<&'static str>,
    relators: Vec<String>,
    /// A faithful permutation model.
    model: Vec<Perm>,
}

pub fn corpus() -> Vec<Case> {
    let mut out: Vec<Case> = (1..=12)
        .map(|n| Case { name: format!("C{n}"), generators: vec!["a"], relators: vec![format!("a^{n}")], model: vec![cycle(n)] })
        .collect();
    let mut add = |name: &str, generators: Vec<&'static str>, relators: &[&str], model: Vec<Perm>| {
        out.push(Case { name: name.into(), generators, relators: relators.iter().map(|r| r.to_string()).collect(), model });
    };
    add("Klein four", vec!["a", "b"], &["a^2", "b^2", "(a b)^2"], vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]);
    add("S3", vec!["s", "t"], &["s^2", "t^3", "(s t)^2"], vec![vec![1, 0, 2], vec![1, 2, 0]]);
    add("S3 as a Coxeter group", vec!["a", "b"], &["a^2", "b^2", "(a b)^3"], vec![vec![1, 0, 2], vec![0, 2, 1]]);
    add("D4", vec!["r", "f"], &["r^4", "f^2", "(r f)^2"], vec![cycle(4), vec![0, 3, 2, 1]]);
    add("A4", vec!["a", "b"], &["a^2", "b^3", "(a b)^3"], vec![vec![1, 0, 3, 2], vec![0, 2, 3, 1]]);
    out
}

fn element_order(p: &Perm) -> usize {
    let id = identity(p.len());
    let mut acc = p.clone();
    let mut k = 1;
    while acc != id {
        acc = compose(&acc, p);
        k += 1;
    }
    k
}

/// Enumeration over the trivial subgroup and over ⟨first generator⟩
/// against the orders read off the model's multiplication table.
pub fn todd_coxeter_case(case: &Case) -> Result<usize, String> {
    let al = Alphabet::new(case.generators.clone()).unwrap();
    let rels: Vec<Word> = case.relators.iter().map(|r| parse_word(&al, r).unwrap()).collect();
    let id = identity(case.model[0].len());
    for r in &rels {
        if evaluate(r, &case.model) != id {
            return Err(format!("{}: model violates {r}", case.name));
        }
    }
    let order = table_order(&case.model)?;
    let p = Presentation::new(al.clone(), rels, Exactness::Exact).unwrap();
    let got = todd_coxeter(&p, &[], 10_000).unwrap().index();
    if got != Some(order) {
        return Err(format!("{}: enumeration gave {got:?}, table gave {order}", case.name));
    }
    let g = al.letter(case.generators[0]).unwrap();
    let want = order / element_order(&case.model[0]);
    let got = todd_coxeter(&p, &[g], 10_000).unwrap().index();
    if got != Some(want) {
        return Err(format!("{}: subgroup index {got:?}, expected {want}", case.name));
    }
    Ok(order)
}
