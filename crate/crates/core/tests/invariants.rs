mod common;

use common::*;
use sgc_core::library::{build_p, build_v, build_w, build_x};
use sgc_core::presentations::smith_normal_form;

#[test]
fn euler_and_signature() {
    let got: Vec<(i64, i64)> =
        [build_v(), build_w(), build_p(), build_x()].into_iter().map(|s| s.unwrap()).map(|s| (s.euler, s.signature)).collect();
    assert_eq!(got, [(0, 0), (2, -2), (0, 0), (6, -2)]);
}

#[test]
fn sum_formula_by_hand() {
    // e(X) = e(P) + e(W) - 2 e(F) with F of genus 2
    let (p, w, x) = (build_p().unwrap(), build_w().unwrap(), build_x().unwrap());
    assert_eq!(x.euler, p.euler + w.euler - 2 * (2 - 2 * 2));
    assert_eq!(x.signature, p.signature + w.signature);
    // b+ - b- = sigma and 2 + b+ + b- = e for a simply connected X
    let (bp, bm) = ((x.euler - 2 + x.signature) / 2, (x.euler - 2 - x.signature) / 2);
    assert_eq!((bp, bm), (1, 3));
}

#[test]
fn v_exponent_matrix_and_homology() {
    let v = build_v().unwrap().pi1;
    assert_eq!(v.alphabet().names(), ["s1", "t1", "s2", "t2"]);
    // commutators vanish; the two surgery relators leave -s1 and -s2
    let mut expected = vec![vec![0i64; 4]; 6];
    for (i, r) in texts(&v).iter().enumerate() {
        match r.as_str() {
            "t2^-1 t1^-1 t2 t1 s1^-1" => expected[i][0] = -1,
            "t2^-1 s1^-1 t2 s1 s2^-1" => expected[i][2] = -1,
            _ => {}
        }
    }
    assert_eq!(v.abelianize(), expected);
    let h = v.homology_invariants();
    assert_eq!((h.free_rank, h.torsion.len()), (2, 0));
    assert_eq!(h.to_string(), "Z^2");
}

fn det(m: &[Vec<i64>]) -> i128 {
    // fraction-free elimination
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

#[test]
fn x_homology_vanishes() {
    let x = build_x().unwrap().pi1;
    let m = x.abelianize();
    assert_eq!((m.len(), m[0].len()), (20, 8));
    assert!(smith_normal_form(&m).iter().all(|d| *d == 1.into()));
    assert!(x.homology_invariants().is_trivial());
    // oracle: some 8 relator rows form a unimodular matrix
    let unimodular = combinations(20, 8).into_iter().find(|rows| {
        let sub: Vec<Vec<i64>> = rows.iter().map(|&r| m[r].clone()).collect();
        det(&sub).abs() == 1
    });
    assert!(unimodular.is_some());
}

#[test]
fn determinant_helper() {
    assert_eq!(det(&[vec![2, 1], vec![7, 4]]), 1);
    assert_eq!(det(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 3]]), -3);
}
